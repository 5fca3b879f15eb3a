#include "gaussalg/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace gaussalg {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw std::domain_error("not a rational literal: '" + text + "'");
    }
    if (sgn(q.get_den()) == 0) {
        throw std::domain_error("rational with zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::operator+(const Rational& other) const {
    return Rational(mpq_class(value_ + other.value_));
}

Rational Rational::operator-(const Rational& other) const {
    return Rational(mpq_class(value_ - other.value_));
}

Rational Rational::operator*(const Rational& other) const {
    return Rational(mpq_class(value_ * other.value_));
}

Rational Rational::operator/(const Rational& other) const {
    if (other.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    return Rational(mpq_class(value_ / other.value_));
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(unsigned exponent) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
    // num/den already coprime, so the powers are too
    return Rational(std::move(r));
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(r));
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    int c = cmp(value_, other.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (value_.get_den() == 1) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace gaussalg
