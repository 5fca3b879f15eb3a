#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace gaussalg {

/// Exact rational number. Kept in lowest terms with a positive denominator
/// at all times; every operation is exact. Backed by GMP.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit integer promotion is wanted
    Rational(int n) : value_(n) {}   // NOLINT

    /// n/d reduced to lowest terms. Throws std::domain_error if d == 0.
    Rational(long numerator, long denominator);

    /// Accepts "n" or "n/d" with optional sign, arbitrary precision.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    /// -1, 0, or +1.
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;
    /// Throws std::domain_error on division by zero.
    Rational operator/(const Rational& other) const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);

    Rational abs() const;
    Rational pow(unsigned exponent) const;
    Rational reciprocal() const;

    bool operator==(const Rational& other) const { return value_ == other.value_; }
    std::strong_ordering operator<=>(const Rational& other) const;

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;
    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }
    double to_double() const { return value_.get_d(); }

private:
    explicit Rational(mpq_class q) : value_(std::move(q)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace gaussalg
