#include "gaussalg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gaussalg {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    std::vector<unsigned> e(nvars, 0u);
    e.at(index) = power;
    return Monomial(std::move(e));
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<unsigned> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + other.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<unsigned> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (other.exps_[i] > exps_[i]) throw std::invalid_argument("monomial not divisible");
        e[i] = exps_[i] - other.exps_[i];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
}

namespace {

// degrevlex on a contiguous index range [lo, hi): higher total degree wins;
// on ties the monomial with the smaller exponent at the last differing
// position wins.
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                     std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t i = hi; i > lo; --i) {
        unsigned ea = a.exponent(i - 1), eb = b.exponent(i - 1);
        if (ea != eb) return ea > eb ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) {
        throw std::invalid_argument("comparing monomials of different rings");
    }
    switch (kind_) {
        case Kind::lex:
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                unsigned ea = a.exponent(i), eb = b.exponent(i);
                if (ea != eb)
                    return ea < eb ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        case Kind::degrevlex:
            return degrevlex_range(a, b, 0, a.nvars());
        case Kind::block: {
            std::size_t k = std::min(block_, a.nvars());
            auto head = degrevlex_range(a, b, 0, k);
            if (head != 0) return head;
            return degrevlex_range(a, b, k, a.nvars());
        }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::str() const {
    switch (kind_) {
        case Kind::lex: return "lex";
        case Kind::degrevlex: return "dp";
        case Kind::block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        if (!fresh) throw std::invalid_argument("duplicate ring variable '" + names_[i] + "'");
    }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
    Polynomial p(std::move(ring));
    if (!value.is_zero()) p.terms_.emplace(Monomial::one(p.ring_->size()), std::move(value));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    p.terms_.emplace(Monomial::variable(p.ring_->size(), index), Rational(1));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial monomial, Rational coefficient) {
    Polynomial p(std::move(ring));
    if (monomial.nvars() != p.ring_->size()) {
        throw std::invalid_argument("monomial length does not match ring");
    }
    if (!coefficient.is_zero()) p.terms_.emplace(std::move(monomial), std::move(coefficient));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::insert_term(Monomial m, Rational c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) {
        throw std::invalid_argument("polynomials from different rings");
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_ring(*this, other);
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (const auto& [m, c] : other.terms_) r.insert_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    check_same_ring(*this, other);
    Polynomial r(ring_);
    r.terms_ = terms_;
    for (const auto& [m, c] : other.terms_) r.insert_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_ring(*this, other);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) r.insert_term(ma * mb, ca * cb);
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    Polynomial r(ring_);
    if (factor.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * factor);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_->size()) throw std::out_of_range("derivative variable out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent(var);
        if (e == 0) continue;
        std::vector<unsigned> exps = m.exponents();
        exps[var] = e - 1;
        r.terms_.emplace(Monomial(std::move(exps)), c * Rational(static_cast<long>(e)));
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("point length mismatch");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            unsigned e = m.exponent(i);
            if (e > 0) v *= point[i].pow(e);
        }
        sum += v;
    }
    return sum;
}

double Polynomial::evaluate_double(std::span<const double> point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("point length mismatch");
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.to_double();
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (unsigned e = 0; e < m.exponent(i); ++e) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

namespace {

Polynomial poly_pow(const Polynomial& base, unsigned e) {
    Polynomial acc = Polynomial::constant(base.ring(), Rational(1));
    Polynomial sq = base;
    while (e > 0) {
        if (e & 1u) acc = acc * sq;
        e >>= 1u;
        if (e > 0) sq = sq * sq;
    }
    return acc;
}

}  // namespace

Polynomial Polynomial::compose(const std::vector<Polynomial>& args) const {
    if (args.size() != ring_->size()) {
        throw std::invalid_argument("compose needs one argument per variable");
    }
    RingPtr target = args.empty() ? ring_ : args.front().ring();
    for (const auto& a : args) {
        if (!same_ring(a.ring(), target)) {
            throw std::invalid_argument("compose arguments from different rings");
        }
    }
    Polynomial sum(target);
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < args.size(); ++i) {
            unsigned e = m.exponent(i);
            if (e > 0) prod = prod * poly_pow(args[i], e);
        }
        sum = sum + prod;
    }
    return sum;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
    if (is_zero()) throw std::invalid_argument("leading monomial of zero polynomial");
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        if (order.greater(m, *best)) best = &m;
    }
    return *best;
}

const Rational& Polynomial::leading_coefficient(const MonomialOrder& order) const {
    return terms_.at(leading_monomial(order));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient(order).reciprocal());
}

}  // namespace gaussalg
