#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gaussalg/monomial.hpp"
#include "gaussalg/rational.hpp"
#include "gaussalg/ring.hpp"

namespace gaussalg {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Always in canonical form: the term map holds only nonzero coefficients,
/// so two polynomials are equal iff their term maps are equal. The zero
/// polynomial has an empty map. Immutable value type; all operations are
/// pure and exact.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Rational value);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial term(RingPtr ring, Monomial monomial, Rational coefficient);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Max total degree over terms; 0 for the zero polynomial.
    unsigned total_degree() const;
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& factor) const;
    /// this * (c * m), fused for speed in reduction loops.
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    bool operator==(const Polynomial& other) const;

    /// Formal partial derivative with respect to variable `var`.
    Polynomial derivative(std::size_t var) const;
    /// Exact evaluation; point length must equal the ring size.
    Rational evaluate(std::span<const Rational> point) const;
    double evaluate_double(std::span<const double> point) const;
    /// Substitute args[i] for variable i; all args must share one ring.
    Polynomial compose(const std::vector<Polynomial>& args) const;

    /// Leading data under `order`; polynomial must be nonzero.
    const Monomial& leading_monomial(const MonomialOrder& order) const;
    const Rational& leading_coefficient(const MonomialOrder& order) const;
    Polynomial monic(const MonomialOrder& order) const;

    /// Grammar text, terms in descending lex order. parse round-trips it.
    std::string str() const;

private:
    void insert_term(Monomial m, Rational c);
    static void check_same_ring(const Polynomial& a, const Polynomial& b);

    RingPtr ring_;
    TermMap terms_;

    friend Polynomial parse_polynomial(const std::string&, RingPtr);
};

/// Parse the textual grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT ('/' INT)? | VAR ('^' INT)? | '(' poly ')'
/// Whitespace is insignificant; multiplication is always explicit.
/// Throws ParseError / UnknownVariableError.
Polynomial parse_polynomial(const std::string& text, RingPtr ring);

}  // namespace gaussalg
