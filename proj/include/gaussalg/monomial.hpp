#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gaussalg {

/// Exponent vector of a power product. The length always equals the variable
/// count of the owning ring; entries are non-negative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars, 0u)); }
    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    std::size_t nvars() const { return exps_.size(); }
    unsigned exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }
    unsigned degree() const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Componentwise difference; requires other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// Canonical (storage) comparison: plain lexicographic on exponent
    /// vectors. Independent of any term order; used only to key term maps.
    auto operator<=>(const Monomial& other) const = default;

private:
    std::vector<unsigned> exps_;
};

/// A total, multiplicative well-order on monomials of one ring.
///   lex        - lexicographic, first variable strongest
///   degrevlex  - total degree, ties by reverse lexicographic ("dp")
///   block(k)   - elimination order: degrevlex on the first k variables,
///                ties broken by degrevlex on the rest
class MonomialOrder {
public:
    enum class Kind { lex, degrevlex, block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
    static MonomialOrder block_elimination(std::size_t leading_block_size) {
        return MonomialOrder(Kind::block, leading_block_size);
    }

    Kind kind() const { return kind_; }
    std::size_t block_size() const { return block_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string str() const;
    bool operator==(const MonomialOrder& other) const = default;

private:
    MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}
    Kind kind_;
    std::size_t block_;
};

}  // namespace gaussalg
