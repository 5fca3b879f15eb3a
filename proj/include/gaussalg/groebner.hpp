#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "gaussalg/polynomial.hpp"

namespace gaussalg {

/// Generator list for a polynomial ideal. Zero generators are dropped at
/// construction; all generators must share one ring.
struct Ideal {
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    RingPtr ring;
    std::vector<Polynomial> generators;
};

/// Reduced Groebner basis: every element monic, no monomial of any element
/// divisible by the leading monomial of another. Elements are sorted by
/// leading monomial, descending, so equal ideals give identical lists.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> elements;
    MonomialOrder order;
    bool reduced = true;

    bool is_zero_ideal() const { return elements.empty(); }
    bool is_unit_ideal() const;
};

struct BuchbergerOptions {
    /// Abort with ResourceLimitError once this many critical pairs have
    /// been processed.
    std::size_t max_pairs = 100000;
};

/// Remainder of f under multivariate division by G: no monomial of the
/// result is divisible by any leading monomial of G, and f minus the result
/// lies in the ideal generated by G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order);

/// Buchberger's algorithm with normal pair selection and the coprime-lcm and
/// chain pair-elimination criteria; output is the unique reduced basis.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

/// Krull dimension of the quotient by the ideal, from the staircase of
/// leading monomials: the largest variable subset S such that no leading
/// monomial is supported entirely inside S. Unit ideal gives -1, zero ideal
/// the full variable count.
int ideal_dimension(const GroebnerBasis& basis);

/// Number of standard monomials (monomials outside the leading-term ideal);
/// equal to the solution count with multiplicity. Requires dimension 0.
long multiplicity(const GroebnerBasis& basis);

/// Generators of the elimination ideal: all elements of the input ideal not
/// involving the dropped variables. Result lives in the original ring.
Ideal eliminate(const Ideal& ideal, const std::set<std::size_t>& drop_vars,
                const BuchbergerOptions& options = {});

/// Intersection of two ideals of one ring via the auxiliary-variable trick
/// t*I + (1-t)*J followed by elimination of t.
Ideal ideal_intersect(const Ideal& a, const Ideal& b, const BuchbergerOptions& options = {});

/// The input generators together with all codim-by-codim minors of their
/// Jacobian. When codim is the codimension of the variety, the result cuts
/// out exactly its singular locus.
Ideal singular_locus_ideal(const Ideal& ideal, unsigned codim);

}  // namespace gaussalg
