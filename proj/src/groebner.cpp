#include "gaussalg/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gaussalg/errors.hpp"

namespace gaussalg {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring)) {
            throw std::invalid_argument("ideal generator from a different ring");
        }
        generators.push_back(std::move(g));
    }
}

bool GroebnerBasis::is_unit_ideal() const {
    return std::any_of(elements.begin(), elements.end(),
                       [](const Polynomial& g) { return g.is_constant() && !g.is_zero(); });
}

namespace {

// Working representation inside the division/Buchberger loops: terms sorted
// descending under the active order, leading term at the front.
struct OrderedPoly {
    std::vector<std::pair<Monomial, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().first; }
    const Rational& lc() const { return terms.front().second; }
};

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
    OrderedPoly r;
    r.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(r.terms.begin(), r.terms.end(),
              [&order](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return r;
}

Polynomial from_ordered(const OrderedPoly& p, const RingPtr& ring) {
    Polynomial sum = Polynomial::zero(ring);
    for (const auto& [m, c] : p.terms) sum = sum + Polynomial::term(ring, m, c);
    return sum;
}

// a -= c * x^shift * b, merging two descending term lists.
OrderedPoly subtract_multiple(const OrderedPoly& a, const Rational& c, const Monomial& shift,
                              const OrderedPoly& b, const MonomialOrder& order) {
    OrderedPoly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t ia = 0, ib = 0;
    while (ia < a.terms.size() || ib < b.terms.size()) {
        if (ib == b.terms.size()) {
            r.terms.push_back(a.terms[ia++]);
            continue;
        }
        Monomial mb = b.terms[ib].first * shift;
        if (ia == a.terms.size()) {
            Rational cc = -(c * b.terms[ib].second);
            if (!cc.is_zero()) r.terms.emplace_back(std::move(mb), std::move(cc));
            ++ib;
            continue;
        }
        auto cmp = order.compare(a.terms[ia].first, mb);
        if (cmp > 0) {
            r.terms.push_back(a.terms[ia++]);
        } else if (cmp < 0) {
            Rational cc = -(c * b.terms[ib].second);
            if (!cc.is_zero()) r.terms.emplace_back(std::move(mb), std::move(cc));
            ++ib;
        } else {
            Rational cc = a.terms[ia].second - c * b.terms[ib].second;
            if (!cc.is_zero()) r.terms.emplace_back(std::move(mb), std::move(cc));
            ++ia;
            ++ib;
        }
    }
    return r;
}

// Full multivariate division: every monomial of the remainder avoids all
// leading monomials of the divisors.
OrderedPoly reduce_full(OrderedPoly f, const std::vector<OrderedPoly>& divisors,
                        const MonomialOrder& order) {
    OrderedPoly remainder;
    while (!f.is_zero()) {
        const Monomial& lead = f.lm();
        bool reduced = false;
        for (const OrderedPoly& g : divisors) {
            if (!g.lm().divides(lead)) continue;
            Monomial shift = lead / g.lm();
            Rational factor = f.lc() / g.lc();
            f = subtract_multiple(f, factor, shift, g, order);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.terms.push_back(f.terms.front());
            f.terms.erase(f.terms.begin());
        }
    }
    return remainder;
}

void make_monic(OrderedPoly& p) {
    if (p.is_zero() || p.lc().is_one()) return;
    Rational inv = p.lc().reciprocal();
    for (auto& [m, c] : p.terms) c *= inv;
}

// S-polynomial of two monic polynomials.
OrderedPoly s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    OrderedPoly lifted;
    lifted.terms.reserve(f.terms.size());
    Monomial shift_f = l / f.lm();
    for (const auto& [m, c] : f.terms) lifted.terms.emplace_back(m * shift_f, c);
    return subtract_multiple(lifted, Rational(1), l / g.lm(), g, order);
}

struct Pair {
    unsigned degree;   // total degree of the lcm, for normal selection
    Monomial lcm;
    std::size_t i, j;  // i < j

    bool operator<(const Pair& other) const {
        if (degree != other.degree) return degree < other.degree;
        if (lcm != other.lcm) return lcm < other.lcm;
        if (i != other.i) return i < other.i;
        return j < other.j;
    }
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& order) {
    std::vector<OrderedPoly> d;
    for (const auto& g : divisors) {
        if (!same_ring(g.ring(), f.ring())) {
            throw std::invalid_argument("normal_form divisors from a different ring");
        }
        if (!g.is_zero()) d.push_back(to_ordered(g, order));
    }
    return from_ordered(reduce_full(to_ordered(f, order), d, order), f.ring());
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
    GroebnerBasis result{ideal.ring, {}, order, true};
    if (ideal.generators.empty()) return result;

    std::vector<OrderedPoly> basis;
    std::set<Pair> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(basis[i].lm(), basis[j].lm());
            queue.insert(Pair{l.degree(), l, i, j});
            pending.emplace(i, j);
        }
    };

    for (const auto& g : ideal.generators) {
        OrderedPoly og = to_ordered(g, order);
        make_monic(og);
        basis.push_back(std::move(og));
        add_pairs_for(basis.size() - 1);
    }

    std::size_t processed = 0;
    while (!queue.empty()) {
        Pair pair = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pair.i, pair.j});

        if (++processed > options.max_pairs) {
            throw ResourceLimitError("buchberger pair budget exceeded (" +
                                     std::to_string(options.max_pairs) + " pairs)");
        }

        const OrderedPoly& f = basis[pair.i];
        const OrderedPoly& g = basis[pair.j];

        // Criterion 1: coprime leading monomials reduce to zero.
        if (f.lm().coprime_with(g.lm())) continue;

        // Criterion 2 (chain): skip if some other element divides the lcm and
        // both connecting pairs were already handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].lm().divides(pair.lcm)) continue;
            auto key_ik = std::minmax(pair.i, k);
            auto key_jk = std::minmax(pair.j, k);
            if (!pending.count({key_ik.first, key_ik.second}) &&
                !pending.count({key_jk.first, key_jk.second})) {
                chained = true;
            }
        }
        if (chained) continue;

        OrderedPoly s = s_polynomial(f, g, order);
        OrderedPoly r = reduce_full(std::move(s), basis, order);
        if (r.is_zero()) continue;
        make_monic(r);
        basis.push_back(std::move(r));
        add_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial is divisible by the
    // leading monomial of another kept element.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!basis[j].lm().divides(basis[i].lm())) continue;
            // On equal leading monomials keep the earlier element.
            if (basis[j].lm() == basis[i].lm()) {
                redundant = j < i;
            } else {
                redundant = true;
            }
        }
        if (!redundant) keep.push_back(i);
    }

    std::vector<Polynomial> minimal;
    for (std::size_t i : keep) minimal.push_back(from_ordered(basis[i], ideal.ring));

    // Tail-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> rest;
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) rest.push_back(minimal[j]);
            }
            Polynomial reduced = normal_form(minimal[i], rest, order).monic(order);
            if (!(reduced == minimal[i])) {
                minimal[i] = std::move(reduced);
                changed = true;
            }
        }
        std::erase_if(minimal, [](const Polynomial& p) { return p.is_zero(); });
    }

    std::sort(minimal.begin(), minimal.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    result.elements = std::move(minimal);
    return result;
}

int ideal_dimension(const GroebnerBasis& basis) {
    std::size_t n = basis.ring->size();
    if (basis.elements.empty()) return static_cast<int>(n);
    if (basis.is_unit_ideal()) return -1;
    if (n > 31) throw std::invalid_argument("dimension query supports at most 31 variables");

    std::vector<std::uint32_t> supports;
    for (const auto& g : basis.elements) {
        const Monomial& lm = g.leading_monomial(basis.order);
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (lm.exponent(v) > 0) mask |= (1u << v);
        }
        supports.push_back(mask);
    }

    // Largest subset S (as bitmask) with no staircase support inside S.
    auto independent = [&](std::uint32_t set) {
        for (std::uint32_t s : supports) {
            if ((s & ~set) == 0) return false;
        }
        return true;
    };
    for (std::size_t size = n; size > 0; --size) {
        // Gosper iteration over subsets of fixed popcount.
        std::uint32_t subset = (1u << size) - 1u;
        std::uint32_t limit = 1u << n;
        while (subset < limit) {
            if (independent(subset)) return static_cast<int>(size);
            std::uint32_t c = subset & -subset;
            std::uint32_t r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }
    return 0;
}

namespace {

long count_standard_monomials(const std::vector<Monomial>& lms, std::vector<unsigned>& exps,
                              const std::vector<unsigned>& bounds, std::size_t var) {
    if (var == exps.size()) {
        Monomial candidate{std::vector<unsigned>(exps)};
        for (const auto& lm : lms) {
            if (lm.divides(candidate)) return 0;
        }
        return 1;
    }
    long total = 0;
    for (unsigned e = 0; e < bounds[var]; ++e) {
        exps[var] = e;
        total += count_standard_monomials(lms, exps, bounds, var + 1);
    }
    exps[var] = 0;
    return total;
}

}  // namespace

long multiplicity(const GroebnerBasis& basis) {
    int dim = ideal_dimension(basis);
    if (dim != 0) {
        throw std::domain_error("multiplicity requires a zero-dimensional ideal (dimension " +
                                std::to_string(dim) + ")");
    }
    std::size_t n = basis.ring->size();
    std::vector<Monomial> lms;
    for (const auto& g : basis.elements) lms.push_back(g.leading_monomial(basis.order));

    // Zero dimension guarantees a pure power of every variable among the
    // leading monomials; those powers bound the staircase box.
    std::vector<unsigned> bounds(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        unsigned best = 0;
        for (const auto& lm : lms) {
            unsigned e = lm.exponent(v);
            if (e == 0 || e != lm.degree()) continue;  // not a pure power of v
            if (best == 0 || e < best) best = e;
        }
        if (best == 0) throw std::logic_error("zero-dimensional staircase lacks a pure power");
        bounds[v] = best;
    }
    std::vector<unsigned> exps(n, 0);
    return count_standard_monomials(lms, exps, bounds, 0);
}

namespace {

// Rewrite a polynomial into `target` whose variables are a permutation of
// the source ring: new index i holds old variable perm[i].
Polynomial permute_variables(const Polynomial& p, const RingPtr& target,
                             const std::vector<std::size_t>& perm) {
    std::vector<std::size_t> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
    Polynomial out = Polynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e(perm.size(), 0);
        for (std::size_t old = 0; old < perm.size(); ++old) e[inverse[old]] = m.exponent(old);
        out = out + Polynomial::term(target, Monomial(std::move(e)), c);
    }
    return out;
}

}  // namespace

Ideal eliminate(const Ideal& ideal, const std::set<std::size_t>& drop_vars,
                const BuchbergerOptions& options) {
    std::size_t n = ideal.ring->size();
    for (std::size_t v : drop_vars) {
        if (v >= n) throw std::out_of_range("eliminate: variable index out of range");
    }
    if (drop_vars.empty()) {
        return Ideal(ideal.ring, buchberger(ideal, MonomialOrder::degrevlex(), options).elements);
    }

    // Permute the dropped variables to the front so a block order of their
    // count is an elimination order for them.
    std::vector<std::size_t> perm(drop_vars.begin(), drop_vars.end());
    for (std::size_t v = 0; v < n; ++v) {
        if (!drop_vars.count(v)) perm.push_back(v);
    }
    std::vector<std::string> permuted_names;
    for (std::size_t v : perm) permuted_names.push_back(ideal.ring->name(v));
    RingPtr permuted_ring = Ring::make(std::move(permuted_names));

    std::vector<Polynomial> permuted_gens;
    for (const auto& g : ideal.generators) {
        permuted_gens.push_back(permute_variables(g, permuted_ring, perm));
    }

    std::size_t k = drop_vars.size();
    GroebnerBasis gb = buchberger(Ideal(permuted_ring, std::move(permuted_gens)),
                                  MonomialOrder::block_elimination(k), options);

    std::vector<std::size_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = i;

    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements) {
        bool uses_dropped = false;
        for (const auto& [m, c] : g.terms()) {
            for (std::size_t v = 0; v < k && !uses_dropped; ++v) {
                if (m.exponent(v) > 0) uses_dropped = true;
            }
        }
        if (!uses_dropped) kept.push_back(permute_variables(g, ideal.ring, inverse));
    }
    return Ideal(ideal.ring, std::move(kept));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const BuchbergerOptions& options) {
    if (!same_ring(a.ring, b.ring)) {
        throw std::invalid_argument("intersecting ideals from different rings");
    }
    std::size_t n = a.ring->size();
    std::vector<std::string> names;
    names.push_back("@t");  // '@' cannot appear in parsed input, so no clash
    for (const auto& v : a.ring->names()) names.push_back(v);
    RingPtr ext = Ring::make(std::move(names));

    auto lift = [&](const Polynomial& p) {
        Polynomial out = Polynomial::zero(ext);
        for (const auto& [m, c] : p.terms()) {
            std::vector<unsigned> e(n + 1, 0);
            for (std::size_t v = 0; v < n; ++v) e[v + 1] = m.exponent(v);
            out = out + Polynomial::term(ext, Monomial(std::move(e)), c);
        }
        return out;
    };

    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators) gens.push_back(t * lift(f));
    for (const auto& g : b.generators) gens.push_back(one_minus_t * lift(g));

    Ideal elim = eliminate(Ideal(ext, std::move(gens)), {0}, options);

    std::vector<Polynomial> lowered;
    for (const auto& g : elim.generators) {
        Polynomial out = Polynomial::zero(a.ring);
        for (const auto& [m, c] : g.terms()) {
            std::vector<unsigned> e(n, 0);
            for (std::size_t v = 0; v < n; ++v) e[v] = m.exponent(v + 1);
            out = out + Polynomial::term(a.ring, Monomial(std::move(e)), c);
        }
        lowered.push_back(std::move(out));
    }
    return Ideal(a.ring, std::move(lowered));
}

namespace {

Polynomial poly_matrix_det(const std::vector<std::vector<Polynomial>>& m, const RingPtr& ring) {
    std::size_t k = m.size();
    if (k == 1) return m[0][0];
    Polynomial det = Polynomial::zero(ring);
    for (std::size_t col = 0; col < k; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < k; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        Polynomial contrib = m[0][col] * poly_matrix_det(minor, ring);
        det = (col % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Ideal singular_locus_ideal(const Ideal& ideal, unsigned codim) {
    if (codim < 1) throw std::invalid_argument("codim must be at least 1");
    std::size_t n = ideal.ring->size();
    std::size_t t = ideal.generators.size();
    if (codim > std::min(n, t)) {
        throw std::invalid_argument("codim exceeds the Jacobian size");
    }

    std::vector<std::vector<Polynomial>> jacobian;
    for (const auto& g : ideal.generators) {
        std::vector<Polynomial> row;
        for (std::size_t v = 0; v < n; ++v) row.push_back(g.derivative(v));
        jacobian.push_back(std::move(row));
    }

    std::vector<Polynomial> gens = ideal.generators;
    for_each_combination(t, codim, [&](const std::vector<std::size_t>& rows) {
        for_each_combination(n, codim, [&](const std::vector<std::size_t>& cols) {
            std::vector<std::vector<Polynomial>> sub;
            for (std::size_t r : rows) {
                std::vector<Polynomial> row;
                for (std::size_t c : cols) row.push_back(jacobian[r][c]);
                sub.push_back(std::move(row));
            }
            gens.push_back(poly_matrix_det(sub, ideal.ring));
        });
    });
    return Ideal(ideal.ring, std::move(gens));
}

}  // namespace gaussalg
