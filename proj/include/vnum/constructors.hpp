#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "vnum/clutter.hpp"
#include "vnum/ideal.hpp"

namespace vnum {

/// Edge ideal I(C): one square-free generator per hyperedge.
inline MonomialIdeal edge_ideal(const Clutter& c) {
    std::vector<Monomial> gens;
    gens.reserve(c.edges().size());
    for (const auto& e : c.edges()) {
        gens.push_back(Monomial::from_support(c.vertex_count(), e));
    }
    return MonomialIdeal::make(c.vertices(), std::move(gens));
}

inline MonomialIdeal edge_ideal(const Graph& g) { return edge_ideal(g.clutter()); }

/// Clutter of generator supports of a square-free ideal. Inverse of
/// edge_ideal: a square-free ideal is the edge ideal of this clutter.
inline Clutter support_clutter(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) {
        throw InvalidInput("support_clutter requires a square-free ideal");
    }
    if (!ideal.is_proper()) {
        throw InvalidInput("support_clutter requires a proper nonzero ideal");
    }
    std::vector<VertexSet> edges;
    edges.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) {
        edges.push_back(g.support());
    }
    return Clutter(ideal.vars(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Mixed product ideals
// ---------------------------------------------------------------------------

/// Parameters of a mixed product ideal over x1..xn, y1..ym: a sum of terms
/// I_q * J_r. A term with r = 0 (resp. q = 0) encodes a pure x-block summand
/// I_q (resp. pure y-block J_r). The two-block terms must have strictly
/// increasing q and strictly decreasing r.
struct MixedSpec {
    int n = 0;
    int m = 0;
    std::vector<std::pair<int, int>> terms;

    void validate() const {
        if (n < 1 || m < 0) {
            throw InvalidInput("MixedSpec requires n >= 1 and m >= 0");
        }
        if (terms.empty()) {
            throw InvalidInput("MixedSpec requires at least one term");
        }
        int prev_q = 0;
        int prev_r = 0;
        bool have_two_block = false;
        for (const auto& [q, r] : terms) {
            if (q < 0 || r < 0 || (q == 0 && r == 0)) {
                throw InvalidInput("MixedSpec term must have q >= 1 or r >= 1");
            }
            if (q > n || r > m) {
                throw InvalidInput("MixedSpec term degree exceeds block size");
            }
            if (q >= 1 && r >= 1) {
                if (have_two_block && !(q > prev_q && r < prev_r)) {
                    throw InvalidInput("MixedSpec two-block terms must have increasing q and decreasing r");
                }
                prev_q = q;
                prev_r = r;
                have_two_block = true;
            }
        }
    }
};

namespace detail {

/// All square-free degree-d monomials in the index window [lo, lo+width).
inline void append_squarefree_block(std::vector<Monomial>& out, int nvars, int lo, int width, int degree) {
    for_each_subset_of_size(width, degree, [&](const std::vector<int>& subset) {
        std::vector<int> support;
        support.reserve(subset.size());
        for (int i : subset) {
            support.push_back(lo + i);
        }
        out.push_back(Monomial::from_support(nvars, support));
        return true;
    });
}

}  // namespace detail

/// The mixed product ideal described by the parameters, over VarSet x1..xn, y1..ym.
inline MonomialIdeal mixed_ideal(const MixedSpec& spec) {
    spec.validate();
    VarSet vars = VarSet::mixed_blocks(spec.n, spec.m);
    int nvars = vars.count();
    std::vector<Monomial> gens;
    for (const auto& [q, r] : spec.terms) {
        std::vector<Monomial> xs;
        std::vector<Monomial> ys;
        if (q >= 1) {
            detail::append_squarefree_block(xs, nvars, 0, spec.n, q);
        } else {
            xs.push_back(Monomial::one(nvars));
        }
        if (r >= 1) {
            detail::append_squarefree_block(ys, nvars, spec.n, spec.m, r);
        } else {
            ys.push_back(Monomial::one(nvars));
        }
        for (const auto& a : xs) {
            for (const auto& b : ys) {
                gens.push_back(a * b);
            }
        }
    }
    return MonomialIdeal::make(vars, std::move(gens));
}

// ---------------------------------------------------------------------------
// Square-free and symbolic powers
// ---------------------------------------------------------------------------

/// k-th square-free power: the ideal of all square-free monomials inside the
/// ordinary power. Every square-free element of I^k is a multiple of a
/// square-free product of k distinct generators with pairwise disjoint
/// supports, so those products generate. The zero ideal is a legitimate
/// result (no square-free product exists).
inline MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k) {
    if (k < 1) {
        throw InvalidInput("squarefree_power requires k >= 1");
    }
    std::vector<const Monomial*> squarefree_gens;
    for (const auto& g : ideal.gens()) {
        if (g.is_squarefree()) {
            squarefree_gens.push_back(&g);
        }
    }
    std::vector<Monomial> products;
    std::vector<detail::Mask> supports;
    supports.reserve(squarefree_gens.size());
    for (const Monomial* g : squarefree_gens) {
        supports.push_back(detail::to_mask(g->support()));
    }

    Monomial current = Monomial::one(ideal.vars().count());
    auto recurse = [&](auto&& self, size_t start, detail::Mask used, const Monomial& acc, int left) -> void {
        if (left == 0) {
            products.push_back(acc);
            return;
        }
        for (size_t i = start; i + static_cast<size_t>(left) <= squarefree_gens.size(); ++i) {
            if ((supports[i] & used) == 0) {
                self(self, i + 1, used | supports[i], acc * (*squarefree_gens[i]), left - 1);
            }
        }
    };
    if (ideal.vars().count() <= 63) {
        recurse(recurse, 0, 0, current, k);
    } else {
        throw InvalidInput("squarefree_power supports at most 63 variables");
    }
    return MonomialIdeal::make(ideal.vars(), std::move(products));
}

/// P^k for a monomial prime: all degree-k monomials in the prime's variables.
/// These are pairwise incomparable, hence already minimal.
inline MonomialIdeal prime_power(const PrimeFace& p, int k) {
    if (k < 1) {
        throw InvalidInput("prime_power requires k >= 1");
    }
    int nvars = p.vars().count();
    std::vector<Monomial> gens;
    std::vector<Exp> exps(static_cast<size_t>(nvars), 0);
    const auto& members = p.members();
    auto recurse = [&](auto&& self, size_t pos, int left) -> void {
        if (pos + 1 == members.size()) {
            exps[static_cast<size_t>(members[pos])] = static_cast<Exp>(left);
            gens.push_back(Monomial(exps));
            exps[static_cast<size_t>(members[pos])] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[static_cast<size_t>(members[pos])] = static_cast<Exp>(e);
            self(self, pos + 1, left - e);
        }
        exps[static_cast<size_t>(members[pos])] = 0;
    };
    recurse(recurse, 0, k);
    return MonomialIdeal::make(p.vars(), std::move(gens));
}

/// Minimal primes of a square-free ideal: the minimal vertex covers of its
/// support clutter.
inline std::vector<PrimeFace> minimal_primes_squarefree(const MonomialIdeal& ideal) {
    Clutter c = support_clutter(ideal);
    std::vector<PrimeFace> primes;
    for (const auto& cover : minimal_vertex_covers(c)) {
        primes.emplace_back(ideal.vars(), cover);
    }
    return primes;
}

/// k-th symbolic power of a square-free ideal: the intersection of the k-th
/// powers of its minimal primes.
inline MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int k) {
    if (k < 1) {
        throw InvalidInput("symbolic_power requires k >= 1");
    }
    if (!ideal.is_squarefree()) {
        throw InvalidInput("symbolic_power is defined here for square-free ideals only");
    }
    if (!ideal.is_proper()) {
        throw InvalidInput("symbolic_power requires a proper nonzero ideal");
    }
    MonomialIdeal result = MonomialIdeal::unit(ideal.vars());
    for (const auto& p : minimal_primes_squarefree(ideal)) {
        result = intersect(result, prime_power(p, k));
    }
    return result;
}

/// Fast membership test in P^k: the incidence pairing with the exponent
/// vector reaches k. Used as an independent verification path.
inline bool in_prime_power(const PrimeFace& p, int k, const Monomial& f) {
    int total = 0;
    for (int i : p.members()) {
        total += int(f.exponent(i));
    }
    return total >= k;
}

}  // namespace vnum
