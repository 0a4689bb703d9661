// Test-only brute-force oracles. These deliberately work from definitions
// (membership scans over capped exponent grids) and stay independent of the
// ideal operations they are used to check.
#pragma once

#include <optional>
#include <vector>

#include "vnum/ideal.hpp"
#include "vnum/monomial.hpp"

namespace oracle {

using vnum::Exp;
using vnum::Monomial;
using vnum::MonomialIdeal;

/// All exponent vectors bounded by caps, in lexicographic order.
inline std::vector<Monomial> capped_monomials(const std::vector<int>& caps) {
    std::vector<Monomial> out;
    std::vector<Exp> e(caps.size(), 0);
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == caps.size()) {
            out.emplace_back(std::vector<Exp>(e));
            return;
        }
        for (int v = 0; v <= caps[pos]; ++v) {
            e[pos] = static_cast<Exp>(v);
            self(self, pos + 1);
        }
        e[pos] = 0;
    };
    rec(rec, 0);
    return out;
}

inline std::vector<Monomial> grid(int nvars, int cap) {
    return capped_monomials(std::vector<int>(static_cast<size_t>(nvars), cap));
}

/// Definition-level membership: some generator divides f.
inline bool member(const MonomialIdeal& ideal, const Monomial& f) {
    for (const auto& g : ideal.gens()) {
        bool div = true;
        for (int i = 0; i < f.nvars(); ++i) {
            if (g.exponent(i) > f.exponent(i)) {
                div = false;
                break;
            }
        }
        if (div) {
            return true;
        }
    }
    return false;
}

/// h lies in (I : J) iff h*g lies in I for every generator g of J.
inline bool colon_member(const MonomialIdeal& ideal, const MonomialIdeal& divisor, const Monomial& h) {
    for (const auto& g : divisor.gens()) {
        if (!member(ideal, h * g)) {
            return false;
        }
    }
    return true;
}

/// Least degree of a monomial lying in outer but not in inner, scanning the
/// exponent grid capped by outer's generator maxima, degree by degree.
inline std::optional<int> min_degree_outside(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    std::vector<int> caps(static_cast<size_t>(outer.vars().count()), 0);
    int max_degree = 0;
    for (const auto& g : outer.gens()) {
        max_degree = std::max(max_degree, g.degree());
        for (int i = 0; i < outer.vars().count(); ++i) {
            caps[static_cast<size_t>(i)] = std::max(caps[static_cast<size_t>(i)], int(g.exponent(i)));
        }
    }
    std::optional<int> best;
    for (const auto& m : capped_monomials(caps)) {
        if (m.degree() <= max_degree && member(outer, m) && !member(inner, m)) {
            if (!best || m.degree() < *best) {
                best = m.degree();
            }
        }
    }
    return best;
}

}  // namespace oracle
