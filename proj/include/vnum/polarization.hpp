#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vnum/ideal.hpp"

namespace vnum {

/// Result of polarizing a monomial ideal: a square-free ideal over a fresh
/// VarSet together with the origin map new-variable-index -> old-variable-index.
struct Polarization {
    MonomialIdeal ideal;
    std::vector<int> origin;
};

/// Polarize: variable i gets r_i copies, where r_i is the maximal exponent of
/// x_i over the generators; an exponent a maps to the product of the first a
/// copies. Copies of "x3" are named "x3_1", "x3_2", ... so polarized ideals
/// round-trip through the expression DSL.
inline Polarization polarize(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw InvalidInput("polarize requires a nonzero ideal");
    }
    if (ideal.is_unit()) {
        throw InvalidInput("polarize requires a proper ideal");
    }
    const VarSet& vars = ideal.vars();
    std::vector<Exp> caps = ideal.exponent_caps();

    std::vector<std::string> names;
    std::vector<int> origin;
    std::vector<int> first_copy(static_cast<size_t>(vars.count()), -1);
    for (int i = 0; i < vars.count(); ++i) {
        first_copy[static_cast<size_t>(i)] = static_cast<int>(names.size());
        for (int j = 1; j <= int(caps[static_cast<size_t>(i)]); ++j) {
            names.push_back(vars.name(i) + "_" + std::to_string(j));
            origin.push_back(i);
        }
    }
    VarSet polarized_vars{std::move(names)};

    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) {
        std::vector<Exp> e(static_cast<size_t>(polarized_vars.count()), 0);
        for (int i = 0; i < vars.count(); ++i) {
            for (int j = 0; j < int(g.exponent(i)); ++j) {
                e[static_cast<size_t>(first_copy[static_cast<size_t>(i)] + j)] = 1;
            }
        }
        gens.emplace_back(std::move(e));
    }
    return Polarization{MonomialIdeal::make(polarized_vars, std::move(gens)), std::move(origin)};
}

}  // namespace vnum
