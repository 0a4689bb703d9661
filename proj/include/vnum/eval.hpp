#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vnum/parser.hpp"
#include "vnum/polarization.hpp"

namespace vnum {

namespace eval_detail {

/// (prefix, index, copy) key for ordering variable names; copy 0 for plain
/// names like x3, positive for polarized copies like x3_2.
struct VarKey {
    std::string prefix;
    int index = 0;
    int copy = 0;

    auto tie() const { return std::tie(prefix, index, copy); }
    bool operator<(const VarKey& other) const { return tie() < other.tie(); }
    bool operator==(const VarKey& other) const { return tie() == other.tie(); }

    std::string name() const {
        std::string s = prefix + std::to_string(index);
        if (copy > 0) {
            s += "_" + std::to_string(copy);
        }
        return s;
    }
};

inline VarKey parse_var_name(const std::string& name) {
    VarKey key;
    size_t i = 0;
    while (i < name.size() && std::islower(static_cast<unsigned char>(name[i]))) {
        key.prefix += name[i++];
    }
    size_t digits_start = i;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
        ++i;
    }
    if (key.prefix.empty() || i == digits_start) {
        throw SemanticError("variable name '" + name + "' is not of the form x<index>[_<copy>]");
    }
    key.index = std::stoi(name.substr(digits_start, i - digits_start));
    if (i < name.size()) {
        if (name[i] != '_' || i + 1 == name.size()) {
            throw SemanticError("variable name '" + name + "' is not of the form x<index>[_<copy>]");
        }
        key.copy = std::stoi(name.substr(i + 1));
        if (key.copy < 1) {
            throw SemanticError("variable copy indices start at 1 in '" + name + "'");
        }
    }
    if (key.index < 1) {
        throw SemanticError("variable indices start at 1 in '" + name + "'");
    }
    return key;
}

/// VarSet spanned by the named variables: plain prefixes are filled from
/// index 1 to the maximum seen, polarized copies from 1 to the maximum per
/// (prefix, index). Keys order as (prefix, index, copy).
inline VarSet varset_spanning(const std::vector<VarKey>& keys) {
    std::map<std::string, int> plain_max;
    std::map<std::pair<std::string, int>, int> copy_max;
    for (const auto& key : keys) {
        if (key.copy == 0) {
            auto& top = plain_max[key.prefix];
            top = std::max(top, key.index);
        } else {
            auto& top = copy_max[{key.prefix, key.index}];
            top = std::max(top, key.copy);
        }
    }
    std::vector<VarKey> all;
    for (const auto& [prefix, top] : plain_max) {
        for (int i = 1; i <= top; ++i) {
            all.push_back(VarKey{prefix, i, 0});
        }
    }
    for (const auto& [pi, top] : copy_max) {
        for (int c = 1; c <= top; ++c) {
            all.push_back(VarKey{pi.first, pi.second, c});
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<std::string> names;
    names.reserve(all.size());
    for (const auto& key : all) {
        names.push_back(key.name());
    }
    return VarSet(std::move(names));
}

/// Reindex an ideal into a larger VarSet by variable name.
inline MonomialIdeal embed(const MonomialIdeal& ideal, const VarSet& target) {
    if (ideal.vars() == target) {
        return ideal;
    }
    std::vector<int> map(static_cast<size_t>(ideal.vars().count()), -1);
    for (int i = 0; i < ideal.vars().count(); ++i) {
        auto idx = target.index_of(ideal.vars().name(i));
        if (!idx) {
            throw SemanticError("variable " + ideal.vars().name(i) +
                                " does not exist in the combined variable set");
        }
        map[static_cast<size_t>(i)] = *idx;
    }
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) {
        std::vector<Exp> e(static_cast<size_t>(target.count()), 0);
        for (int i = 0; i < ideal.vars().count(); ++i) {
            e[static_cast<size_t>(map[static_cast<size_t>(i)])] = g.exponent(i);
        }
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(target, std::move(gens));
}

/// Common VarSet for a binary operation: one side's set if it covers the
/// other, otherwise the union in canonical name order.
inline VarSet unify(const VarSet& a, const VarSet& b) {
    if (a == b) {
        return a;
    }
    auto covers = [](const VarSet& big, const VarSet& small) {
        for (const auto& name : small.names()) {
            if (!big.index_of(name)) {
                return false;
            }
        }
        return true;
    };
    if (covers(a, b)) {
        return a;
    }
    if (covers(b, a)) {
        return b;
    }
    std::vector<VarKey> keys;
    for (const auto& name : a.names()) {
        keys.push_back(parse_var_name(name));
    }
    for (const auto& name : b.names()) {
        keys.push_back(parse_var_name(name));
    }
    return varset_spanning(keys);
}

template <typename Op>
MonomialIdeal binary(const MonomialIdeal& a, const MonomialIdeal& b, Op&& op) {
    VarSet common = unify(a.vars(), b.vars());
    return op(embed(a, common), embed(b, common));
}

}  // namespace eval_detail

/// Evaluate a graph expression.
inline Graph eval(const GraphExpr& expr) {
    using G = GraphExpr;
    return std::visit(
        [](const auto& node) -> Graph {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, G::Path>) {
                return path(node.n);
            } else if constexpr (std::is_same_v<T, G::Cycle>) {
                return cycle(node.n);
            } else if constexpr (std::is_same_v<T, G::Complete>) {
                return complete(node.n);
            } else if constexpr (std::is_same_v<T, G::Power>) {
                return graph_power(eval(*node.base), node.k);
            } else {
                std::vector<VertexSet> edges;
                for (auto [a, b] : node.edges) {
                    edges.push_back({std::min(a, b) - 1, std::max(a, b) - 1});
                }
                return Graph(VarSet::standard(node.n), std::move(edges));
            }
        },
        expr.node);
}

/// Evaluate an ideal expression to its canonical minimal-generator form.
/// Binary operations unify variable sets by name; engine errors surface as
/// SemanticError with the failing sub-expression, except enumeration guards,
/// which keep their own type.
inline MonomialIdeal eval(const IdealExpr& expr) {
    using I = IdealExpr;
    try {
        return std::visit(
            [&](const auto& node) -> MonomialIdeal {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, I::EdgeIdeal>) {
                    return edge_ideal(eval(*node.graph));
                } else if constexpr (std::is_same_v<T, I::Mixed>) {
                    return mixed_ideal(node.spec);
                } else if constexpr (std::is_same_v<T, I::Pow>) {
                    return power(eval(*node.base), node.k);
                } else if constexpr (std::is_same_v<T, I::SqPow>) {
                    return squarefree_power(eval(*node.base), node.k);
                } else if constexpr (std::is_same_v<T, I::SymPow>) {
                    return symbolic_power(eval(*node.base), node.k);
                } else if constexpr (std::is_same_v<T, I::Sum>) {
                    return eval_detail::binary(eval(*node.lhs), eval(*node.rhs),
                                               [](const auto& a, const auto& b) { return sum(a, b); });
                } else if constexpr (std::is_same_v<T, I::Product>) {
                    return eval_detail::binary(
                        eval(*node.lhs), eval(*node.rhs),
                        [](const auto& a, const auto& b) { return product(a, b); });
                } else if constexpr (std::is_same_v<T, I::Colon>) {
                    return eval_detail::binary(
                        eval(*node.lhs), eval(*node.rhs),
                        [](const auto& a, const auto& b) { return colon(a, b); });
                } else if constexpr (std::is_same_v<T, I::Polarize>) {
                    return polarize(eval(*node.base)).ideal;
                } else {
                    if (node.zero) {
                        return MonomialIdeal::zero(VarSet::standard(1));
                    }
                    std::vector<eval_detail::VarKey> keys;
                    for (const auto& m : node.monomials) {
                        for (const auto& [name, exponent] : m) {
                            (void)exponent;
                            keys.push_back(eval_detail::parse_var_name(name));
                        }
                    }
                    VarSet vars = keys.empty() ? VarSet::standard(1)
                                               : eval_detail::varset_spanning(keys);
                    std::vector<Monomial> gens;
                    for (const auto& m : node.monomials) {
                        std::vector<Exp> e(static_cast<size_t>(vars.count()), 0);
                        for (const auto& [name, exponent] : m) {
                            int idx = *vars.index_of(name);
                            int total = int(e[static_cast<size_t>(idx)]) + exponent;
                            if (total > 255) {
                                throw SemanticError("exponent too large on " + name);
                            }
                            e[static_cast<size_t>(idx)] = static_cast<Exp>(total);
                        }
                        gens.emplace_back(std::move(e));
                    }
                    return MonomialIdeal::make(vars, std::move(gens));
                }
            },
            expr.node);
    } catch (const SemanticError&) {
        throw;
    } catch (const ParseError&) {
        throw;
    } catch (const GuardExceeded&) {
        throw;
    } catch (const Error& e) {
        throw SemanticError(std::string(e.what()) + " [in " + print(expr) + "]");
    }
}

inline MonomialIdeal eval_text(std::string_view text) { return eval(*parse(text)); }

}  // namespace vnum
