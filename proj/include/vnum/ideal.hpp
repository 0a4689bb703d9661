#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vnum/errors.hpp"
#include "vnum/monomial.hpp"
#include "vnum/varset.hpp"

namespace vnum {

namespace detail {

/// Reduce a candidate list to the divisibility-minimal antichain, sorted in
/// canonical order. A divisor always has strictly smaller degree than a
/// distinct multiple, so after sorting and deduplication each candidate only
/// needs to be tested against the already accepted generators.
inline std::vector<Monomial> minimalize(std::vector<Monomial> candidates) {
    std::sort(candidates.begin(), candidates.end(), canonical_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Monomial> accepted;
    accepted.reserve(candidates.size());
    for (auto& c : candidates) {
        bool redundant = false;
        for (const auto& g : accepted) {
            if (g.degree() >= c.degree()) {
                break;  // sorted by degree: no further divisor possible
            }
            if (g.divides(c)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            accepted.push_back(std::move(c));
        }
    }
    return accepted;
}

}  // namespace detail

/// A monomial ideal, held as its unique minimal generating set.
///
/// Invariants: the generators form an antichain under divisibility, are
/// deduplicated, and are stored in canonical (degree, lex) order, so equal
/// ideals compare equal and every rendering is reproducible byte for byte.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
  public:
    /// Normalize an arbitrary generator list to minimal generators.
    static MonomialIdeal make(VarSet vars, std::vector<Monomial> raw) {
        for (const auto& m : raw) {
            if (m.nvars() != vars.count()) {
                throw InvalidInput("make_ideal: monomial length does not match variable set");
            }
        }
        return MonomialIdeal(std::move(vars), detail::minimalize(std::move(raw)));
    }

    static MonomialIdeal zero(VarSet vars) { return MonomialIdeal(std::move(vars), {}); }

    static MonomialIdeal unit(VarSet vars) {
        int n = vars.count();
        return MonomialIdeal(std::move(vars), {Monomial::one(n)});
    }

    const VarSet& vars() const { return vars_; }
    std::span<const Monomial> gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_zero() && !is_unit(); }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
    }

    /// True iff the ideal is the maximal ideal (x_1, ..., x_n).
    bool is_maximal() const {
        if (num_gens() != vars_.count()) {
            return false;
        }
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
    }

    /// Membership: some generator divides f.
    bool contains(const Monomial& f) const {
        for (const auto& g : gens_) {
            if (g.degree() > f.degree()) {
                return false;  // canonical order: generators only get larger
            }
            if (g.divides(f)) {
                return true;
            }
        }
        return false;
    }

    /// other is contained in this ideal (checked on generators).
    bool contains_ideal(const MonomialIdeal& other) const {
        require_same_vars(vars_, other.vars_, "contains_ideal");
        return std::all_of(other.gens_.begin(), other.gens_.end(),
                           [this](const Monomial& g) { return contains(g); });
    }

    /// Componentwise max exponent over the generators. Capping a test
    /// monomial at these values leaves every colon ideal unchanged, since
    /// colon generators depend only on componentwise minima with generators.
    std::vector<Exp> exponent_caps() const {
        std::vector<Exp> caps(static_cast<size_t>(vars_.count()), 0);
        for (const auto& g : gens_) {
            for (int i = 0; i < vars_.count(); ++i) {
                caps[static_cast<size_t>(i)] = std::max(caps[static_cast<size_t>(i)], g.exponent(i));
            }
        }
        return caps;
    }

    bool operator==(const MonomialIdeal& other) const {
        return vars_ == other.vars_ && gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    std::string to_string() const {
        if (is_zero()) {
            return "(0)";
        }
        std::string out = "(";
        for (size_t i = 0; i < gens_.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += gens_[i].to_string(vars_);
        }
        out += ")";
        return out;
    }

  private:
    MonomialIdeal(VarSet vars, std::vector<Monomial> gens)
        : vars_(std::move(vars)), gens_(std::move(gens)) {}

    VarSet vars_;
    std::vector<Monomial> gens_;
};

/// A monomial prime ideal, identified with its set of variables.
class PrimeFace {
  public:
    PrimeFace(VarSet vars, std::vector<int> members) : vars_(std::move(vars)), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
        if (members_.empty()) {
            throw InvalidInput("PrimeFace requires at least one variable");
        }
        if (members_.front() < 0 || members_.back() >= vars_.count()) {
            throw InvalidInput("PrimeFace member out of range");
        }
    }

    const VarSet& vars() const { return vars_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

    bool contains_var(int i) const {
        return std::binary_search(members_.begin(), members_.end(), i);
    }

    MonomialIdeal as_ideal() const {
        std::vector<Monomial> gens;
        gens.reserve(members_.size());
        for (int i : members_) {
            gens.push_back(Monomial::from_support(vars_.count(), {i}));
        }
        return MonomialIdeal::make(vars_, std::move(gens));
    }

    /// Incidence vector 1_p: 1 exactly on the members.
    std::vector<Exp> incidence() const {
        std::vector<Exp> v(static_cast<size_t>(vars_.count()), 0);
        for (int i : members_) {
            v[static_cast<size_t>(i)] = 1;
        }
        return v;
    }

    bool operator==(const PrimeFace& other) const {
        return vars_ == other.vars_ && members_ == other.members_;
    }
    bool operator!=(const PrimeFace& other) const { return !(*this == other); }

    /// Strict containment as ideals: every member of other is a member here.
    bool strictly_contains(const PrimeFace& other) const {
        if (size() <= other.size()) {
            return false;
        }
        return std::includes(members_.begin(), members_.end(), other.members_.begin(), other.members_.end());
    }

    std::string to_string() const {
        std::string out = "(";
        for (size_t i = 0; i < members_.size(); ++i) {
            if (i > 0) {
                out += ", ";
            }
            out += vars_.name(members_[i]);
        }
        out += ")";
        return out;
    }

  private:
    VarSet vars_;
    std::vector<int> members_;
};

/// Canonical order on primes: size first, then lexicographic on members.
inline bool canonical_less(const PrimeFace& a, const PrimeFace& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a.members() < b.members();
}

// ---------------------------------------------------------------------------
// Ideal arithmetic
// ---------------------------------------------------------------------------

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_vars(a.vars(), b.vars(), "sum");
    std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::make(a.vars(), std::move(gens));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_vars(a.vars(), b.vars(), "product");
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& g : a.gens()) {
        for (const auto& h : b.gens()) {
            gens.push_back(g * h);
        }
    }
    return MonomialIdeal::make(a.vars(), std::move(gens));
}

/// k-th ordinary power, k >= 1. The unit ideal is deliberately not produced
/// here, so k = 0 is rejected.
inline MonomialIdeal power(const MonomialIdeal& ideal, int k) {
    if (k < 1) {
        throw InvalidInput("power requires k >= 1");
    }
    MonomialIdeal result = ideal;
    for (int i = 1; i < k; ++i) {
        result = product(result, ideal);
    }
    return result;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_vars(a.vars(), b.vars(), "intersect");
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& g : a.gens()) {
        for (const auto& h : b.gens()) {
            gens.push_back(Monomial::lcm(g, h));
        }
    }
    return MonomialIdeal::make(a.vars(), std::move(gens));
}

/// Colon by a single monomial: generated by { g / gcd(g, f) }.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
    if (f.nvars() != ideal.vars().count()) {
        throw InvalidInput("colon: monomial length does not match variable set");
    }
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) {
        gens.push_back(g.colon_by(f));
    }
    return MonomialIdeal::make(ideal.vars(), std::move(gens));
}

/// Colon by an ideal: intersection of the colons by each generator.
/// Contract: h lies in the result iff h*J is contained in the ideal.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
    require_same_vars(ideal.vars(), divisor.vars(), "colon");
    if (divisor.is_zero()) {
        throw InvalidInput("colon by the zero ideal");
    }
    bool first = true;
    MonomialIdeal result = MonomialIdeal::zero(ideal.vars());
    for (const auto& f : divisor.gens()) {
        MonomialIdeal part = colon(ideal, f);
        result = first ? part : intersect(result, part);
        first = false;
    }
    return result;
}

inline MonomialIdeal colon(const MonomialIdeal& ideal, const PrimeFace& p) {
    return colon(ideal, p.as_ideal());
}

/// Least degree among the minimal generators.
inline int alpha(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw Undefined("alpha of the zero ideal is undefined");
    }
    return ideal.gens().front().degree();  // canonical order: degree-ascending
}

/// Least degree of a monomial in outer \ inner, for inner contained in outer;
/// std::nullopt when the ideals coincide. Any monomial of the difference is a
/// multiple of a generator of outer that itself lies outside inner, so the
/// minimum is attained on the generators.
inline std::optional<int> min_degree_outside(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    require_same_vars(outer.vars(), inner.vars(), "min_degree_outside");
    if (!outer.contains_ideal(inner)) {
        throw InvalidInput("min_degree_outside: inner ideal is not contained in outer");
    }
    for (const auto& g : outer.gens()) {
        if (!inner.contains(g)) {
            return g.degree();  // canonical order gives the minimum first
        }
    }
    return std::nullopt;
}

}  // namespace vnum
