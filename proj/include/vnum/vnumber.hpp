#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vnum/clutter.hpp"
#include "vnum/constructors.hpp"
#include "vnum/ideal.hpp"
#include "vnum/polarization.hpp"

// Witness searches below run over monomials with exponents capped at the
// per-variable maxima of the generators. This loses nothing: the colon
// (I : f) is generated by g / gcd(g, f) over the generators g, and gcd
// depends only on min(f_i, g_i) per coordinate, so lowering any exponent of
// f onto the cap leaves every colon ideal unchanged. In particular every
// realizable colon value, prime or not, is realized by a capped monomial,
// and the capped space is finite.

namespace vnum {

/// A certificate for a v-number value: a monomial whose colon into the ideal
/// is exactly the named associated prime.
struct Witness {
    Monomial f;
    PrimeFace prime;
};

/// Associated primes with per-prime embedded flags. A prime is embedded iff
/// it strictly contains another member of the set.
struct AssociatedPrimes {
    std::vector<PrimeFace> primes;   // canonical (size, lex) order
    std::vector<bool> embedded;

    bool has_embedded() const {
        return std::any_of(embedded.begin(), embedded.end(), [](bool b) { return b; });
    }
};

enum class VMethod { Auto, StableSet, Colon, WitnessScan };

inline const char* to_string(VMethod m) {
    switch (m) {
        case VMethod::Auto: return "auto";
        case VMethod::StableSet: return "stable-set";
        case VMethod::Colon: return "colon";
        case VMethod::WitnessScan: return "witness";
    }
    return "?";
}

inline std::optional<VMethod> method_from_string(std::string_view s) {
    if (s == "auto") return VMethod::Auto;
    if (s == "stable-set") return VMethod::StableSet;
    if (s == "colon") return VMethod::Colon;
    if (s == "witness") return VMethod::WitnessScan;
    return std::nullopt;
}

struct VNumberResult {
    int value;
    Witness witness;
    VMethod method_used;
};

namespace detail {

/// Visit all exponent vectors of the given total degree, componentwise below
/// the caps, in canonical order (lexicographically descending on exponent
/// vectors), so the first hit of any scan is the canonical minimum of its
/// degree. The visitor returns false to stop.
template <typename Visit>
bool for_each_capped_monomial_of_degree(const std::vector<Exp>& caps, int degree, Visit&& visit) {
    size_t n = caps.size();
    std::vector<int> suffix_cap(n + 1, 0);
    for (size_t i = n; i-- > 0;) {
        suffix_cap[i] = suffix_cap[i + 1] + int(caps[i]);
    }
    if (degree > suffix_cap[0]) {
        return true;
    }
    std::vector<Exp> e(n, 0);
    auto recurse = [&](auto&& self, size_t pos, int left) -> bool {
        if (pos == n) {
            return left != 0 || visit(static_cast<const std::vector<Exp>&>(e));
        }
        if (left > suffix_cap[pos]) {
            return true;
        }
        int hi = std::min(int(caps[pos]), left);
        for (int v = hi; v >= 0; --v) {
            e[pos] = static_cast<Exp>(v);
            if (!self(self, pos + 1, left - v)) {
                return false;
            }
        }
        e[pos] = 0;
        return true;
    };
    return recurse(recurse, 0, degree);
}

/// If the ideal is generated by variables, the corresponding prime face.
inline std::optional<PrimeFace> as_prime(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) {
        return std::nullopt;
    }
    std::vector<int> members;
    for (const auto& g : ideal.gens()) {
        if (g.degree() != 1) {
            return std::nullopt;
        }
        members.push_back(g.support().front());
    }
    return PrimeFace(ideal.vars(), std::move(members));
}

/// Membership of h * x_var without materializing the product.
inline bool contains_times_var(const MonomialIdeal& ideal, const Monomial& h, int var) {
    for (const auto& g : ideal.gens()) {
        if (g.degree() > h.degree() + 1) {
            return false;
        }
        bool divides = true;
        for (int j = 0; j < h.nvars(); ++j) {
            int bound = int(h.exponent(j)) + (j == var ? 1 : 0);
            if (int(g.exponent(j)) > bound) {
                divides = false;
                break;
            }
        }
        if (divides) {
            return true;
        }
    }
    return false;
}

inline int caps_total(const std::vector<Exp>& caps) {
    int total = 0;
    for (Exp c : caps) {
        total += int(c);
    }
    return total;
}

}  // namespace detail

/// Certify a witness: the colon of the ideal by the monomial must equal the
/// prime exactly. Every witness handed out by this module passes through here.
inline Witness certify_witness(const MonomialIdeal& ideal, Monomial f, PrimeFace prime) {
    if (colon(ideal, f) != prime.as_ideal()) {
        throw Error("internal: witness certification failed for f = " + f.to_string(ideal.vars()));
    }
    return Witness{std::move(f), std::move(prime)};
}

/// Associated primes of a proper nonzero monomial ideal.
///
/// Square-free ideals: the minimal vertex covers of the support clutter
/// (never embedded). General ideals: scan all monomials with exponents capped
/// by the per-variable maxima of the generators and collect the prime colon
/// ideals; the caps lose nothing because colon generators depend only on
/// componentwise minima against the generators.
inline AssociatedPrimes associated_primes(const MonomialIdeal& ideal, const SearchLimits& limits = {}) {
    if (!ideal.is_proper()) {
        throw InvalidInput("associated_primes requires a proper nonzero ideal");
    }
    std::vector<PrimeFace> primes;
    if (ideal.is_squarefree()) {
        primes = minimal_primes_squarefree(ideal);
    } else {
        std::vector<Exp> caps = ideal.exponent_caps();
        std::uint64_t candidates = 1;
        for (Exp c : caps) {
            candidates *= std::uint64_t(c) + 1;
            if (candidates > limits.max_subsets) {
                throw GuardExceeded("associated primes scan exceeds the max-subsets guard");
            }
        }
        int total = detail::caps_total(caps);
        for (int d = 0; d <= total; ++d) {
            detail::for_each_capped_monomial_of_degree(caps, d, [&](const std::vector<Exp>& e) {
                Monomial f{std::vector<Exp>(e)};
                if (!ideal.contains(f)) {
                    if (auto p = detail::as_prime(colon(ideal, f))) {
                        if (std::find(primes.begin(), primes.end(), *p) == primes.end()) {
                            primes.push_back(std::move(*p));
                        }
                    }
                }
                return true;
            });
        }
    }
    std::sort(primes.begin(), primes.end(),
              [](const PrimeFace& a, const PrimeFace& b) { return canonical_less(a, b); });
    std::vector<bool> embedded(primes.size(), false);
    for (size_t i = 0; i < primes.size(); ++i) {
        for (size_t j = 0; j < primes.size(); ++j) {
            if (i != j && primes[i].strictly_contains(primes[j])) {
                embedded[i] = true;
                break;
            }
        }
    }
    return AssociatedPrimes{std::move(primes), std::move(embedded)};
}

namespace detail {

/// Least degree of a capped monomial h outside the ideal with h * p inside it,
/// i.e. the least generator degree of (I : p) / I. Scans only degrees below
/// the bound; std::nullopt means no witness below the bound.
inline std::optional<int> least_colon_quotient_degree(const MonomialIdeal& ideal, const PrimeFace& p,
                                                      int degree_bound) {
    std::vector<Exp> caps = ideal.exponent_caps();
    int total = caps_total(caps);
    int hi = std::min(degree_bound, total);
    // Degree 0 candidate (h = 1) would mean p itself sits inside the ideal;
    // that cannot happen for a proper ideal with p associated, so start at 1.
    for (int d = 1; d <= hi; ++d) {
        bool found = false;
        for_each_capped_monomial_of_degree(caps, d, [&](const std::vector<Exp>& e) {
            Monomial h{std::vector<Exp>(e)};
            if (ideal.contains(h)) {
                return true;
            }
            for (int var : p.members()) {
                if (!contains_times_var(ideal, h, var)) {
                    return true;
                }
            }
            found = true;
            return false;
        });
        if (found) {
            return d;
        }
    }
    return std::nullopt;
}

/// First capped monomial of the exact degree whose colon equals the prime.
inline std::optional<Monomial> witness_of_degree(const MonomialIdeal& ideal, const PrimeFace& p, int degree) {
    std::vector<Exp> caps = ideal.exponent_caps();
    MonomialIdeal prime_ideal = p.as_ideal();
    std::optional<Monomial> hit;
    for_each_capped_monomial_of_degree(caps, degree, [&](const std::vector<Exp>& e) {
        Monomial f{std::vector<Exp>(e)};
        if (!ideal.contains(f) && colon(ideal, f) == prime_ideal) {
            hit = std::move(f);
            return false;
        }
        return true;
    });
    return hit;
}

}  // namespace detail

/// v-number by the stable-set route: the least size of a stable set whose
/// neighborhood is a minimal vertex cover, with t_A as the witness monomial.
/// Requires a square-free ideal.
inline VNumberResult v_number_stable_set(const MonomialIdeal& ideal, const SearchLimits& limits = {}) {
    if (!ideal.is_squarefree()) {
        throw MethodInapplicable("stable-set method requires a square-free ideal");
    }
    Clutter c = support_clutter(ideal);
    std::optional<VertexSet> a = min_stable_cover_witness(c, limits);
    if (!a) {
        throw Error("internal: no stable set with minimal-cover neighborhood found");
    }
    Monomial f = Monomial::from_support(ideal.vars().count(), *a);
    PrimeFace prime(ideal.vars(), neighborhood(c, *a));
    int value = static_cast<int>(a->size());
    return VNumberResult{value, certify_witness(ideal, std::move(f), std::move(prime)), VMethod::StableSet};
}

/// v-number by the colon route: min over associated primes of the least
/// generator degree of (I : p) / I. Requires no embedded primes. A witness of
/// the minimal degree is recovered and certified.
inline VNumberResult v_number_colon(const MonomialIdeal& ideal, const SearchLimits& limits = {},
                                    const AssociatedPrimes* known_ass = nullptr) {
    AssociatedPrimes local;
    const AssociatedPrimes* ass = known_ass;
    if (ass == nullptr) {
        local = associated_primes(ideal, limits);
        ass = &local;
    }
    if (ass->has_embedded()) {
        throw MethodInapplicable("colon method requires an ideal with no embedded primes");
    }
    int best = std::numeric_limits<int>::max();
    const PrimeFace* best_prime = nullptr;
    for (const auto& p : ass->primes) {
        if (auto d = detail::least_colon_quotient_degree(ideal, p, best)) {
            if (*d < best) {
                best = *d;
                best_prime = &p;
            }
        }
    }
    if (best_prime == nullptr) {
        throw Error("internal: colon method found no witness degree");
    }
    if (std::optional<Monomial> f = detail::witness_of_degree(ideal, *best_prime, best)) {
        return VNumberResult{best, certify_witness(ideal, std::move(*f), *best_prime), VMethod::Colon};
    }
    // The minimizing degree always carries an exact-colon witness for some
    // associated prime, even if not for the minimizing prime itself.
    std::vector<Exp> caps = ideal.exponent_caps();
    std::optional<VNumberResult> recovered;
    detail::for_each_capped_monomial_of_degree(caps, best, [&](const std::vector<Exp>& e) {
        Monomial f{std::vector<Exp>(e)};
        if (ideal.contains(f)) {
            return true;
        }
        if (auto p = detail::as_prime(colon(ideal, f))) {
            recovered = VNumberResult{best, Witness{std::move(f), std::move(*p)}, VMethod::Colon};
            return false;
        }
        return true;
    });
    if (!recovered) {
        throw Error("internal: colon method failed to recover a witness");
    }
    return std::move(*recovered);
}

/// v-number by the direct witness scan: ascending-degree search over capped
/// monomials for the first one whose colon is a prime. Applicable to every
/// proper monomial ideal.
inline VNumberResult v_number_witness(const MonomialIdeal& ideal, const SearchLimits& limits = {}) {
    std::vector<Exp> caps = ideal.exponent_caps();
    int total = detail::caps_total(caps);
    int hi = std::min(total, limits.max_witness_degree);
    for (int d = 1; d <= hi; ++d) {
        std::optional<VNumberResult> hit;
        detail::for_each_capped_monomial_of_degree(caps, d, [&](const std::vector<Exp>& e) {
            Monomial f{std::vector<Exp>(e)};
            if (ideal.contains(f)) {
                return true;
            }
            if (auto p = detail::as_prime(colon(ideal, f))) {
                hit = VNumberResult{d, Witness{std::move(f), std::move(*p)}, VMethod::WitnessScan};
                return false;
            }
            return true;
        });
        if (hit) {
            return std::move(*hit);
        }
    }
    if (total > limits.max_witness_degree) {
        throw GuardExceeded("witness scan exceeded the max-witness-degree guard");
    }
    throw Error("internal: witness scan found no associated prime witness");
}

/// v-number of a proper monomial ideal with a certifying witness.
///
/// auto picks the fastest applicable route: stable-set for square-free
/// ideals, colon when there are no embedded primes, witness scan otherwise.
/// v = 0 exactly for variable-generated primes (the maximal ideal included),
/// certified by f = 1; this is the reading under which the closed-form
/// results hold at their boundary degrees, and it is what the stable-set
/// route returns naturally (the empty stable set).
inline VNumberResult v_number(const MonomialIdeal& ideal, VMethod method = VMethod::Auto,
                              const SearchLimits& limits = {}) {
    if (!ideal.is_proper()) {
        throw NotProper("v-number requires a proper nonzero ideal");
    }
    if (auto self_prime = detail::as_prime(ideal)) {
        Monomial one = Monomial::one(ideal.vars().count());
        return VNumberResult{0, certify_witness(ideal, std::move(one), std::move(*self_prime)), method};
    }
    switch (method) {
        case VMethod::StableSet:
            return v_number_stable_set(ideal, limits);
        case VMethod::Colon:
            return v_number_colon(ideal, limits);
        case VMethod::WitnessScan:
            return v_number_witness(ideal, limits);
        case VMethod::Auto: {
            if (ideal.is_squarefree()) {
                return v_number_stable_set(ideal, limits);
            }
            AssociatedPrimes ass = associated_primes(ideal, limits);
            if (!ass.has_embedded()) {
                return v_number_colon(ideal, limits, &ass);
            }
            return v_number_witness(ideal, limits);
        }
    }
    throw InvalidInput("unknown v-number method");
}

/// Localized v-number: least degree of a monomial whose colon is exactly the
/// given prime. The prime must be associated, which the scan itself decides.
inline int v_number_localized(const MonomialIdeal& ideal, const PrimeFace& p,
                              const SearchLimits& limits = {}) {
    if (!ideal.is_proper()) {
        throw NotProper("v-number requires a proper nonzero ideal");
    }
    require_same_vars(ideal.vars(), p.vars(), "v_number_localized");
    if (auto self_prime = detail::as_prime(ideal)) {
        if (*self_prime == p) {
            return 0;
        }
        throw InvalidInput("prime is not associated to the ideal");
    }
    std::vector<Exp> caps = ideal.exponent_caps();
    int total = detail::caps_total(caps);
    int hi = std::min(total, limits.max_witness_degree);
    MonomialIdeal prime_ideal = p.as_ideal();
    for (int d = 1; d <= hi; ++d) {
        bool found = false;
        detail::for_each_capped_monomial_of_degree(caps, d, [&](const std::vector<Exp>& e) {
            Monomial f{std::vector<Exp>(e)};
            if (!ideal.contains(f) && colon(ideal, f) == prime_ideal) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) {
            return d;
        }
    }
    if (total > limits.max_witness_degree) {
        throw GuardExceeded("localized witness scan exceeded the max-witness-degree guard");
    }
    throw InvalidInput("prime is not associated to the ideal");
}

/// Comparison report for the polarization inequality v(I(pol)) <= v(I),
/// with equality expected exactly when the ideal has no embedded primes.
struct PolarizationCheckResult {
    int v_polarized;
    int v_original;
    bool has_embedded;
    bool leq;
    bool equal;

    bool ok() const { return leq && (has_embedded || equal); }
};

/// Compute both sides of the polarization inequality with the witness method.
inline PolarizationCheckResult polarization_vnumber_check(const MonomialIdeal& ideal,
                                                          const SearchLimits& limits = {}) {
    if (!ideal.is_proper()) {
        throw NotProper("polarization check requires a proper nonzero ideal");
    }
    int v_original = v_number(ideal, VMethod::WitnessScan, limits).value;
    Polarization pol = polarize(ideal);
    int v_polarized = v_number(pol.ideal, VMethod::WitnessScan, limits).value;
    bool embedded = associated_primes(ideal, limits).has_embedded();
    return PolarizationCheckResult{v_polarized, v_original, embedded, v_polarized <= v_original,
                                   v_polarized == v_original};
}

}  // namespace vnum
