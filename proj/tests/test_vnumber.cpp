#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vnum/vnumber.hpp"

using namespace vnum;

namespace {

Monomial monomial_from(const VarSet& vars, std::initializer_list<int> exps) {
    std::vector<Exp> e;
    for (int v : exps) {
        e.push_back(static_cast<Exp>(v));
    }
    REQUIRE(static_cast<int>(e.size()) == vars.count());
    return Monomial(std::move(e));
}

MonomialIdeal ideal_of(const VarSet& vars, std::initializer_list<std::initializer_list<int>> gens) {
    std::vector<Monomial> ms;
    for (auto g : gens) {
        std::vector<Exp> e;
        for (int v : g) {
            e.push_back(static_cast<Exp>(v));
        }
        ms.emplace_back(std::move(e));
    }
    return MonomialIdeal::make(vars, std::move(ms));
}

PrimeFace prime_of(const VarSet& vars, std::initializer_list<int> members) {
    return PrimeFace(vars, std::vector<int>(members));
}

}  // namespace

TEST_CASE("associated primes", "[vnumber]") {
    SECTION("I(L_4): covers of the path, none embedded") {
        auto ass = associated_primes(edge_ideal(path(4)));
        VarSet v4 = VarSet::standard(4);
        REQUIRE(ass.primes ==
                std::vector<PrimeFace>{prime_of(v4, {0, 2}), prime_of(v4, {1, 2}), prime_of(v4, {1, 3})});
        REQUIRE_FALSE(ass.has_embedded());
    }
    SECTION("(x1^2, x1x2): one embedded prime") {
        VarSet v2 = VarSet::standard(2);
        auto ass = associated_primes(ideal_of(v2, {{2, 0}, {1, 1}}));
        REQUIRE(ass.primes == std::vector<PrimeFace>{prime_of(v2, {0}), prime_of(v2, {0, 1})});
        REQUIRE(ass.embedded == std::vector<bool>{false, true});
    }
    SECTION("the maximal ideal is its own only prime") {
        VarSet v3 = VarSet::standard(3);
        auto m = ideal_of(v3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        auto ass = associated_primes(m);
        REQUIRE(ass.primes == std::vector<PrimeFace>{prime_of(v3, {0, 1, 2})});
        REQUIRE_FALSE(ass.has_embedded());
    }
    SECTION("zero and unit ideals are rejected") {
        VarSet v2 = VarSet::standard(2);
        REQUIRE_THROWS_AS(associated_primes(MonomialIdeal::zero(v2)), InvalidInput);
        REQUIRE_THROWS_AS(associated_primes(MonomialIdeal::unit(v2)), InvalidInput);
    }
}

TEST_CASE("associated primes of edge-ideal powers", "[vnumber][property]") {
    SECTION("bipartite powers keep exactly the minimal vertex covers") {
        for (const Graph& g : {path(4), path(5), path(6), cycle(4), cycle(6)}) {
            auto base = edge_ideal(g);
            auto covers = minimal_primes_squarefree(base);
            for (int k = 2; k <= 3; ++k) {
                auto ass = associated_primes(power(base, k));
                INFO(g.vertex_count() << " vertices, k = " << k);
                REQUIRE(ass.primes == covers);
                REQUIRE_FALSE(ass.has_embedded());
            }
        }
    }
    SECTION("odd cycles pick up the maximal ideal at the expected power") {
        auto contains_maximal = [](const AssociatedPrimes& ass, int n) {
            return std::any_of(ass.primes.begin(), ass.primes.end(),
                               [&](const PrimeFace& p) { return p.size() == n; });
        };
        auto triangle = edge_ideal(cycle(3));
        REQUIRE(contains_maximal(associated_primes(power(triangle, 2)), 3));
        auto pentagon = edge_ideal(cycle(5));
        REQUIRE_FALSE(contains_maximal(associated_primes(power(pentagon, 2)), 5));
        REQUIRE(contains_maximal(associated_primes(power(pentagon, 3)), 5));
        REQUIRE(associated_primes(power(pentagon, 3)).has_embedded());
    }
}

TEST_CASE("v-number basics", "[vnumber]") {
    SECTION("v(I(L_5)) = 1 with witness x3 and prime (x2, x4)") {
        auto ideal = edge_ideal(path(5));
        VarSet v5 = ideal.vars();
        for (VMethod m : {VMethod::StableSet, VMethod::Colon, VMethod::WitnessScan, VMethod::Auto}) {
            auto result = v_number(ideal, m);
            INFO("method " << to_string(m));
            REQUIRE(result.value == 1);
        }
        auto result = v_number(ideal, VMethod::WitnessScan);
        REQUIRE(result.witness.f == monomial_from(v5, {0, 0, 1, 0, 0}));
        REQUIRE(result.witness.prime == prime_of(v5, {1, 3}));
    }
    SECTION("ties at the witness degree resolve to the canonical minimum") {
        // every vertex of K_3 certifies v = 1; the scan must return x1
        auto ideal = edge_ideal(complete(3));
        auto result = v_number(ideal, VMethod::WitnessScan);
        REQUIRE(result.value == 1);
        REQUIRE(result.witness.f == monomial_from(ideal.vars(), {1, 0, 0}));
        REQUIRE(result.witness.prime == prime_of(ideal.vars(), {1, 2}));
    }
    SECTION("v of the maximal ideal is zero") {
        VarSet v3 = VarSet::standard(3);
        auto m = ideal_of(v3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        for (VMethod method : {VMethod::StableSet, VMethod::Colon, VMethod::WitnessScan, VMethod::Auto}) {
            auto result = v_number(m, method);
            REQUIRE(result.value == 0);
            REQUIRE(result.witness.f.is_one());
        }
    }
    SECTION("v of any variable-generated prime is zero") {
        VarSet v3 = VarSet::standard(3);
        auto p12 = ideal_of(v3, {{1, 0, 0}, {0, 1, 0}});
        REQUIRE(v_number(p12).value == 0);
        REQUIRE(v_number(p12, VMethod::StableSet).value == 0);
    }
    SECTION("v(I(L_8)) = 2 and v(I(L_8)^2) = 4") {
        auto ideal = edge_ideal(path(8));
        REQUIRE(v_number(ideal).value == 2);
        REQUIRE(v_number(power(ideal, 2)).value == 4);
    }
    SECTION("improper ideals are rejected") {
        VarSet v2 = VarSet::standard(2);
        REQUIRE_THROWS_AS(v_number(MonomialIdeal::zero(v2)), NotProper);
        REQUIRE_THROWS_AS(v_number(MonomialIdeal::unit(v2)), NotProper);
    }
    SECTION("stable-set route demands square-free input") {
        VarSet v2 = VarSet::standard(2);
        REQUIRE_THROWS_AS(v_number(ideal_of(v2, {{2, 0}, {1, 1}}), VMethod::StableSet),
                          MethodInapplicable);
    }
    SECTION("colon route demands no embedded primes") {
        VarSet v2 = VarSet::standard(2);
        REQUIRE_THROWS_AS(v_number(ideal_of(v2, {{2, 0}, {1, 1}}), VMethod::Colon),
                          MethodInapplicable);
    }
}

TEST_CASE("the three methods agree on the corpus", "[vnumber][property]") {
    std::vector<MonomialIdeal> corpus;
    for (int n = 2; n <= 14; ++n) {
        corpus.push_back(edge_ideal(path(n)));
    }
    for (int n = 3; n <= 12; ++n) {
        corpus.push_back(edge_ideal(cycle(n)));
    }
    for (int n = 2; n <= 7; ++n) {
        corpus.push_back(edge_ideal(complete(n)));
    }
    for (int n = 4; n <= 14; ++n) {
        corpus.push_back(edge_ideal(graph_power(path(n), 2)));
    }
    for (int n = 5; n <= 12; ++n) {
        corpus.push_back(edge_ideal(graph_power(cycle(n), 2)));
    }
    corpus.push_back(mixed_ideal(MixedSpec{3, 3, {{1, 2}, {2, 1}}}));
    corpus.push_back(mixed_ideal(MixedSpec{4, 3, {{2, 2}}}));
    corpus.push_back(mixed_ideal(MixedSpec{3, 4, {{2, 3}, {3, 2}}}));
    corpus.push_back(mixed_ideal(MixedSpec{4, 4, {{1, 4}, {3, 2}, {4, 1}}}));

    for (const auto& ideal : corpus) {
        INFO("ideal " << ideal.to_string());
        auto stable = v_number(ideal, VMethod::StableSet);
        auto by_colon = v_number(ideal, VMethod::Colon);
        auto by_witness = v_number(ideal, VMethod::WitnessScan);
        REQUIRE(stable.value == by_colon.value);
        REQUIRE(stable.value == by_witness.value);
    }

    // symbolic powers are not square-free for k >= 2, but carry no embedded
    // primes and keep the colon and witness routes applicable
    std::vector<MonomialIdeal> symbolic_corpus = {
        symbolic_power(edge_ideal(complete(3)), 2),
        symbolic_power(edge_ideal(complete(3)), 3),
        symbolic_power(edge_ideal(complete(4)), 2),
        symbolic_power(edge_ideal(path(4)), 2),
        symbolic_power(edge_ideal(cycle(5)), 2),
    };
    for (const auto& ideal : symbolic_corpus) {
        INFO("ideal " << ideal.to_string());
        REQUIRE(v_number(ideal, VMethod::Colon).value ==
                v_number(ideal, VMethod::WitnessScan).value);
    }
}

TEST_CASE("witnesses certify independently", "[vnumber][property]") {
    std::vector<MonomialIdeal> corpus = {
        edge_ideal(path(7)),
        edge_ideal(cycle(6)),
        power(edge_ideal(path(5)), 2),
        symbolic_power(edge_ideal(complete(3)), 2),
    };
    VarSet v2 = VarSet::standard(2);
    corpus.push_back(ideal_of(v2, {{2, 0}, {1, 1}}));

    for (const auto& ideal : corpus) {
        auto result = v_number(ideal);
        INFO("ideal " << ideal.to_string());
        REQUIRE(result.witness.f.degree() == result.value);
        auto quotient = colon(ideal, result.witness.f);
        REQUIRE(quotient == result.witness.prime.as_ideal());
        REQUIRE_FALSE(ideal.contains(result.witness.f));
    }
}

TEST_CASE("stable-set witnesses satisfy the colon identity", "[vnumber][property]") {
    // For each minimal-size member A of the family, (I : t_A) = (N(A)).
    for (const Graph& g : {path(6), path(9), cycle(7), complete(4)}) {
        auto ideal = edge_ideal(g);
        const auto clutter_view = support_clutter(ideal);
        auto family = stable_sets_with_cover_neighborhoods(clutter_view);
        REQUIRE_FALSE(family.empty());
        size_t min_size = family.front().size();
        for (const auto& a : family) {
            if (a.size() > min_size) {
                break;
            }
            Monomial t_a = Monomial::from_support(g.vertex_count(), a);
            auto quotient = colon(ideal, t_a);
            PrimeFace expected(ideal.vars(), neighborhood(clutter_view, a));
            REQUIRE(quotient == expected.as_ideal());
        }
    }
}

TEST_CASE("localized v-numbers", "[vnumber]") {
    SECTION("I(L_4) at (x1, x3)") {
        auto ideal = edge_ideal(path(4));
        REQUIRE(v_number_localized(ideal, prime_of(ideal.vars(), {0, 2})) == 1);
    }
    SECTION("(x1^2, x1x2) at both of its primes") {
        VarSet v2 = VarSet::standard(2);
        auto ideal = ideal_of(v2, {{2, 0}, {1, 1}});
        REQUIRE(v_number_localized(ideal, prime_of(v2, {0, 1})) == 1);
        REQUIRE(v_number_localized(ideal, prime_of(v2, {0})) == 1);
    }
    SECTION("I(K_3) at (x1, x2)") {
        auto ideal = edge_ideal(complete(3));
        REQUIRE(v_number_localized(ideal, prime_of(ideal.vars(), {0, 1})) == 1);
    }
    SECTION("non-associated primes are rejected") {
        auto ideal = edge_ideal(path(4));
        REQUIRE_THROWS_AS(v_number_localized(ideal, prime_of(ideal.vars(), {0})), InvalidInput);
        REQUIRE_THROWS_AS(v_number_localized(ideal, prime_of(ideal.vars(), {0, 1, 2, 3})), InvalidInput);
    }
    SECTION("v is the minimum of the localized values") {
        for (const auto& ideal : {edge_ideal(path(6)), edge_ideal(cycle(5))}) {
            auto ass = associated_primes(ideal);
            int best = std::numeric_limits<int>::max();
            for (const auto& p : ass.primes) {
                best = std::min(best, v_number_localized(ideal, p));
            }
            REQUIRE(best == v_number(ideal).value);
        }
    }
}

TEST_CASE("polarization comparison", "[vnumber]") {
    SECTION("square-free ideals polarize to equal v") {
        auto report = polarization_vnumber_check(edge_ideal(path(5)));
        REQUIRE(report.ok());
        REQUIRE(report.v_polarized == report.v_original);
        REQUIRE_FALSE(report.has_embedded);
    }
    SECTION("(x^2) has v = 1 on both sides") {
        VarSet v1 = VarSet::standard(1);
        auto report = polarization_vnumber_check(ideal_of(v1, {{2}}));
        REQUIRE(report.v_original == 1);
        REQUIRE(report.v_polarized == 1);
        REQUIRE(report.ok());
        REQUIRE_FALSE(report.has_embedded);
    }
    SECTION("(x1^2, x1x2) has an embedded prime; only the inequality holds") {
        VarSet v2 = VarSet::standard(2);
        auto report = polarization_vnumber_check(ideal_of(v2, {{2, 0}, {1, 1}}));
        REQUIRE(report.has_embedded);
        REQUIRE(report.leq);
        REQUIRE(report.ok());
    }
    SECTION("random small ideals satisfy the inequality, equality without embedded primes") {
        std::mt19937 rng(20240913);
        VarSet v4 = VarSet::standard(4);
        int checked = 0;
        while (checked < 20) {
            std::vector<Monomial> gens;
            int count = 1 + int(rng() % 4);
            for (int i = 0; i < count; ++i) {
                std::vector<Exp> e(4);
                for (auto& x : e) {
                    x = static_cast<Exp>(rng() % 4);
                }
                gens.emplace_back(std::move(e));
            }
            auto ideal = MonomialIdeal::make(v4, std::move(gens));
            if (!ideal.is_proper()) {
                continue;
            }
            ++checked;
            auto report = polarization_vnumber_check(ideal);
            INFO("ideal " << ideal.to_string());
            REQUIRE(report.ok());
        }
    }
}

TEST_CASE("additivity and products over disjoint blocks", "[vnumber][property]") {
    // Embed I(L_a) and a shifted I(L_b) into one ring.
    auto embed_paths = [](int a, int b) {
        VarSet vars = VarSet::standard(a + b);
        std::vector<Monomial> left;
        std::vector<Monomial> right;
        for (int i = 0; i + 1 < a; ++i) {
            left.push_back(Monomial::from_support(a + b, {i, i + 1}));
        }
        for (int i = 0; i + 1 < b; ++i) {
            right.push_back(Monomial::from_support(a + b, {a + i, a + i + 1}));
        }
        return std::pair{MonomialIdeal::make(vars, left), MonomialIdeal::make(vars, right)};
    };
    for (auto [a, b] : {std::pair{2, 3}, std::pair{4, 5}, std::pair{5, 4}, std::pair{3, 6}}) {
        auto [left, right] = embed_paths(a, b);
        int v_left = v_number(left).value;
        int v_right = v_number(right).value;
        INFO("a = " << a << ", b = " << b);
        REQUIRE(v_number(sum(left, right)).value == v_left + v_right);
        REQUIRE(v_number(product(left, right)).value ==
                std::min(alpha(left) + v_right, alpha(right) + v_left));
    }
}

TEST_CASE("v is at least alpha minus one for equigenerated ideals", "[vnumber][property]") {
    std::vector<MonomialIdeal> corpus = {
        edge_ideal(path(8)),
        edge_ideal(cycle(7)),
        power(edge_ideal(complete(3)), 2),
        squarefree_power(edge_ideal(path(7)), 2),
        mixed_ideal(MixedSpec{3, 3, {{2, 2}}}),
    };
    for (const auto& ideal : corpus) {
        INFO("ideal " << ideal.to_string());
        REQUIRE(v_number(ideal).value >= alpha(ideal) - 1);
    }
}

TEST_CASE("colon-method scan equals the generator-level quotient degree", "[vnumber][property]") {
    // The pruning scan inside the colon route must agree with
    // min_degree_outside(colon(I, p), I) prime by prime.
    std::vector<MonomialIdeal> corpus = {
        edge_ideal(path(6)),
        edge_ideal(cycle(5)),
        power(edge_ideal(path(4)), 2),
        mixed_ideal(MixedSpec{3, 2, {{1, 2}, {2, 1}}}),
    };
    for (const auto& ideal : corpus) {
        auto ass = associated_primes(ideal);
        for (const auto& p : ass.primes) {
            auto expected = min_degree_outside(colon(ideal, p), ideal);
            auto scanned = detail::least_colon_quotient_degree(ideal, p, 1 << 20);
            INFO("ideal " << ideal.to_string() << " at prime " << p.to_string());
            REQUIRE(scanned == expected);
        }
    }
}
