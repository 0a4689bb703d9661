#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "vnum/clutter.hpp"
#include "vnum/constructors.hpp"

using namespace vnum;

namespace {

VertexSet vs(std::initializer_list<int> v) { return VertexSet(v); }

bool family_contains(const std::vector<VertexSet>& family, const VertexSet& member) {
    return std::find(family.begin(), family.end(), member) != family.end();
}

}  // namespace

TEST_CASE("named graph families", "[clutter]") {
    REQUIRE(path(4).edges() == std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(cycle(3) == complete(3));
    REQUIRE(complete(4).edges().size() == 6);
    REQUIRE_THROWS_AS(path(1), InvalidInput);
    REQUIRE_THROWS_AS(cycle(2), InvalidInput);
    REQUIRE_THROWS_AS(complete(1), InvalidInput);
}

TEST_CASE("clutter validation", "[clutter]") {
    VarSet v3 = VarSet::standard(3);
    REQUIRE_THROWS_AS(Clutter(v3, {{0, 1}, {0}}), InvalidInput);  // nested edges
    REQUIRE_THROWS_AS(Clutter(v3, {{}}), InvalidInput);          // empty edge
    REQUIRE_THROWS_AS(Clutter(v3, {{0, 5}}), InvalidInput);      // out of range
    REQUIRE_NOTHROW(Clutter(v3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("graph powers", "[clutter]") {
    SECTION("square of the path on four vertices") {
        auto g = graph_power(path(4), 2);
        REQUIRE(g.edges() == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    }
    SECTION("first power is the graph itself") {
        REQUIRE(graph_power(path(5), 1) == path(5));
        REQUIRE(graph_power(cycle(6), 1) == cycle(6));
    }
    SECTION("the (d-1)-st power of a path is complete") {
        for (int d = 3; d <= 7; ++d) {
            REQUIRE(graph_power(path(d), d - 1) == complete(d));
        }
    }
    SECTION("powers are monotone and stabilize at the diameter") {
        for (const Graph& g : {path(7), cycle(8)}) {
            for (int k = 1; k + 1 <= g.vertex_count(); ++k) {
                auto small = graph_power(g, k);
                auto big = graph_power(g, k + 1);
                for (const auto& e : small.edges()) {
                    REQUIRE(family_contains(big.edges(), e));
                }
            }
            REQUIRE(graph_power(g, g.vertex_count() - 1) == complete(g.vertex_count()));
        }
    }
    SECTION("disconnected graphs never join unreachable pairs") {
        Graph two_edges(VarSet::standard(4), {{0, 1}, {2, 3}});
        auto powered = graph_power(two_edges, 3);
        REQUIRE(powered == two_edges);
    }
}

TEST_CASE("stability and neighborhoods", "[clutter]") {
    SECTION("K_3 with A = {x1}") {
        Graph g = complete(3);
        const auto& c = g.clutter();
        REQUIRE(is_stable(c, vs({0})));
        REQUIRE(neighborhood(c, vs({0})) == vs({1, 2}));
    }
    SECTION("L_6^2 with A = {x4}") {
        auto g = graph_power(path(6), 2);
        REQUIRE(is_stable(g.clutter(), vs({3})));
        REQUIRE(neighborhood(g.clutter(), vs({3})) == vs({1, 2, 4, 5}));
    }
    SECTION("the empty set is stable with empty neighborhood") {
        Graph g = cycle(5);
        const auto& c = g.clutter();
        REQUIRE(is_stable(c, {}));
        REQUIRE(neighborhood(c, {}).empty());
    }
}

TEST_CASE("minimal vertex covers", "[clutter]") {
    SECTION("L_4") {
        auto covers = minimal_vertex_covers(path(4).clutter());
        REQUIRE(covers == std::vector<VertexSet>{{0, 2}, {1, 2}, {1, 3}});
    }
    SECTION("K_3: all 2-subsets") {
        auto covers = minimal_vertex_covers(complete(3).clutter());
        REQUIRE(covers == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
    }
    SECTION("single edge") {
        Clutter c(VarSet::standard(2), {{0, 1}});
        REQUIRE(minimal_vertex_covers(c) == std::vector<VertexSet>{{0}, {1}});
    }
}

TEST_CASE("stable sets with minimal-cover neighborhoods", "[clutter]") {
    SECTION("K_3") {
        auto family = stable_sets_with_cover_neighborhoods(complete(3).clutter());
        REQUIRE(family == std::vector<VertexSet>{{0}, {1}, {2}});
    }
    SECTION("L_5 contains {x3}") {
        auto family = stable_sets_with_cover_neighborhoods(path(5).clutter());
        REQUIRE(family_contains(family, vs({2})));
        REQUIRE(neighborhood(path(5).clutter(), vs({2})) == vs({1, 3}));
    }
    SECTION("L_6^2 contains {x4}") {
        auto g = graph_power(path(6), 2);
        auto family = stable_sets_with_cover_neighborhoods(g.clutter());
        REQUIRE(family_contains(family, vs({3})));
    }
    SECTION("every member is stable with a minimal-cover neighborhood") {
        for (const Graph& g : {path(6), cycle(7), graph_power(path(7), 2)}) {
            const auto& c = g.clutter();
            auto covers = minimal_vertex_covers(c);
            for (const auto& a : stable_sets_with_cover_neighborhoods(c)) {
                REQUIRE(is_stable(c, a));
                REQUIRE(family_contains(covers, neighborhood(c, a)));
            }
        }
    }
}

TEST_CASE("stability is dual to covering", "[clutter][property]") {
    for (const Graph& g : {path(6), cycle(6), complete(5), graph_power(path(8), 2), path(12),
                           graph_power(cycle(12), 2)}) {
        const auto& c = g.clutter();
        int n = c.vertex_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            VertexSet a;
            VertexSet complement;
            for (int i = 0; i < n; ++i) {
                ((mask >> i) & 1 ? a : complement).push_back(i);
            }
            REQUIRE(is_stable(c, a) == is_vertex_cover(c, complement));
        }
    }
}

TEST_CASE("matching number", "[clutter]") {
    REQUIRE(matching_number(path(4)) == 2);
    REQUIRE(matching_number(complete(5)) == 2);
    REQUIRE(matching_number(path(7)) == 3);
    REQUIRE(matching_number(cycle(9)) == 4);
    REQUIRE(matchings_of_size(path(5), 2).size() == 3);
    REQUIRE(matchings_of_size(path(4), 2) == std::vector<std::vector<VertexSet>>{{{0, 1}, {2, 3}}});
}

TEST_CASE("even-connection graphs", "[clutter]") {
    SECTION("L_5 with the middle edge as matching product") {
        auto h = even_connection_graph(path(5), {{1, 2}});
        REQUIRE(h.edges() == std::vector<VertexSet>{{0, 3}, {3, 4}});
    }
    SECTION("no even connection leaves the induced subgraph") {
        // The end edge {x1,x2} of L_6 cannot be the middle of any alternating
        // walk between remaining vertices, so H is just the induced path.
        auto h = even_connection_graph(path(6), {{0, 1}});
        REQUIRE(h.edges() == std::vector<VertexSet>{{2, 3}, {3, 4}, {4, 5}});
    }
    SECTION("L_6 with the middle edge: {x2, x5} becomes even-connected") {
        auto h = even_connection_graph(path(6), {{2, 3}});
        REQUIRE(family_contains(h.edges(), vs({1, 4})));
        REQUIRE(h.edges() == std::vector<VertexSet>{{0, 1}, {1, 4}, {4, 5}});
    }
    SECTION("validation") {
        REQUIRE_THROWS_AS(even_connection_graph(path(5), {}), InvalidInput);
        REQUIRE_THROWS_AS(even_connection_graph(path(5), {{0, 2}}), InvalidInput);
        REQUIRE_THROWS_AS(even_connection_graph(path(5), {{0, 1}, {1, 2}}), InvalidInput);
        // s must stay below the matching number
        REQUIRE_THROWS_AS(even_connection_graph(path(5), {{0, 1}, {2, 3}}), InvalidInput);
    }
}

TEST_CASE("even-connection graphs reproduce colon ideals of square-free powers",
          "[clutter][property]") {
    for (const Graph& g : {path(5), path(6), cycle(6), path(7)}) {
        int match = matching_number(g);
        for (int s = 1; s <= std::min(2, match - 1); ++s) {
            for (const auto& matching : matchings_of_size(g, s)) {
                Monomial mu = Monomial::one(g.vertex_count());
                for (const auto& e : matching) {
                    mu = mu * Monomial::from_support(g.vertex_count(), e);
                }
                auto h = even_connection_graph(g, matching);
                auto lhs = edge_ideal(h);
                auto rhs = colon(squarefree_power(edge_ideal(g), s + 1), mu);
                INFO("graph on " << g.vertex_count() << " vertices, matching product "
                                 << mu.to_string(g.vertices()));
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("squared-path witnesses avoid the endpoints", "[clutter][property]") {
    // No minimum-size stable set with minimal-cover neighborhood contains
    // both ends of the path.
    for (int n = 4; n <= 14; ++n) {
        auto g = graph_power(path(n), 2);
        auto family = stable_sets_with_cover_neighborhoods(g.clutter());
        REQUIRE_FALSE(family.empty());
        size_t min_size = family.front().size();
        for (const auto& a : family) {
            if (a.size() > min_size) {
                break;
            }
            bool has_first = std::find(a.begin(), a.end(), 0) != a.end();
            bool has_last = std::find(a.begin(), a.end(), n - 1) != a.end();
            REQUIRE_FALSE((has_first && has_last));
        }
    }
}

TEST_CASE("subset guard", "[clutter]") {
    SearchLimits limits;
    limits.max_subsets = 1 << 4;
    REQUIRE_THROWS_AS(minimal_vertex_covers(path(6).clutter(), limits), GuardExceeded);
}
