#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "vnum/errors.hpp"
#include "vnum/varset.hpp"

namespace vnum {

/// Subset of vertex indices, kept sorted.
using VertexSet = std::vector<int>;

/// Desk-scale limits for the exhaustive vertex-subset enumerations.
struct SearchLimits {
    std::uint64_t max_subsets = std::uint64_t(1) << 24;
    int max_witness_degree = 64;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (int v : s) {
        m |= Mask(1) << v;
    }
    return m;
}

inline VertexSet from_mask(Mask m) {
    VertexSet s;
    for (int v = 0; m != 0; ++v, m >>= 1) {
        if (m & 1) {
            s.push_back(v);
        }
    }
    return s;
}

}  // namespace detail

/// A clutter: vertex set plus hyperedges forming an antichain under
/// inclusion. At most 63 vertices (bitmask representation).
class Clutter {
  public:
    Clutter(VarSet vertices, std::vector<VertexSet> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        if (vertices_.count() > 63) {
            throw InvalidInput("Clutter supports at most 63 vertices");
        }
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (e.empty()) {
                throw InvalidInput("Clutter edges must be nonempty");
            }
            if (e.front() < 0 || e.back() >= vertices_.count()) {
                throw InvalidInput("Clutter edge vertex out of range");
            }
        }
        std::sort(edges_.begin(), edges_.end(), [](const VertexSet& a, const VertexSet& b) {
            if (a.size() != b.size()) {
                return a.size() < b.size();
            }
            return a < b;
        });
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        masks_.reserve(edges_.size());
        for (const auto& e : edges_) {
            masks_.push_back(detail::to_mask(e));
        }
        for (size_t i = 0; i < masks_.size(); ++i) {
            for (size_t j = 0; j < masks_.size(); ++j) {
                if (i != j && (masks_[i] & masks_[j]) == masks_[i]) {
                    throw InvalidInput("Clutter edges must form an antichain");
                }
            }
        }
    }

    const VarSet& vertices() const { return vertices_; }
    int vertex_count() const { return vertices_.count(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const std::vector<detail::Mask>& edge_masks() const { return masks_; }

    bool operator==(const Clutter& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

  private:
    VarSet vertices_;
    std::vector<VertexSet> edges_;
    std::vector<detail::Mask> masks_;
};

/// A simple undirected graph: a clutter whose edges all have two vertices.
class Graph {
  public:
    explicit Graph(Clutter clutter) : clutter_(std::move(clutter)) {
        adjacency_.assign(static_cast<size_t>(clutter_.vertex_count()), 0);
        for (const auto& e : clutter_.edges()) {
            if (e.size() != 2) {
                throw InvalidInput("Graph edges must have exactly two vertices");
            }
            adjacency_[static_cast<size_t>(e[0])] |= detail::Mask(1) << e[1];
            adjacency_[static_cast<size_t>(e[1])] |= detail::Mask(1) << e[0];
        }
    }

    Graph(VarSet vertices, std::vector<VertexSet> edges)
        : Graph(Clutter(std::move(vertices), std::move(edges))) {}

    const Clutter& clutter() const { return clutter_; }
    const VarSet& vertices() const { return clutter_.vertices(); }
    int vertex_count() const { return clutter_.vertex_count(); }
    const std::vector<VertexSet>& edges() const { return clutter_.edges(); }

    bool adjacent(int u, int v) const {
        return (adjacency_[static_cast<size_t>(u)] >> v) & 1;
    }

    detail::Mask adjacency_mask(int v) const { return adjacency_[static_cast<size_t>(v)]; }

    /// BFS distances from source; unreachable vertices get INT_MAX.
    std::vector<int> distances_from(int source) const {
        std::vector<int> dist(static_cast<size_t>(vertex_count()), std::numeric_limits<int>::max());
        std::queue<int> queue;
        dist[static_cast<size_t>(source)] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            detail::Mask nbrs = adjacency_[static_cast<size_t>(u)];
            for (int v = 0; nbrs != 0; ++v, nbrs >>= 1) {
                if ((nbrs & 1) && dist[static_cast<size_t>(v)] == std::numeric_limits<int>::max()) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    queue.push(v);
                }
            }
        }
        return dist;
    }

    bool operator==(const Graph& other) const { return clutter_ == other.clutter_; }

  private:
    Clutter clutter_;
    std::vector<detail::Mask> adjacency_;
};

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

/// Path graph L_n on vertices x1..xn.
inline Graph path(int n) {
    if (n < 2) {
        throw InvalidInput("path requires n >= 2");
    }
    std::vector<VertexSet> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    return Graph(VarSet::standard(n), std::move(edges));
}

/// Cycle graph C_n.
inline Graph cycle(int n) {
    if (n < 3) {
        throw InvalidInput("cycle requires n >= 3");
    }
    std::vector<VertexSet> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
    }
    edges.push_back({0, n - 1});
    return Graph(VarSet::standard(n), std::move(edges));
}

/// Complete graph K_n.
inline Graph complete(int n) {
    if (n < 2) {
        throw InvalidInput("complete requires n >= 2");
    }
    std::vector<VertexSet> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edges.push_back({i, j});
        }
    }
    return Graph(VarSet::standard(n), std::move(edges));
}

/// k-th graph power: same vertices, an edge wherever the distance is between
/// 1 and k. Unreachable pairs are never joined.
inline Graph graph_power(const Graph& g, int k) {
    if (k < 1) {
        throw InvalidInput("graph_power requires k >= 1");
    }
    std::vector<VertexSet> edges;
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<int> dist = g.distances_from(u);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            int d = dist[static_cast<size_t>(v)];
            if (d >= 1 && d <= k) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(g.vertices(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Stability, covers, neighborhoods
// ---------------------------------------------------------------------------

namespace detail {

inline bool is_stable_mask(const Clutter& c, Mask a) {
    for (Mask e : c.edge_masks()) {
        if ((e & a) == e) {
            return false;
        }
    }
    return true;
}

/// Neighborhood of a vertex set: vertices v outside A whose addition closes
/// an edge inside A union {v}. Queried for stable A; v ranges over V \ A.
inline Mask neighborhood_mask(const Clutter& c, Mask a) {
    Mask n = 0;
    for (Mask e : c.edge_masks()) {
        Mask outside = e & ~a;
        if (outside != 0 && (outside & (outside - 1)) == 0) {
            n |= outside;  // exactly one vertex missing from A
        }
    }
    return n;
}

inline bool is_cover_mask(const Clutter& c, Mask cover) {
    for (Mask e : c.edge_masks()) {
        if ((e & cover) == 0) {
            return false;
        }
    }
    return true;
}

/// Minimal cover: every cover vertex has a private edge.
inline bool is_minimal_cover_mask(const Clutter& c, Mask cover) {
    if (!is_cover_mask(c, cover)) {
        return false;
    }
    Mask privately_served = 0;
    for (Mask e : c.edge_masks()) {
        Mask hit = e & cover;
        if ((hit & (hit - 1)) == 0) {
            privately_served |= hit;
        }
    }
    return (privately_served & cover) == cover;
}

/// A is stable and its neighborhood is a minimal vertex cover.
inline bool in_stable_cover_family(const Clutter& c, Mask a) {
    if (!is_stable_mask(c, a)) {
        return false;
    }
    return is_minimal_cover_mask(c, neighborhood_mask(c, a));
}

/// Visit the size-k subsets of {0..n-1} in lexicographic order.
template <typename Visit>
bool for_each_subset_of_size(int n, int k, Visit&& visit) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        idx[static_cast<size_t>(i)] = i;
    }
    if (k > n) {
        return true;
    }
    while (true) {
        if (!visit(static_cast<const std::vector<int>&>(idx))) {
            return false;
        }
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) {
            --i;
        }
        if (i < 0) {
            return true;
        }
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
}

inline void check_subset_guard(const Clutter& c, const SearchLimits& limits) {
    if (c.vertex_count() >= 63 || (std::uint64_t(1) << c.vertex_count()) > limits.max_subsets) {
        throw GuardExceeded("subset enumeration over " + std::to_string(c.vertex_count()) +
                            " vertices exceeds the max-subsets guard");
    }
}

}  // namespace detail

inline bool is_stable(const Clutter& c, const VertexSet& a) {
    for (int v : a) {
        if (v < 0 || v >= c.vertex_count()) {
            throw InvalidInput("is_stable: vertex out of range");
        }
    }
    return detail::is_stable_mask(c, detail::to_mask(a));
}

inline VertexSet neighborhood(const Clutter& c, const VertexSet& a) {
    for (int v : a) {
        if (v < 0 || v >= c.vertex_count()) {
            throw InvalidInput("neighborhood: vertex out of range");
        }
    }
    return detail::from_mask(detail::neighborhood_mask(c, detail::to_mask(a)));
}

inline bool is_vertex_cover(const Clutter& c, const VertexSet& cover) {
    return detail::is_cover_mask(c, detail::to_mask(cover));
}

inline bool is_minimal_vertex_cover(const Clutter& c, const VertexSet& cover) {
    return detail::is_minimal_cover_mask(c, detail::to_mask(cover));
}

/// All inclusion-minimal transversals, in canonical (size, lex) order.
inline std::vector<VertexSet> minimal_vertex_covers(const Clutter& c,
                                                    const SearchLimits& limits = {}) {
    detail::check_subset_guard(c, limits);
    std::vector<VertexSet> covers;
    int n = c.vertex_count();
    for (int size = 0; size <= n; ++size) {
        detail::for_each_subset_of_size(n, size, [&](const std::vector<int>& subset) {
            if (detail::is_minimal_cover_mask(c, detail::to_mask(subset))) {
                covers.push_back(subset);
            }
            return true;
        });
    }
    return covers;
}

/// The family A_C: stable sets whose neighborhood is a minimal vertex cover.
/// Exhaustive scan, canonical (size, lex) order.
inline std::vector<VertexSet> stable_sets_with_cover_neighborhoods(const Clutter& c,
                                                                   const SearchLimits& limits = {}) {
    detail::check_subset_guard(c, limits);
    std::vector<VertexSet> family;
    int n = c.vertex_count();
    for (int size = 0; size <= n; ++size) {
        detail::for_each_subset_of_size(n, size, [&](const std::vector<int>& subset) {
            if (detail::in_stable_cover_family(c, detail::to_mask(subset))) {
                family.push_back(subset);
            }
            return true;
        });
    }
    return family;
}

/// First member of A_C in size-then-lex order; the size-ordered scan
/// short-circuits v-number queries at the first witness size.
inline std::optional<VertexSet> min_stable_cover_witness(const Clutter& c,
                                                         const SearchLimits& limits = {}) {
    detail::check_subset_guard(c, limits);
    int n = c.vertex_count();
    for (int size = 0; size <= n; ++size) {
        std::optional<VertexSet> hit;
        detail::for_each_subset_of_size(n, size, [&](const std::vector<int>& subset) {
            if (detail::in_stable_cover_family(c, detail::to_mask(subset))) {
                hit = subset;
                return false;
            }
            return true;
        });
        if (hit) {
            return hit;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matchings
// ---------------------------------------------------------------------------

namespace detail {

inline int max_matching_from(const Graph& g, Mask available, std::map<Mask, int>& memo) {
    int pivot = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (((available >> v) & 1) && (g.adjacency_mask(v) & available) != 0) {
            pivot = v;
            break;
        }
    }
    if (pivot < 0) {
        return 0;
    }
    auto it = memo.find(available);
    if (it != memo.end()) {
        return it->second;
    }
    // Either the pivot stays unmatched or one of its incident edges is used.
    int best = max_matching_from(g, available & ~(Mask(1) << pivot), memo);
    Mask nbrs = g.adjacency_mask(pivot) & available;
    for (int u = 0; nbrs != 0; ++u, nbrs >>= 1) {
        if (nbrs & 1) {
            Mask rest = available & ~(Mask(1) << pivot) & ~(Mask(1) << u);
            best = std::max(best, 1 + max_matching_from(g, rest, memo));
        }
    }
    memo.emplace(available, best);
    return best;
}

}  // namespace detail

/// Exact maximum matching size.
inline int matching_number(const Graph& g) {
    std::map<detail::Mask, int> memo;
    detail::Mask all = (g.vertex_count() == 63) ? ~detail::Mask(0) >> 1
                                                : (detail::Mask(1) << g.vertex_count()) - 1;
    return detail::max_matching_from(g, all, memo);
}

/// All matchings with exactly k edges, each matching listed with its edges in
/// the graph's canonical edge order.
inline std::vector<std::vector<VertexSet>> matchings_of_size(const Graph& g, int k) {
    if (k < 0) {
        throw InvalidInput("matchings_of_size requires k >= 0");
    }
    std::vector<std::vector<VertexSet>> out;
    std::vector<VertexSet> current;
    const auto& edges = g.edges();
    const auto& masks = g.clutter().edge_masks();

    auto recurse = [&](auto&& self, size_t start, detail::Mask used) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (size_t i = start; i < edges.size(); ++i) {
            if ((masks[i] & used) == 0) {
                current.push_back(edges[i]);
                self(self, i + 1, used | masks[i]);
                current.pop_back();
            }
        }
    };
    recurse(recurse, 0, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Even connections
// ---------------------------------------------------------------------------

namespace detail {

/// Search for a walk u = p_0, ..., p_{2r+1} = v (r >= 1) whose odd steps are
/// arbitrary edges of G and whose even steps each consume one unused matching
/// edge. States are (vertex, used-edge set, parity).
inline bool even_connected(const Graph& g, const std::vector<VertexSet>& matching, int u, int v) {
    int s = static_cast<int>(matching.size());
    std::vector<std::pair<int, int>> match_edges;
    match_edges.reserve(matching.size());
    for (const auto& e : matching) {
        match_edges.emplace_back(e[0], e[1]);
    }
    // visited[vertex][used][parity]; parity 0 = about to take a free step.
    std::vector<std::vector<std::array<bool, 2>>> visited(
        static_cast<size_t>(g.vertex_count()),
        std::vector<std::array<bool, 2>>(static_cast<size_t>(1) << s, {false, false}));
    std::queue<std::tuple<int, unsigned, int>> queue;
    queue.emplace(u, 0u, 0);
    visited[static_cast<size_t>(u)][0][0] = true;
    while (!queue.empty()) {
        auto [w, used, parity] = queue.front();
        queue.pop();
        if (parity == 0) {
            Mask nbrs = g.adjacency_mask(w);
            for (int z = 0; nbrs != 0; ++z, nbrs >>= 1) {
                if (!(nbrs & 1)) {
                    continue;
                }
                if (z == v && used != 0) {
                    return true;  // ends at an odd position after >= 1 matching step
                }
                if (!visited[static_cast<size_t>(z)][used][1]) {
                    visited[static_cast<size_t>(z)][used][1] = true;
                    queue.emplace(z, used, 1);
                }
            }
        } else {
            for (int i = 0; i < s; ++i) {
                if ((used >> i) & 1) {
                    continue;
                }
                auto [a, b] = match_edges[static_cast<size_t>(i)];
                int z = (w == a) ? b : (w == b) ? a : -1;
                if (z < 0) {
                    continue;
                }
                unsigned next_used = used | (1u << i);
                if (!visited[static_cast<size_t>(z)][next_used][0]) {
                    visited[static_cast<size_t>(z)][next_used][0] = true;
                    queue.emplace(z, next_used, 0);
                }
            }
        }
    }
    return false;
}

}  // namespace detail

/// The graph H of colon ideals of square-free powers: vertices V(G) minus the
/// support of the matching product, edges wherever two remaining vertices are
/// adjacent in G or even-connected with respect to the matching edges.
/// Returned over the same VarSet; vertices inside the support stay isolated.
inline Graph even_connection_graph(const Graph& g, const std::vector<VertexSet>& matching) {
    if (matching.empty()) {
        throw InvalidInput("even_connection_graph requires at least one matching edge");
    }
    if (matching.size() > 12) {
        throw InvalidInput("even_connection_graph: matching too large");  // 2^s walk states
    }
    detail::Mask support = 0;
    for (const auto& e : matching) {
        if (e.size() != 2) {
            throw InvalidInput("even_connection_graph: matching entries must be edges");
        }
        bool in_graph = std::find(g.edges().begin(), g.edges().end(),
                                  VertexSet{std::min(e[0], e[1]), std::max(e[0], e[1])}) != g.edges().end();
        if (!in_graph) {
            throw InvalidInput("even_connection_graph: edge not in graph");
        }
        detail::Mask m = detail::to_mask(e);
        if ((support & m) != 0) {
            throw InvalidInput("even_connection_graph: edges are not pairwise disjoint");
        }
        support |= m;
    }
    if (static_cast<int>(matching.size()) > matching_number(g) - 1) {
        throw InvalidInput("even_connection_graph requires s <= match(G) - 1");
    }

    std::vector<VertexSet> edges;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if ((support >> u) & 1) {
            continue;
        }
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if ((support >> v) & 1) {
                continue;
            }
            if (g.adjacent(u, v) || detail::even_connected(g, matching, u, v)) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(g.vertices(), std::move(edges));
}

}  // namespace vnum
