#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cheeger/error.hpp"
#include "cheeger/seed.hpp"

namespace cheeger {

inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

// Simple k-regular undirected graph on n <= 64 vertices. Each neighborhood is
// a 64-bit mask, so |N(v) ∩ F| is a single popcount. The struct is plain data
// on purpose: validate() reports invariant violations instead of the
// constructor enforcing them.
struct Graph {
    int n = 0;
    int k = 0;
    std::vector<std::uint64_t> adj;  // adj[v] has bit u set iff {u,v} is an edge

    bool has_edge(int u, int v) const { return adj[u] & bit(v); }
    int degree_of(int v) const { return std::popcount(adj[v]); }

    std::int64_t edge_count() const {
        std::int64_t twice = 0;
        for (int v = 0; v < n; ++v) twice += degree_of(v);
        return twice / 2;
    }

    void add_edge(int u, int v) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
};

inline Graph empty_graph(int n, int k) {
    if (n < 1 || n > kMaxVertices)
        fail(errc::invalid_parameters, "vertex count " + std::to_string(n) + " outside [1, 64]");
    return Graph{n, k, std::vector<std::uint64_t>(std::size_t(n), 0)};
}

inline Graph complete_graph(int n) {
    Graph g = empty_graph(n, n - 1);
    const std::uint64_t all = (n == 64) ? ~std::uint64_t(0) : bit(n) - 1;
    for (int v = 0; v < n; ++v) g.adj[v] = all ^ bit(v);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = empty_graph(n, 2);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes v—v+5.
inline Graph petersen_graph() {
    Graph g = empty_graph(10, 3);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(5 + v, 5 + (v + 2) % 5);
        g.add_edge(v, v + 5);
    }
    return g;
}

inline Graph graph_from_edges(int n, int k, const std::vector<std::pair<int, int>>& edges) {
    Graph g = empty_graph(n, k);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            fail(errc::invalid_parameters,
                 "bad edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        g.add_edge(u, v);
    }
    return g;
}

// True iff breadth-first traversal from vertex 0 reaches all n vertices.
inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::uint64_t visited = bit(0);
    std::uint64_t frontier = visited;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[v];
        }
        frontier = next & ~visited;
        visited |= next;
    }
    return std::popcount(visited) == g.n;
}

// Empty iff all Graph invariants hold; violations name the vertex or edge.
inline std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> out;
    if (g.n < 3) out.push_back("vertex count " + std::to_string(g.n) + " < 3");
    if (g.k < 2 || g.k > g.n - 1)
        out.push_back("degree " + std::to_string(g.k) + " outside [2, n-1]");
    if ((std::int64_t(g.n) * g.k) % 2 != 0)
        out.push_back("n*k = " + std::to_string(g.n * g.k) + " is odd");
    if (int(g.adj.size()) != g.n) {
        out.push_back("adjacency has " + std::to_string(g.adj.size()) + " rows, expected " +
                      std::to_string(g.n));
        return out;  // row accesses below would be out of bounds
    }
    const std::uint64_t inside = (g.n == 64) ? ~std::uint64_t(0) : bit(g.n) - 1;
    for (int v = 0; v < g.n; ++v) {
        if (g.adj[v] & ~inside)
            out.push_back("vertex " + std::to_string(v) + " has neighbors >= n");
        if (g.adj[v] & bit(v)) out.push_back("self-loop at vertex " + std::to_string(v));
        if (g.degree_of(v) != g.k)
            out.push_back("vertex " + std::to_string(v) + " has degree " +
                          std::to_string(g.degree_of(v)) + ", expected " + std::to_string(g.k));
        std::uint64_t nb = g.adj[v] & inside;
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (!(g.adj[u] & bit(v)))
                out.push_back("asymmetric edge: " + std::to_string(v) + " -> " +
                              std::to_string(u) + " but not back");
        }
    }
    return out;
}

namespace detail {

// One pairing-model pass: grow a simple matching on the n*k half-edge points,
// drawing uniformly random point pairs and accepting only pairs that join
// distinct non-adjacent vertices. Returns false when stuck (points remain but
// no legal pair exists).
inline bool pairing_pass(Graph& g, Rng& rng) {
    for (auto& row : g.adj) row = 0;
    std::vector<int> points(std::size_t(g.n) * g.k);
    for (std::size_t p = 0; p < points.size(); ++p) points[p] = int(p) / g.k;

    std::size_t live = points.size();
    int failures = 0;
    while (live > 0) {
        std::size_t i = std::size_t(rng.below(live));
        std::size_t j = std::size_t(rng.below(live - 1));
        if (j >= i) ++j;
        const int u = points[i];
        const int v = points[j];
        if (u != v && !g.has_edge(u, v)) {
            g.add_edge(u, v);
            if (i < j) std::swap(i, j);
            points[i] = points[--live];  // remove larger index first
            points[j] = points[live - 1];
            --live;
            failures = 0;
            continue;
        }
        // Long failure runs happen only near the tail; scan for a legal pair
        // before giving up.
        if (++failures >= 64) {
            bool legal = false;
            for (std::size_t a = 0; a < live && !legal; ++a)
                for (std::size_t b = a + 1; b < live && !legal; ++b)
                    legal = points[a] != points[b] && !g.has_edge(points[a], points[b]);
            if (!legal) return false;
            failures = 0;
        }
    }
    return true;
}

}  // namespace detail

// Uniform-like random connected simple k-regular graph, deterministic in
// (n, k, seed). Dead ends and disconnected outputs restart the pairing pass
// on the next derived substream.
inline Graph generate_regular(int n, int k, Seed seed, int max_restarts = 10000) {
    if (n < 3 || n > kMaxVertices)
        fail(errc::invalid_parameters, "vertex count " + std::to_string(n) + " outside [3, 64]");
    if (k < 2 || k > n - 1)
        fail(errc::invalid_parameters,
             "degree " + std::to_string(k) + " outside [2, " + std::to_string(n - 1) + "]");
    if ((std::int64_t(n) * k) % 2 != 0)
        fail(errc::invalid_parameters,
             "n*k must be even, got " + std::to_string(n) + "*" + std::to_string(k));

    Graph g = empty_graph(n, k);
    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        Rng rng(seed, std::uint64_t(attempt));
        if (detail::pairing_pass(g, rng) && is_connected(g)) return g;
    }
    fail(errc::generation_exhausted, "no connected simple graph after " +
                                         std::to_string(max_restarts) + " restarts for n=" +
                                         std::to_string(n) + " k=" + std::to_string(k));
}

}  // namespace cheeger
