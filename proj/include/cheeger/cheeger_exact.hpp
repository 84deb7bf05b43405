#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cheeger/error.hpp"
#include "cheeger/graph.hpp"

namespace cheeger {

// h = boundary/size held as an exact integer pair so oracle comparisons never
// hit float ties; h is the real quotient for callers that want a number.
struct CheegerResult {
    std::int64_t boundary = 0;   // |∂F| at the minimizer
    std::int64_t size = 0;       // |F|, 1 <= size <= n/2
    double h = 0;                // boundary / size
    std::uint64_t witness = 0;   // minimizing subset as a bitmask

    std::vector<int> witness_vertices() const {
        std::vector<int> out;
        std::uint64_t m = witness;
        while (m) {
            out.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        return out;
    }
};

// Edges with exactly one endpoint in subset.
inline std::int64_t edge_boundary(const Graph& g, std::uint64_t subset) {
    std::int64_t count = 0;
    std::uint64_t m = subset;
    while (m) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        count += std::popcount(g.adj[v] & ~subset);
    }
    return count;
}

inline constexpr int kExactCap = 40;
inline constexpr int kNaiveCap = 16;

// Visits every nonempty subset of {0..n-1} in binary-reflected Gray order,
// maintaining |F| and |∂F| incrementally: toggling v changes |∂F| by
// k - 2*|N(v) ∩ F|, with the sign set by insertion vs removal.
template <class Visit>
void gray_subset_walk(const Graph& g, Visit&& visit) {
    const int n = g.n;
    const int k = g.k;
    std::uint64_t subset = 0;
    std::int64_t size = 0;
    std::int64_t boundary = 0;
    const std::uint64_t steps = std::uint64_t(1) << n;
    for (std::uint64_t i = 1; i < steps; ++i) {
        const int v = std::countr_zero(i);
        const std::int64_t cut = k - 2 * std::popcount(g.adj[v] & subset);
        if (subset & bit(v)) {
            subset ^= bit(v);
            --size;
            boundary -= cut;
        } else {
            subset |= bit(v);
            ++size;
            boundary += cut;
        }
        visit(subset, size, boundary);
    }
}

namespace detail {

inline void check_solver_input(const Graph& g, int cap) {
    if (g.n > cap)
        fail(errc::too_large,
             "n = " + std::to_string(g.n) + " exceeds the cap of " + std::to_string(cap));
    if (!is_connected(g))
        fail(errc::not_connected, "Cheeger constant of a disconnected graph would be 0");
}

}  // namespace detail

// Exact minimum of |∂F|/|F| over nonempty F with |F| <= floor(n/2), by a
// Gray-code sweep over all subsets. Ties keep the first witness encountered.
inline CheegerResult cheeger_exact(const Graph& g) {
    detail::check_solver_input(g, kExactCap);
    const std::int64_t half = g.n / 2;
    // {0} is the first subset in Gray order; start from it.
    CheegerResult best{g.k, 1, 0.0, bit(0)};
    gray_subset_walk(g, [&](std::uint64_t subset, std::int64_t size, std::int64_t boundary) {
        if (size < 1 || size > half) return;
        if (boundary * best.size < best.boundary * size) {
            best.boundary = boundary;
            best.size = size;
            best.witness = subset;
        }
    });
    best.h = double(best.boundary) / double(best.size);
    return best;
}

// Independent oracle for cheeger_exact: plain numeric subset order and the
// boundary recomputed from scratch each time. Keep it dumb.
inline CheegerResult cheeger_naive(const Graph& g) {
    detail::check_solver_input(g, kNaiveCap);
    const std::int64_t half = g.n / 2;
    CheegerResult best{g.k, 1, 0.0, 1};
    const std::uint64_t stop = std::uint64_t(1) << g.n;
    for (std::uint64_t subset = 1; subset < stop; ++subset) {
        const std::int64_t size = std::popcount(subset);
        if (size > half) continue;
        const std::int64_t boundary = edge_boundary(g, subset);
        if (boundary * best.size < best.boundary * size) {
            best.boundary = boundary;
            best.size = size;
            best.witness = subset;
        }
    }
    best.h = double(best.boundary) / double(best.size);
    return best;
}

}  // namespace cheeger
