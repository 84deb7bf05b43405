#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "cheeger/error.hpp"
#include "cheeger/graph.hpp"

namespace cheeger {

// Adjacency eigenvalues sorted descending: values[0] >= ... >= values[n-1].
struct Spectrum {
    std::vector<double> values;

    int size() const { return int(values.size()); }
    double operator[](int i) const { return values[std::size_t(i)]; }
};

namespace detail {

inline double off_diagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) sum += 2 * a[std::size_t(p) * n + q] * a[std::size_t(p) * n + q];
    return std::sqrt(sum);
}

// Cyclic Jacobi on a dense symmetric matrix (row-major, modified in place).
// Sweeps until the off-diagonal Frobenius norm drops below tol.
inline void jacobi_eigenvalues(std::vector<double>& a, int n, double tol, int max_sweeps = 100) {
    auto at = [&](int r, int c) -> double& { return a[std::size_t(r) * n + c]; };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a, n) < tol) return;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                const double tau = s / (1 + c);
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }
    if (off_diagonal_norm(a, n) >= tol)
        fail(errc::no_convergence, "Jacobi did not converge in " + std::to_string(max_sweeps) +
                                       " sweeps; this indicates a solver bug");
}

}  // namespace detail

inline Spectrum spectrum(const Graph& g, double tol = 1e-10) {
    if (tol <= 0) fail(errc::invalid_parameters, "tolerance must be positive");
    const int n = g.n;
    std::vector<double> a(std::size_t(n) * n, 0.0);
    for (int v = 0; v < n; ++v) {
        std::uint64_t nb = g.adj[v];
        while (nb) {
            const int u = std::countr_zero(nb);
            nb &= nb - 1;
            a[std::size_t(v) * n + u] = 1.0;
        }
    }
    detail::jacobi_eigenvalues(a, n, tol);
    Spectrum s;
    s.values.resize(std::size_t(n));
    for (int i = 0; i < n; ++i) s.values[std::size_t(i)] = a[std::size_t(i) * n + i];
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

// Spectral gap k - lambda_1.
inline double spectral_gap(const Spectrum& s, int k) {
    if (s.size() < 2) fail(errc::degenerate_spectrum, "need at least two eigenvalues");
    return k - s[1];
}

}  // namespace cheeger
