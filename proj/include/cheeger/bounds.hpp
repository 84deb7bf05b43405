#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "cheeger/error.hpp"

namespace cheeger {

// Closed-form bounds on h(G) for a connected k-regular graph on n vertices:
// spectral-gap pair (k - λ1)/2 <= h <= sqrt(2k(k - λ1)), the size bound
// (k/2)·n/(n-1) (even n) or (k/2)·(n+1)/(n-1) (odd n), and sqrt(k² - λ1²),
// which holds for every graph except K1, K2, K3. `upper` is the smallest
// applicable upper bound.
struct BoundSet {
    double lower = 0;
    double upper_gap = 0;
    double upper_mohar_size = 0;
    double upper_mohar_spec = 0;
    double upper = 0;
};

inline BoundSet bounds(int k, int n, double lambda1) {
    if (k < 2 || k >= n)
        fail(errc::invalid_parameters,
             "need 2 <= k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (std::abs(lambda1) > k + 1e-9)
        fail(errc::invalid_spectrum, "|lambda1| = " + std::to_string(std::abs(lambda1)) +
                                         " exceeds the degree " + std::to_string(k));
    lambda1 = std::clamp(lambda1, double(-k), double(k));

    BoundSet b;
    b.lower = (k - lambda1) / 2;
    b.upper_gap = std::sqrt(2.0 * k * (k - lambda1));
    b.upper_mohar_size = (n % 2 == 0) ? 0.5 * k * n / (n - 1) : 0.5 * k * (n + 1) / (n - 1);
    b.upper_mohar_spec = std::sqrt(double(k) * k - lambda1 * lambda1);
    b.upper = std::min(b.upper_gap, b.upper_mohar_size);
    if (n > 3) b.upper = std::min(b.upper, b.upper_mohar_spec);  // n = 3 means K3
    return b;
}

// Relative deviation Δh = |h_est - h| / h of an estimate from the true value.
inline double deviation(double h_est, double h_true) {
    if (!(h_true > 0))
        fail(errc::invalid_parameters,
             "true Cheeger constant must be positive, got " + std::to_string(h_true));
    return std::abs((h_est - h_true) / h_true);
}

}  // namespace cheeger
