#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cheeger/graph.hpp"
#include "cheeger/spectral.hpp"
#include "testing.hpp"

using namespace cheeger;

namespace {

void check_moment_invariants(const Graph& g, const Spectrum& s) {
    const int n = g.n;
    double sum = 0, sum_sq = 0;
    for (double v : s.values) {
        sum += v;
        sum_sq += v * v;
        CHECK(std::abs(v) <= g.k + 1e-8);
    }
    CHECK(std::abs(sum) <= 1e-8 * n);                        // trace
    CHECK(std::abs(sum_sq - double(n) * g.k) <= 1e-8 * n * n);  // Frobenius
    CHECK(std::abs(s[0] - g.k) <= 1e-8);                     // Perron
    for (int i = 1; i < n; ++i) CHECK(s[i] <= s[i - 1] + 1e-12);
}

}  // namespace

TEST_CASE("complete graph spectrum is k and -1s") {
    const Spectrum s = spectrum(complete_graph(4));
    REQUIRE(s.size() == 4);
    CHECK_THAT(s[0], Catch::Matchers::WithinAbs(3.0, 1e-8));
    for (int i = 1; i < 4; ++i) CHECK_THAT(s[i], Catch::Matchers::WithinAbs(-1.0, 1e-8));
}

TEST_CASE("C6 spectrum matches 2cos(2pi j/6)") {
    const Spectrum s = spectrum(cycle_graph(6));
    const double expect[6] = {2, 1, 1, -1, -1, -2};
    REQUIRE(s.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK_THAT(s[i], Catch::Matchers::WithinAbs(expect[i], 1e-8));
}

TEST_CASE("Petersen spectrum is 3, 1^5, -2^4") {
    const Graph pete = petersen_graph();

    // Independent verification first: the known closed form must be a root
    // multiset of the integer characteristic polynomial, (x-3)(x-1)^5(x+2)^4.
    const auto poly = testoracle::char_poly(pete);
    const double expect[10] = {3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
    for (double root : {3.0, 1.0, -2.0})
        CHECK(testoracle::eval_poly(poly, root) == 0.0);  // integer-exact roots
    // ... and the power sums of the closed form must equal trace(A^m).
    for (int m = 1; m <= 4; ++m) {
        double ps = 0;
        for (double v : expect) ps += std::pow(v, m);
        CHECK_THAT(double(testoracle::trace_power(pete, m)), Catch::Matchers::WithinAbs(ps, 1e-9));
    }

    const Spectrum s = spectrum(pete);
    REQUIRE(s.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK_THAT(s[i], Catch::Matchers::WithinAbs(expect[i], 1e-8));
}

TEST_CASE("eigenvalues are roots of the characteristic polynomial for n <= 6") {
    std::vector<Graph> graphs = {complete_graph(3), complete_graph(4), complete_graph(5),
                                 complete_graph(6), cycle_graph(4),    cycle_graph(5),
                                 cycle_graph(6)};
    for (std::uint64_t s = 0; s < 10; ++s) graphs.push_back(generate_regular(6, 3, Seed{s, 5}));
    for (const Graph& g : graphs) {
        const auto poly = testoracle::char_poly(g);
        const Spectrum spec = spectrum(g);
        // |p| near a root scales with p' which is bounded by n * k^(n-1)
        // here; 1e-6 is far above Jacobi error and far below root spacing.
        for (int i = 0; i < g.n; ++i)
            CHECK(std::abs(testoracle::eval_poly(poly, spec[i])) < 1e-6);
        // Power sums pin the multiset, catching wrong multiplicities.
        for (int m = 1; m <= g.n; ++m) {
            double ps = 0;
            for (double v : spec.values) ps += std::pow(v, m);
            CHECK_THAT(ps, Catch::Matchers::WithinAbs(double(testoracle::trace_power(g, m)), 1e-6));
        }
    }
}

TEST_CASE("moment invariants hold on generated graphs") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{{8, 3}, {12, 5}, {20, 7}, {30, 4}}) {
        for (std::uint64_t s = 0; s < 4; ++s) {
            const Graph g = generate_regular(n, k, Seed{s, 17});
            check_moment_invariants(g, spectrum(g));
        }
    }
}

TEST_CASE("even cycles are bipartite witnesses") {
    for (int n : {6, 8, 10}) {
        const Spectrum s = spectrum(cycle_graph(n));
        CHECK_THAT(s[n - 1], Catch::Matchers::WithinAbs(-2.0, 1e-8));
    }
}

TEST_CASE("spectral gap of the standard graphs") {
    CHECK_THAT(spectral_gap(spectrum(complete_graph(4)), 3), Catch::Matchers::WithinAbs(4.0, 1e-8));
    CHECK_THAT(spectral_gap(spectrum(cycle_graph(6)), 2), Catch::Matchers::WithinAbs(1.0, 1e-8));
    CHECK_THAT(spectral_gap(spectrum(petersen_graph()), 3), Catch::Matchers::WithinAbs(2.0, 1e-8));
}

TEST_CASE("spectral_gap needs two eigenvalues") {
    Spectrum s;
    s.values = {3.0};
    CHECK_THROWS_MATCHES(spectral_gap(s, 3), error, Catch::Matchers::Predicate<error>(
        [](const error& e) { return e.code() == errc::degenerate_spectrum; }));
}

TEST_CASE("spectrum rejects non-positive tolerance") {
    CHECK_THROWS_AS(spectrum(complete_graph(4), 0.0), error);
}
