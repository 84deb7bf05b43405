#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cheeger/bounds.hpp"
#include "cheeger/linear.hpp"
#include "cheeger/seed.hpp"

using namespace cheeger;

TEST_CASE("bounds at K4 are tight") {
    const BoundSet b = bounds(3, 4, -1.0);
    CHECK_THAT(b.lower, Catch::Matchers::WithinAbs(2.0, 1e-12));
    CHECK_THAT(b.upper_gap, Catch::Matchers::WithinAbs(std::sqrt(24.0), 1e-12));
    CHECK_THAT(b.upper_mohar_size, Catch::Matchers::WithinAbs(2.0, 1e-12));
    CHECK_THAT(b.upper_mohar_spec, Catch::Matchers::WithinAbs(std::sqrt(8.0), 1e-12));
    CHECK_THAT(b.upper, Catch::Matchers::WithinAbs(2.0, 1e-12));
}

TEST_CASE("bounds at C6 bracket h = 2/3") {
    const BoundSet b = bounds(2, 6, 1.0);
    CHECK_THAT(b.lower, Catch::Matchers::WithinAbs(0.5, 1e-12));
    CHECK_THAT(b.upper_gap, Catch::Matchers::WithinAbs(2.0, 1e-12));
    CHECK_THAT(b.upper_mohar_size, Catch::Matchers::WithinAbs(1.2, 1e-12));
    CHECK_THAT(b.upper_mohar_spec, Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-12));
    CHECK_THAT(b.upper, Catch::Matchers::WithinAbs(1.2, 1e-12));
    CHECK(b.lower <= 2.0 / 3.0);
    CHECK(2.0 / 3.0 <= b.upper);
}

TEST_CASE("odd-n size bound uses the (n+1)/(n-1) branch") {
    const BoundSet b = bounds(3, 5, 1.0);
    CHECK_THAT(b.upper_mohar_size, Catch::Matchers::WithinAbs(2.25, 1e-12));
}

TEST_CASE("n = 3 omits the K3-excluded bound from the minimum") {
    // K3: h = 2 but sqrt(k^2 - lambda1^2) = sqrt(3) < 2, so it must not cap.
    const BoundSet b = bounds(2, 3, -1.0);
    CHECK_THAT(b.upper_mohar_spec, Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-12));
    CHECK_THAT(b.upper, Catch::Matchers::WithinAbs(2.0, 1e-12));
    CHECK(b.upper >= 2.0);  // h(K3) = 2 must satisfy the sandwich
}

TEST_CASE("bounds reject inconsistent spectra") {
    CHECK_THROWS_MATCHES(bounds(3, 6, 3.5), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_spectrum;
                         }));
    CHECK_THROWS_AS(bounds(5, 4, 1.0), error);  // k >= n
    // within roundoff of k is fine
    CHECK_NOTHROW(bounds(3, 6, 3.0 + 1e-10));
}

TEST_CASE("deviation basics") {
    CHECK(deviation(2.0, 2.0) == 0.0);
    CHECK_THAT(deviation(1.5, 2.0), Catch::Matchers::WithinAbs(0.25, 1e-15));
    CHECK_THAT(deviation(2.5, 2.0), Catch::Matchers::WithinAbs(0.25, 1e-15));
    CHECK_THROWS_AS(deviation(1.0, 0.0), error);
}

TEST_CASE("deviation is scale invariant") {
    Rng rng(Seed{5, 5});
    for (int i = 0; i < 200; ++i) {
        const double a = 0.1 + rng.unit() * 5;
        const double b = 0.1 + rng.unit() * 5;
        const double c = 0.1 + rng.unit() * 10;
        CHECK_THAT(deviation(c * a, c * b), Catch::Matchers::WithinRel(deviation(a, b), 1e-12));
    }
}

TEST_CASE("fit recovers exact affine data") {
    // h = 0.5*l0 - (1/3)*l1 + 0.1 on non-collinear inputs
    SampleSet records;
    const double pts[][2] = {{3, -1}, {4, 1}, {5, 0}, {4, -2}, {6, 2}};
    for (auto& p : pts) {
        Sample s;
        s.inputs = {p[0], p[1]};
        s.target = 0.5 * p[0] - p[1] / 3.0 + 0.1;
        records.push_back(s);
    }
    const LinearModel model = fit_linear(records);
    CHECK_THAT(model.coeffs[0], Catch::Matchers::WithinAbs(0.5, 1e-9));
    CHECK_THAT(model.coeffs[1], Catch::Matchers::WithinAbs(-1.0 / 3.0, 1e-9));
    CHECK_THAT(model.intercept, Catch::Matchers::WithinAbs(0.1, 1e-9));
}

TEST_CASE("fit rejects degenerate data") {
    SampleSet identical(6, Sample{{3.0, 1.0}, 1.0});
    CHECK_THROWS_MATCHES(fit_linear(identical), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::rank_deficient;
                         }));
    SampleSet too_few(3, Sample{{3.0, 1.0}, 1.0});
    CHECK_THROWS_AS(fit_linear(too_few), error);
    CHECK_THROWS_AS(fit_linear({}), error);
}

TEST_CASE("residuals are orthogonal to the design columns") {
    Rng rng(Seed{8, 1});
    SampleSet records;
    for (int i = 0; i < 300; ++i) {
        Sample s;
        s.inputs = {3 + 4 * rng.unit(), 3 * rng.unit() - 1};
        s.target = 0.4 * s.inputs[0] - 0.3 * s.inputs[1] + 0.2 + 0.05 * (rng.unit() - 0.5);
        records.push_back(s);
    }
    const LinearModel model = fit_linear(records);
    double dot0 = 0, dot1 = 0, dot_const = 0, scale = 0;
    for (const Sample& s : records) {
        const double r = predict_linear(model, s.inputs) - s.target;
        dot0 += r * s.inputs[0];
        dot1 += r * s.inputs[1];
        dot_const += r;
        scale += std::abs(r) * std::abs(s.inputs[0]);
    }
    const double tol = 1e-8 * std::max(1.0, scale);
    CHECK(std::abs(dot0) < tol);
    CHECK(std::abs(dot1) < tol);
    CHECK(std::abs(dot_const) < tol);
}

TEST_CASE("predict_linear evaluates the affine form") {
    LinearModel model;
    model.coeffs = {0.5, -1.0 / 3.0};
    model.intercept = 0;
    const double a[] = {3.0, -1.0};
    CHECK_THAT(predict_linear(model, a), Catch::Matchers::WithinAbs(1.5 + 1.0 / 3.0, 1e-12));
    const double b[] = {2.0, 1.0};
    CHECK_THAT(predict_linear(model, b), Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-12));
    LinearModel zero;
    zero.coeffs = {0, 0};
    CHECK(predict_linear(zero, a) == 0.0);
    const double wrong[] = {1.0, 2.0, 3.0};
    CHECK_THROWS_MATCHES(predict_linear(model, wrong), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::arity_mismatch;
                         }));
}

TEST_CASE("linear model round-trips through its file form") {
    LinearModel model;
    model.coeffs = {0.5123456789012345, -0.3333333333333333};
    model.intercept = 0.1;
    const LinearModel back = parse_linear(serialize_linear(model));
    CHECK(back.coeffs == model.coeffs);
    CHECK(back.intercept == model.intercept);
    CHECK_THROWS_AS(parse_linear("garbage\n"), error);
}
