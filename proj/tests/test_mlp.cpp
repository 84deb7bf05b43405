#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cheeger/mlp.hpp"
#include "testing.hpp"

using namespace cheeger;

TEST_CASE("parameter count follows the dimension chain") {
    const MlpModel m = mlp_init({2, 64, 64, 32, 16, 1}, Seed{1, 0});
    // 2*64+64 + 64*64+64 + 64*32+32 + 32*16+16 + 16*1+1
    CHECK(m.parameter_count() == 6977);
    CHECK(mlp_init({2, 1}, Seed{0, 0}).parameter_count() == 3);
}

TEST_CASE("init rejects bad dimension chains") {
    const auto is_dims = Catch::Matchers::Predicate<error>(
        [](const error& e) { return e.code() == errc::invalid_dims; });
    CHECK_THROWS_MATCHES(mlp_init({2, 0, 1}, Seed{}), error, is_dims);
    CHECK_THROWS_MATCHES(mlp_init({2}, Seed{}), error, is_dims);
    CHECK_THROWS_MATCHES(mlp_init({2, 8, 3}, Seed{}), error, is_dims);
}

TEST_CASE("init is deterministic and scaled by fan-in") {
    const MlpModel a = mlp_init({2, 64, 1}, Seed{9, 9});
    const MlpModel b = mlp_init({2, 64, 1}, Seed{9, 9});
    CHECK(a.weights == b.weights);
    const MlpModel c = mlp_init({2, 64, 1}, Seed{9, 10});
    CHECK(a.weights != c.weights);
    const double limit = std::sqrt(3.0 / 2.0);
    for (double w : a.weights[0]) CHECK(std::abs(w) <= limit);
    for (double bias : a.biases[0]) CHECK(bias == 0.0);
}

TEST_CASE("zero model outputs zero") {
    MlpModel m = mlp_init({2, 8, 1}, Seed{1, 1});
    for (auto& w : m.weights) std::fill(w.begin(), w.end(), 0.0);
    const double x[] = {3.0, -1.0};
    CHECK(mlp_forward(m, x) == 0.0);
}

TEST_CASE("single affine layer reduces to the linear model") {
    MlpModel m = mlp_init({2, 1}, Seed{0, 0});
    m.weights[0] = {0.5, -1.0 / 3.0};
    m.biases[0] = {0.0};
    const double x[] = {3.0, -1.0};
    CHECK_THAT(mlp_forward(m, x), Catch::Matchers::WithinAbs(1.5 + 1.0 / 3.0, 1e-12));
}

TEST_CASE("negative preactivations are clipped to zero") {
    MlpModel m = mlp_init({1, 1, 1}, Seed{0, 0});
    m.weights = {{1.0}, {1.0}};
    m.biases = {{-5.0}, {0.25}};
    const double x[] = {2.0};  // hidden preactivation 2 - 5 < 0 -> relu 0
    CHECK_THAT(mlp_forward(m, x), Catch::Matchers::WithinAbs(0.25, 1e-12));
    const double y[] = {8.0};  // 8 - 5 = 3 passes
    CHECK_THAT(mlp_forward(m, y), Catch::Matchers::WithinAbs(3.25, 1e-12));
}

TEST_CASE("forward checks arity") {
    const MlpModel m = mlp_init({2, 4, 1}, Seed{3, 3});
    const double x[] = {1.0, 2.0, 3.0};
    CHECK_THROWS_MATCHES(mlp_forward(m, x), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::arity_mismatch;
                         }));
}

TEST_CASE("zero-residual batches give zero gradient") {
    MlpModel m = mlp_init({2, 4, 1}, Seed{7, 7});
    SampleSet batch;
    for (double x = 0; x < 3; ++x) {
        Sample s;
        s.inputs = {x, -x};
        s.target = mlp_forward(m, s.inputs);
        batch.push_back(s);
    }
    const MlpGradient g = mlp_grad(m, batch);
    for (const auto& layer : g.weights)
        for (double v : layer) CHECK(v == 0.0);
    for (const auto& layer : g.biases)
        for (double v : layer) CHECK(v == 0.0);
}

TEST_CASE("affine layer gradient matches the hand derivative") {
    MlpModel m = mlp_init({2, 1}, Seed{0, 1});
    m.weights[0] = {0.3, -0.2};
    m.biases[0] = {0.1};
    SampleSet batch(1);
    batch[0].inputs = {2.0, 5.0};
    batch[0].target = 1.0;
    const double outv = mlp_forward(m, batch[0].inputs);
    const MlpGradient g = mlp_grad(m, batch);
    CHECK_THAT(g.weights[0][0], Catch::Matchers::WithinAbs(2 * (outv - 1.0) * 2.0, 1e-12));
    CHECK_THAT(g.weights[0][1], Catch::Matchers::WithinAbs(2 * (outv - 1.0) * 5.0, 1e-12));
    CHECK_THAT(g.biases[0][0], Catch::Matchers::WithinAbs(2 * (outv - 1.0), 1e-12));
}

TEST_CASE("backprop agrees with central finite differences") {
    Rng rng(Seed{2024, 1});
    for (int trial = 0; trial < 10; ++trial) {
        MlpModel m = mlp_init({2, 6, 5, 1}, Seed{100 + std::uint64_t(trial), 0});
        // Freshly initialized biases are all zero, which parks dead units
        // exactly on the relu kink where no two-sided derivative exists;
        // nudge them so the check runs at a generic point.
        for (auto& layer : m.biases)
            for (double& b : layer) b = rng.symmetric(0.05);
        SampleSet batch;
        for (int i = 0; i < 4; ++i) {
            Sample s;
            s.inputs = {6 * rng.unit() - 3, 6 * rng.unit() - 3};
            s.target = 2 * rng.unit() + 0.5;
            batch.push_back(s);
        }
        const MlpGradient g = mlp_grad(m, batch);
        for (std::size_t layer = 0; layer < m.weights.size(); ++layer) {
            for (std::size_t at = 0; at < m.weights[layer].size(); at += 3) {
                const double fd = testoracle::fd_weight_grad(m, batch, layer, at);
                const double bp = g.weights[layer][at];
                const double denom = std::max({std::abs(fd), std::abs(bp), 1e-6});
                CAPTURE(trial, layer, at, fd, bp);
                CHECK(std::abs(fd - bp) / denom < 1e-4);
            }
            for (std::size_t at = 0; at < m.biases[layer].size(); at += 2) {
                const double fd = testoracle::fd_bias_grad(m, batch, layer, at);
                const double bp = g.biases[layer][at];
                const double denom = std::max({std::abs(fd), std::abs(bp), 1e-6});
                CHECK(std::abs(fd - bp) / denom < 1e-4);
            }
        }
    }
}

TEST_CASE("mlp model round-trips through its file form") {
    MlpModel m = mlp_init({2, 5, 1}, Seed{11, 4});
    m.input_mean = {4.5, 2.1};
    m.input_scale = {1.5, 0.8};
    const MlpModel back = parse_mlp(serialize_mlp(m));
    CHECK(back.dims == m.dims);
    CHECK(back.weights == m.weights);
    CHECK(back.biases == m.biases);
    CHECK(back.input_mean == m.input_mean);
    CHECK(back.input_scale == m.input_scale);
    const double x[] = {3.0, 1.0};
    CHECK(mlp_forward(back, x) == mlp_forward(m, x));
    CHECK_THROWS_AS(parse_mlp("format mlp-model/1\ndims 2 1\n"), error);
}
