#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cheeger/error.hpp"
#include "cheeger/linear.hpp"
#include "cheeger/seed.hpp"

namespace cheeger {

enum class Activation { relu, identity };

inline const char* to_string(Activation a) {
    return a == Activation::relu ? "relu" : "identity";
}

// Feed-forward network mapping top eigenvalues to an h(G) estimate. Inputs
// are standardized per feature with a transform learned from the training
// split and stored with the parameters, so a serialized model is
// self-contained.
struct MlpModel {
    std::vector<int> dims;                     // e.g. {2, 64, 64, 32, 16, 1}
    std::vector<std::vector<double>> weights;  // [layer], row-major (out x in)
    std::vector<std::vector<double>> biases;   // [layer]
    std::vector<double> input_mean;            // per-feature shift
    std::vector<double> input_scale;           // per-feature divisor
    Activation hidden = Activation::relu;
    Activation output = Activation::identity;

    int arity() const { return dims.empty() ? 0 : dims.front(); }
    int layer_count() const { return int(dims.size()) - 1; }

    std::size_t parameter_count() const {
        std::size_t total = 0;
        for (int l = 0; l + 1 < int(dims.size()); ++l)
            total += std::size_t(dims[std::size_t(l)]) * dims[std::size_t(l) + 1] +
                     std::size_t(dims[std::size_t(l) + 1]);
        return total;
    }
};

// Gradient (or any parameter-shaped accumulator) congruent to a model.
struct MlpGradient {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;
};

inline MlpGradient zero_gradient(const MlpModel& model) {
    MlpGradient g;
    g.weights.reserve(model.weights.size());
    g.biases.reserve(model.biases.size());
    for (const auto& w : model.weights) g.weights.emplace_back(w.size(), 0.0);
    for (const auto& b : model.biases) g.biases.emplace_back(b.size(), 0.0);
    return g;
}

// Zero-mean uniform init with per-layer scale 1/sqrt(fan-in); biases zero.
inline MlpModel mlp_init(const std::vector<int>& dims, Seed seed) {
    if (dims.size() < 2) fail(errc::invalid_dims, "need at least input and output layers");
    for (int d : dims)
        if (d < 1) fail(errc::invalid_dims, "layer width " + std::to_string(d) + " < 1");
    if (dims.back() != 1) fail(errc::invalid_dims, "output layer must have width 1");

    MlpModel model;
    model.dims = dims;
    model.input_mean.assign(std::size_t(dims.front()), 0.0);
    model.input_scale.assign(std::size_t(dims.front()), 1.0);
    Rng rng(seed);
    for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
        const int fan_in = dims[l];
        const int fan_out = dims[l + 1];
        // Uniform on [-sqrt(3/fan_in), sqrt(3/fan_in)] has variance 1/fan_in.
        const double limit = std::sqrt(3.0 / fan_in);
        std::vector<double> w(std::size_t(fan_out) * fan_in);
        for (double& x : w) x = rng.symmetric(limit);
        model.weights.push_back(std::move(w));
        model.biases.emplace_back(std::size_t(fan_out), 0.0);
    }
    return model;
}

namespace detail {

inline void check_arity(const MlpModel& model, std::size_t got) {
    if (int(got) != model.arity())
        fail(errc::arity_mismatch, "model wants " + std::to_string(model.arity()) +
                                       " inputs, got " + std::to_string(got));
}

// Forward pass keeping post-activation values per layer for backprop.
// activations[0] is the standardized input.
inline double forward_recording(const MlpModel& model, std::span<const double> inputs,
                                std::vector<std::vector<double>>& activations) {
    const int layers = model.layer_count();
    activations.resize(std::size_t(layers) + 1);
    auto& in = activations[0];
    in.resize(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i)
        in[i] = (inputs[i] - model.input_mean[i]) / model.input_scale[i];
    for (int l = 0; l < layers; ++l) {
        const auto& prev = activations[std::size_t(l)];
        auto& cur = activations[std::size_t(l) + 1];
        const int rows = model.dims[std::size_t(l) + 1];
        const int cols = model.dims[std::size_t(l)];
        const auto& w = model.weights[std::size_t(l)];
        const auto& b = model.biases[std::size_t(l)];
        cur.resize(std::size_t(rows));
        const bool last = l == layers - 1;
        const Activation act = last ? model.output : model.hidden;
        for (int r = 0; r < rows; ++r) {
            double z = b[std::size_t(r)];
            const double* wr = w.data() + std::size_t(r) * cols;
            for (int c = 0; c < cols; ++c) z += wr[c] * prev[std::size_t(c)];
            cur[std::size_t(r)] = (act == Activation::relu && z < 0) ? 0.0 : z;
        }
    }
    return activations.back()[0];
}

inline bool all_finite(const MlpModel& model) {
    auto ok = [](const std::vector<double>& v) {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        return true;
    };
    for (const auto& w : model.weights)
        if (!ok(w)) return false;
    for (const auto& b : model.biases)
        if (!ok(b)) return false;
    return ok(model.input_mean) && ok(model.input_scale);
}

}  // namespace detail

inline double mlp_forward(const MlpModel& model, std::span<const double> inputs) {
    detail::check_arity(model, inputs.size());
    std::vector<std::vector<double>> scratch;
    const double out = detail::forward_recording(model, inputs, scratch);
    if (!std::isfinite(out) && !detail::all_finite(model))
        fail(errc::non_finite_parameter, "model parameters contain NaN or infinity");
    return out;
}

namespace detail {

// Accumulates the gradient of (out - target)^2 for one sample; caller scales
// by 1/batch afterwards. Workspaces are reused across calls.
inline double backprop_sample(const MlpModel& model, std::span<const double> inputs, double target,
                              MlpGradient& grad, std::vector<std::vector<double>>& activations,
                              std::vector<double>& delta, std::vector<double>& delta_prev) {
    const double out = forward_recording(model, inputs, activations);
    const double residual = out - target;
    const int layers = model.layer_count();
    delta.assign(1, 2.0 * residual);  // d(residual^2)/d(out), identity output
    for (int l = layers - 1; l >= 0; --l) {
        const int rows = model.dims[std::size_t(l) + 1];
        const int cols = model.dims[std::size_t(l)];
        const auto& prev = activations[std::size_t(l)];
        const auto& w = model.weights[std::size_t(l)];
        auto& gw = grad.weights[std::size_t(l)];
        auto& gb = grad.biases[std::size_t(l)];
        for (int r = 0; r < rows; ++r) {
            const double d = delta[std::size_t(r)];
            if (d == 0) continue;
            gb[std::size_t(r)] += d;
            double* gwr = gw.data() + std::size_t(r) * cols;
            for (int c = 0; c < cols; ++c) gwr[c] += d * prev[std::size_t(c)];
        }
        if (l == 0) break;
        delta_prev.assign(std::size_t(cols), 0.0);
        for (int r = 0; r < rows; ++r) {
            const double d = delta[std::size_t(r)];
            if (d == 0) continue;
            const double* wr = w.data() + std::size_t(r) * cols;
            for (int c = 0; c < cols; ++c) delta_prev[std::size_t(c)] += d * wr[c];
        }
        // ReLU gate: units that output 0 pass no gradient. Post-activation
        // value > 0 identifies the active units.
        const auto& acts = activations[std::size_t(l)];
        for (int c = 0; c < cols; ++c)
            if (!(acts[std::size_t(c)] > 0) && model.hidden == Activation::relu)
                delta_prev[std::size_t(c)] = 0;
        delta.swap(delta_prev);
    }
    return residual * residual;
}

// Fills `grad` with the gradient of the batch MSE and returns the MSE itself
// in the same pass. `grad` must be zeroed and congruent to the model.
inline double batch_grad_and_loss(const MlpModel& model, const SampleSet& batch,
                                  MlpGradient& grad, std::vector<std::vector<double>>& activations,
                                  std::vector<double>& delta, std::vector<double>& delta_prev) {
    double loss = 0;
    for (const Sample& s : batch) {
        check_arity(model, s.inputs.size());
        loss += backprop_sample(model, s.inputs, s.target, grad, activations, delta, delta_prev);
    }
    const double inv = 1.0 / double(batch.size());
    for (auto& w : grad.weights)
        for (double& x : w) x *= inv;
    for (auto& b : grad.biases)
        for (double& x : b) x *= inv;
    return loss * inv;
}

}  // namespace detail

// Exact gradient of the batch mean-squared error, by reverse accumulation.
inline MlpGradient mlp_grad(const MlpModel& model, const SampleSet& batch) {
    if (batch.empty()) fail(errc::invalid_parameters, "empty batch");
    MlpGradient grad = zero_gradient(model);
    std::vector<std::vector<double>> activations;
    std::vector<double> delta, delta_prev;
    detail::batch_grad_and_loss(model, batch, grad, activations, delta, delta_prev);
    return grad;
}

inline double mlp_mse(const MlpModel& model, const SampleSet& data) {
    if (data.empty()) fail(errc::invalid_parameters, "empty sample set");
    std::vector<std::vector<double>> scratch;
    double sum = 0;
    for (const Sample& s : data) {
        detail::check_arity(model, s.inputs.size());
        const double r = detail::forward_recording(model, s.inputs, scratch) - s.target;
        sum += r * r;
    }
    return sum / double(data.size());
}

inline std::string serialize_mlp(const MlpModel& model) {
    std::string out = "format mlp-model/1\n";
    out += "dims";
    for (int d : model.dims) out += " " + std::to_string(d);
    out += "\nhidden ";
    out += to_string(model.hidden);
    out += "\noutput ";
    out += to_string(model.output);
    auto vec_line = [&out](const char* key, const std::vector<double>& v) {
        out += "\n";
        out += key;
        for (double x : v) out += " " + detail::format_full(x);
    };
    vec_line("mean", model.input_mean);
    vec_line("scale", model.input_scale);
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        vec_line(("W" + std::to_string(l)).c_str(), model.weights[l]);
        vec_line(("b" + std::to_string(l)).c_str(), model.biases[l]);
    }
    out += "\n";
    return out;
}

inline MlpModel parse_mlp(const std::string& text) {
    MlpModel model;
    std::size_t pos = 0;
    bool saw_header = false;
    auto parse_doubles = [](const std::string& s, std::size_t from) {
        std::vector<double> v;
        const char* p = s.c_str() + from;
        char* end = nullptr;
        for (double x = std::strtod(p, &end); end != p; x = std::strtod(p, &end)) {
            v.push_back(x);
            p = end;
        }
        return v;
    };
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        const std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (line == "format mlp-model/1") {
            saw_header = true;
        } else if (line.rfind("dims", 0) == 0) {
            for (double d : parse_doubles(line, 4)) model.dims.push_back(int(d));
        } else if (line.rfind("hidden ", 0) == 0) {
            model.hidden = line.substr(7) == "relu" ? Activation::relu : Activation::identity;
        } else if (line.rfind("output ", 0) == 0) {
            model.output = line.substr(7) == "relu" ? Activation::relu : Activation::identity;
        } else if (line.rfind("mean", 0) == 0) {
            model.input_mean = parse_doubles(line, 4);
        } else if (line.rfind("scale", 0) == 0) {
            model.input_scale = parse_doubles(line, 5);
        } else if (line[0] == 'W') {
            model.weights.push_back(parse_doubles(line, line.find(' ')));
        } else if (line[0] == 'b') {
            model.biases.push_back(parse_doubles(line, line.find(' ')));
        } else {
            fail(errc::io_failure, "unrecognized model line: " + line.substr(0, 32));
        }
    }
    if (!saw_header || model.dims.size() < 2 ||
        model.weights.size() != model.dims.size() - 1 ||
        model.biases.size() != model.weights.size())
        fail(errc::io_failure, "malformed mlp model file");
    for (std::size_t l = 0; l + 1 < model.dims.size(); ++l) {
        const std::size_t want = std::size_t(model.dims[l]) * model.dims[l + 1];
        if (model.weights[l].size() != want || model.biases[l].size() != std::size_t(model.dims[l + 1]))
            fail(errc::io_failure, "layer " + std::to_string(l) + " has wrong parameter count");
    }
    if (!detail::all_finite(model))
        fail(errc::non_finite_parameter, "model file contains non-finite parameters");
    return model;
}

}  // namespace cheeger
