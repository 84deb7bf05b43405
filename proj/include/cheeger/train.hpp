#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cheeger/bounds.hpp"
#include "cheeger/error.hpp"
#include "cheeger/mlp.hpp"
#include "cheeger/seed.hpp"

namespace cheeger {

// Two regimes from the experiment protocol: "full" runs up to 500 epochs and
// stops early on stalled validation loss (restoring the best parameters);
// "moderate" runs exactly 50 epochs with no early stop, which keeps the net
// general enough to predict other graph sizes.
struct TrainConfig {
    int epochs = 500;
    int batch_size = 128;
    double learning_rate = 1e-3;
    double split_fraction = 0.4;  // training share; the rest validates
    Seed seed;
    std::optional<int> early_stop_patience = 20;
    std::vector<int> hidden_dims = {64, 64, 32, 16};

    static TrainConfig full(Seed s) {
        TrainConfig c;
        c.seed = s;
        return c;
    }

    static TrainConfig moderate(Seed s) {
        TrainConfig c;
        c.epochs = 50;
        c.early_stop_patience.reset();
        c.seed = s;
        return c;
    }
};

struct TrainReport {
    double final_train_loss = 0;      // MSE on the training split, frozen model
    std::vector<double> train_losses; // per-epoch mean of minibatch MSEs
    std::vector<double> val_losses;   // per-epoch MSE on the validation split
    double mean_dev_train = 0;        // mean Δh on the training split
    double mean_dev_val = 0;          // mean Δh on the validation split
    double std_dev_val = 0;           // population stddev of Δh on validation
    int best_epoch = 0;               // 1-based; epoch of the restored parameters
    int epochs_run = 0;
};

// Order in which train() consumes the dataset: the first floor(fraction * N)
// entries train, the rest validate. Exposed so callers can reconstruct the
// exact split of a finished run.
inline std::vector<std::size_t> split_permutation(std::size_t count, Seed seed) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t(0));
    Rng rng(seed, 1);
    rng.shuffle(order);
    return order;
}

namespace detail {

struct DeviationStats {
    double mean = 0;
    double stddev = 0;
};

inline DeviationStats deviation_stats(const MlpModel& model, const SampleSet& data) {
    std::vector<std::vector<double>> scratch;
    double sum = 0, sum_sq = 0;
    for (const Sample& s : data) {
        const double d = deviation(forward_recording(model, s.inputs, scratch), s.target);
        sum += d;
        sum_sq += d * d;
    }
    const double n = double(data.size());
    DeviationStats out;
    out.mean = sum / n;
    out.stddev = std::sqrt(std::max(0.0, sum_sq / n - out.mean * out.mean));
    return out;
}

struct AdamState {
    MlpGradient m;
    MlpGradient v;
    std::int64_t step = 0;
};

inline void adam_update(MlpModel& model, const MlpGradient& grad, AdamState& state, double lr) {
    constexpr double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    ++state.step;
    const double c1 = 1.0 / (1.0 - std::pow(beta1, double(state.step)));
    const double c2 = 1.0 / (1.0 - std::pow(beta2, double(state.step)));
    auto update = [&](std::vector<double>& theta, const std::vector<double>& g,
                      std::vector<double>& m, std::vector<double>& v) {
        for (std::size_t i = 0; i < theta.size(); ++i) {
            m[i] = beta1 * m[i] + (1 - beta1) * g[i];
            v[i] = beta2 * v[i] + (1 - beta2) * g[i] * g[i];
            theta[i] -= lr * (m[i] * c1) / (std::sqrt(v[i] * c2) + eps);
        }
    };
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        update(model.weights[l], grad.weights[l], state.m.weights[l], state.v.weights[l]);
        update(model.biases[l], grad.biases[l], state.m.biases[l], state.v.biases[l]);
    }
}

}  // namespace detail

// Splits the dataset by seeded shuffle (training share = split_fraction, the
// remainder validates), standardizes inputs from the training split, then
// runs ADAM (beta1 0.9, beta2 0.999, eps 1e-8) on minibatch MSE. The report
// is recomputed from the frozen final model. Deterministic in (dataset,
// config), single-threaded by contract.
inline std::pair<MlpModel, TrainReport> train(const SampleSet& dataset, const TrainConfig& cfg) {
    if (dataset.size() < 50)
        fail(errc::invalid_parameters,
             "need at least 50 records, got " + std::to_string(dataset.size()));
    const std::size_t arity = dataset.front().inputs.size();
    for (const Sample& s : dataset)
        if (s.inputs.size() != arity)
            fail(errc::arity_mismatch, "dataset mixes input arities");
    if (cfg.epochs < 1 || cfg.batch_size < 1 || !(cfg.learning_rate > 0))
        fail(errc::invalid_parameters, "bad epochs, batch size, or learning rate");

    const std::size_t n_train = std::size_t(cfg.split_fraction * double(dataset.size()));
    if (n_train == 0 || n_train == dataset.size())
        fail(errc::empty_split, "split fraction " + std::to_string(cfg.split_fraction) +
                                    " leaves an empty training or validation set");

    const std::vector<std::size_t> order = split_permutation(dataset.size(), cfg.seed);

    SampleSet train_set, val_set;
    train_set.reserve(n_train);
    val_set.reserve(dataset.size() - n_train);
    for (std::size_t i = 0; i < order.size(); ++i)
        (i < n_train ? train_set : val_set).push_back(dataset[order[i]]);

    std::vector<int> dims;
    dims.push_back(int(arity));
    dims.insert(dims.end(), cfg.hidden_dims.begin(), cfg.hidden_dims.end());
    dims.push_back(1);
    MlpModel model = mlp_init(dims, substream(cfg.seed, 2));

    // Standardize per feature from the training split; constant features keep
    // scale 1 so the transform stays invertible.
    for (std::size_t f = 0; f < arity; ++f) {
        double mean = 0;
        for (const Sample& s : train_set) mean += s.inputs[f];
        mean /= double(train_set.size());
        double var = 0;
        for (const Sample& s : train_set) {
            const double d = s.inputs[f] - mean;
            var += d * d;
        }
        const double sd = std::sqrt(var / double(train_set.size()));
        model.input_mean[f] = mean;
        model.input_scale[f] = sd < 1e-12 ? 1.0 : sd;
    }

    detail::AdamState adam{zero_gradient(model), zero_gradient(model), 0};
    Rng batch_rng(cfg.seed, 3);
    std::vector<std::size_t> batch_order(train_set.size());
    std::iota(batch_order.begin(), batch_order.end(), std::size_t(0));

    TrainReport report;
    MlpModel best_model = model;
    double best_val = std::numeric_limits<double>::infinity();
    int stall = 0;
    SampleSet batch;
    MlpGradient grad = zero_gradient(model);
    std::vector<std::vector<double>> activations;
    std::vector<double> delta, delta_prev;
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        batch_rng.shuffle(batch_order);
        double epoch_loss = 0;
        std::size_t seen = 0;
        for (std::size_t start = 0; start < batch_order.size(); start += std::size_t(cfg.batch_size)) {
            const std::size_t stop = std::min(batch_order.size(), start + std::size_t(cfg.batch_size));
            batch.clear();
            for (std::size_t i = start; i < stop; ++i) batch.push_back(train_set[batch_order[i]]);
            for (auto& w : grad.weights) std::fill(w.begin(), w.end(), 0.0);
            for (auto& b : grad.biases) std::fill(b.begin(), b.end(), 0.0);
            const double loss =
                detail::batch_grad_and_loss(model, batch, grad, activations, delta, delta_prev);
            if (!std::isfinite(loss)) fail(errc::divergence, "training loss became non-finite");
            epoch_loss += loss * double(batch.size());
            seen += batch.size();
            detail::adam_update(model, grad, adam, cfg.learning_rate);
        }
        report.train_losses.push_back(epoch_loss / double(seen));
        const double val_loss = mlp_mse(model, val_set);
        if (!std::isfinite(val_loss)) fail(errc::divergence, "validation loss became non-finite");
        report.val_losses.push_back(val_loss);
        report.epochs_run = epoch;
        if (val_loss < best_val) {
            best_val = val_loss;
            best_model = model;
            report.best_epoch = epoch;
            stall = 0;
        } else if (cfg.early_stop_patience && ++stall >= *cfg.early_stop_patience) {
            break;
        }
    }
    if (cfg.early_stop_patience) {
        model = best_model;
    } else {
        report.best_epoch = report.epochs_run;
    }

    report.final_train_loss = mlp_mse(model, train_set);
    const auto train_stats = detail::deviation_stats(model, train_set);
    const auto val_stats = detail::deviation_stats(model, val_set);
    report.mean_dev_train = train_stats.mean;
    report.mean_dev_val = val_stats.mean;
    report.std_dev_val = val_stats.stddev;
    return {std::move(model), report};
}

// Index of the candidate with the least validation deviation; ties keep the
// earliest. Candidates with non-finite reports are ignored.
inline std::size_t model_select_index(const std::vector<std::pair<MlpModel, TrainReport>>& candidates) {
    if (candidates.empty()) fail(errc::empty_list, "no candidates");
    std::size_t best = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double dev = candidates[i].second.mean_dev_val;
        if (!std::isfinite(dev)) continue;
        if (best == candidates.size() || dev < candidates[best].second.mean_dev_val) best = i;
    }
    if (best == candidates.size()) fail(errc::empty_list, "all candidates had non-finite reports");
    return best;
}

inline const MlpModel& model_select(const std::vector<std::pair<MlpModel, TrainReport>>& candidates) {
    return candidates[model_select_index(candidates)].first;
}

}  // namespace cheeger
