#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cheeger/bounds.hpp"
#include "cheeger/dataset.hpp"
#include "cheeger/error.hpp"
#include "cheeger/linear.hpp"
#include "cheeger/record.hpp"
#include "cheeger/train.hpp"

namespace cheeger {

// Numeric table with named columns; CSV export keeps full precision so every
// reported figure can be recomputed from the records.
struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    bool empty() const { return rows.empty(); }
};

inline std::string table_to_csv(const ReportTable& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ",";
        out += table.columns[c];
    }
    out += "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ",";
            out += detail::json_number(row[c]);
        }
        out += "\n";
    }
    return out;
}

// Fixed-decimal text rendering for terminal output; integral values print
// without a fraction.
inline std::string format_table(const ReportTable& table, int precision = 2) {
    auto cell = [&](double v) -> std::string {
        char buf[64];
        if (v == std::floor(v) && std::abs(v) < 1e15)
            std::snprintf(buf, sizeof buf, "%.0f", v);
        else
            std::snprintf(buf, sizeof buf, "%.*f", precision, v);
        return buf;
    };
    std::vector<std::size_t> widths(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c) widths[c] = table.columns[c].size();
    for (const auto& row : table.rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], cell(row[c]).size());
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += std::string(widths[c] - table.columns[c].size(), ' ') + table.columns[c];
        out += c + 1 < table.columns.size() ? "  " : "\n";
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string s = cell(row[c]);
            out += std::string(widths[c] - s.size(), ' ') + s;
            out += c + 1 < row.size() ? "  " : "\n";
        }
    }
    return out;
}

using RecordsBySize = std::map<int, std::vector<GraphRecord>>;

inline RecordsBySize load_sizes(const std::filesystem::path& dir, const std::vector<int>& sizes) {
    RecordsBySize by_size;
    for (int n : sizes) by_size[n] = load_records(dir, n);
    return by_size;
}

namespace detail {

inline const std::vector<GraphRecord>& records_for(const RecordsBySize& by_size, int n) {
    auto it = by_size.find(n);
    if (it == by_size.end() || it->second.empty())
        fail(errc::missing_size, "no records for n = " + std::to_string(n));
    return it->second;
}

}  // namespace detail

// Per-size mean relative deviation of the spectral lower bound and of the
// combined upper bound from the true Cheeger constant.
inline ReportTable bound_deviation_report(const RecordsBySize& by_size, const std::vector<int>& sizes) {
    ReportTable table{"bound_deviations", {"n", "records", "mean_dh_lower", "mean_dh_upper"}, {}};
    for (int n : sizes) {
        const auto& records = detail::records_for(by_size, n);
        double lower_sum = 0, upper_sum = 0;
        for (const GraphRecord& r : records) {
            const BoundSet b = bounds(r.k, r.n, r.spectrum[1]);
            lower_sum += deviation(b.lower, r.h);
            upper_sum += deviation(b.upper, r.h);
        }
        const double count = double(records.size());
        table.rows.push_back({double(n), count, lower_sum / count, upper_sum / count});
    }
    return table;
}

struct RegressionReport {
    ReportTable insample;      // per n: mean Δh of the fit for each m
    ReportTable coefficients;  // per n: a, b, c of the two-eigenvalue model
    ReportTable prediction;    // per (train_n, predict_n): mean Δh
};

inline double mean_model_deviation(const LinearModel& model, const SampleSet& samples) {
    double sum = 0;
    for (const Sample& s : samples)
        sum += deviation(predict_linear(model, s.inputs), s.target);
    return sum / double(samples.size());
}

// In-sample regression quality per m, fitted coefficients, and cross-size
// prediction of the trained two-eigenvalue models.
inline RegressionReport regression_experiment(const RecordsBySize& by_size,
                                              const std::vector<int>& m_values,
                                              const std::vector<int>& train_sizes,
                                              const std::vector<int>& predict_sizes) {
    RegressionReport report;
    report.insample.name = "regression_insample";
    report.insample.columns = {"n"};
    for (int m : m_values) report.insample.columns.push_back("mean_dh_m" + std::to_string(m));
    for (const auto& [n, records] : by_size) {
        std::vector<double> row{double(n)};
        for (int m : m_values) {
            const SampleSet samples = to_samples(records, m);
            row.push_back(mean_model_deviation(fit_linear(samples), samples));
        }
        report.insample.rows.push_back(std::move(row));
    }

    report.coefficients.name = "regression_coefficients";
    report.coefficients.columns = {"n", "a", "b", "c"};
    std::map<int, LinearModel> trained;
    for (const auto& [n, records] : by_size) {
        const LinearModel model = fit_linear(to_samples(records, 2));
        trained.emplace(n, model);
        report.coefficients.rows.push_back(
            {double(n), model.coeffs[0], model.coeffs[1], model.intercept});
    }

    report.prediction.name = "regression_prediction";
    report.prediction.columns = {"train_n", "predict_n", "mean_dh"};
    for (int t : train_sizes) {
        if (!trained.count(t)) fail(errc::missing_size, "no records for n = " + std::to_string(t));
        for (int p : predict_sizes) {
            const SampleSet samples = to_samples(detail::records_for(by_size, p), 2);
            report.prediction.rows.push_back(
                {double(t), double(p), mean_model_deviation(trained.at(t), samples)});
        }
    }
    return report;
}

enum class TrainingRegime { moderate, full };

struct DnnReport {
    ReportTable insample;    // per train_n: deviations of the selected model
    ReportTable prediction;  // per (train_n, predict_n): DNN vs LR deviations
    // Raw per-record deviations of the first trained size, for the histogram.
    std::vector<double> hist_train;
    std::vector<double> hist_val;
    int hist_n = 0;
};

// Full protocol: for each training size run `trainings` seeded trainings on a
// 40% split, keep the least-validation-deviation model, evaluate it in-sample
// and on every prediction size, and put the two-eigenvalue linear model next
// to it for contrast.
inline DnnReport dnn_experiment(const RecordsBySize& by_size, const std::vector<int>& train_sizes,
                                const std::vector<int>& predict_sizes, TrainingRegime regime,
                                Seed seed, int trainings = 3, int eigs = 2) {
    if (trainings < 1) fail(errc::invalid_parameters, "need at least one training");
    DnnReport report;
    report.insample.name = "dnn_insample";
    report.insample.columns = {"train_n",      "mean_dev_train", "mean_dev_val",
                               "std_dev_val",  "epochs_run",     "selected_run"};
    report.prediction.name = "dnn_prediction";
    report.prediction.columns = {"train_n", "predict_n", "dnn_mean_dh", "dnn_std_dh", "lr_mean_dh"};

    for (int t : train_sizes) {
        const auto& records = detail::records_for(by_size, t);
        const SampleSet samples = to_samples(records, eigs);
        std::vector<std::pair<MlpModel, TrainReport>> candidates;
        for (int run = 0; run < trainings; ++run) {
            const Seed run_seed = substream(substream(seed, std::uint64_t(t)), std::uint64_t(run));
            TrainConfig cfg = regime == TrainingRegime::full ? TrainConfig::full(run_seed)
                                                             : TrainConfig::moderate(run_seed);
            candidates.push_back(train(samples, cfg));
        }
        const std::size_t pick = model_select_index(candidates);
        const MlpModel& model = candidates[pick].first;
        const TrainReport& tr = candidates[pick].second;
        report.insample.rows.push_back({double(t), tr.mean_dev_train, tr.mean_dev_val,
                                        tr.std_dev_val, double(tr.epochs_run), double(pick)});

        if (t == train_sizes.front()) {
            // Reconstruct the winner's split for the per-record histogram.
            const Seed run_seed = substream(substream(seed, std::uint64_t(t)), std::uint64_t(pick));
            const auto order = split_permutation(samples.size(), run_seed);
            const std::size_t n_train = std::size_t(0.4 * double(samples.size()));
            for (std::size_t i = 0; i < order.size(); ++i) {
                const Sample& s = samples[order[i]];
                const double d = deviation(mlp_forward(model, s.inputs), s.target);
                (i < n_train ? report.hist_train : report.hist_val).push_back(d);
            }
            report.hist_n = t;
        }

        const LinearModel linear = fit_linear(to_samples(records, 2));
        for (int p : predict_sizes) {
            const auto& target_records = detail::records_for(by_size, p);
            const SampleSet dnn_samples = to_samples(target_records, eigs);
            double sum = 0, sum_sq = 0;
            for (const Sample& s : dnn_samples) {
                const double d = deviation(mlp_forward(model, s.inputs), s.target);
                sum += d;
                sum_sq += d * d;
            }
            const double count = double(dnn_samples.size());
            const double mean = sum / count;
            const double stddev = std::sqrt(std::max(0.0, sum_sq / count - mean * mean));
            const double lr_mean =
                mean_model_deviation(linear, to_samples(target_records, 2));
            report.prediction.rows.push_back({double(t), double(p), mean, stddev, lr_mean});
        }
    }
    return report;
}

}  // namespace cheeger
