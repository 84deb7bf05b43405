#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "cheeger/error.hpp"
#include "cheeger/reports.hpp"
#include "cheeger/svg.hpp"

namespace cheeger {

struct ChartBundle {
    std::optional<ReportTable> bound_deviations;
    std::optional<RegressionReport> regression;
    std::optional<DnnReport> dnn;
};

struct Manifest {
    std::vector<std::string> files;
    std::vector<std::string> warnings;
};

namespace detail {

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    out << content;
    if (!out) fail(errc::io_failure, "short write to " + path.string());
}

inline void emit_table(Manifest& manifest, const std::filesystem::path& dir,
                       const ReportTable& table) {
    const auto path = dir / (table.name + ".csv");
    write_text_file(path, table_to_csv(table));
    manifest.files.push_back(path.filename().string());
}

inline void emit_svg(Manifest& manifest, const std::filesystem::path& dir, const std::string& name,
                     const std::vector<svg::Series>& series, const svg::ChartOptions& options) {
    std::size_t points = 0;
    for (const auto& s : series) points += s.points.size();
    if (series.empty() || points == 0) {
        manifest.warnings.push_back("skipped " + name + ".svg: empty series");
        return;
    }
    const auto path = dir / (name + ".svg");
    write_text_file(path, svg::line_chart(series, options));
    manifest.files.push_back(path.filename().string());
}

// One series per value column, x from the named key column.
inline std::vector<svg::Series> series_by_column(const ReportTable& table, std::size_t x_col,
                                                 std::vector<std::size_t> y_cols) {
    std::vector<svg::Series> out;
    for (std::size_t c : y_cols) {
        svg::Series s;
        s.label = table.columns[c];
        for (const auto& row : table.rows) s.points.push_back({row[x_col], row[c]});
        out.push_back(std::move(s));
    }
    return out;
}

// Splits prediction-style rows (train_n, predict_n, value...) into one series
// per train size, keeping only rows whose predict_n parity matches.
inline std::vector<svg::Series> prediction_series(const ReportTable& table, int parity,
                                                  std::size_t value_col,
                                                  const std::string& label_prefix) {
    std::vector<svg::Series> out;
    for (const auto& row : table.rows) {
        if (int(row[1]) % 2 != parity) continue;
        const std::string label = label_prefix + " n=" + std::to_string(int(row[0]));
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const svg::Series& s) { return s.label == label; });
        if (it == out.end()) {
            out.push_back({label, {}});
            it = out.end() - 1;
        }
        it->points.push_back({row[1], row[value_col]});
    }
    return out;
}

inline ReportTable histogram_table(const DnnReport& dnn, double bin = 0.005) {
    ReportTable table{"dnn_hist", {"dh_bin_low_percent", "train_count", "val_count"}, {}};
    double max_dev = 0;
    for (double d : dnn.hist_train) max_dev = std::max(max_dev, d);
    for (double d : dnn.hist_val) max_dev = std::max(max_dev, d);
    const int bins = int(max_dev / bin) + 1;
    std::vector<double> train_counts(std::size_t(bins), 0), val_counts(std::size_t(bins), 0);
    for (double d : dnn.hist_train) ++train_counts[std::size_t(d / bin)];
    for (double d : dnn.hist_val) ++val_counts[std::size_t(d / bin)];
    for (int b = 0; b < bins; ++b)
        table.rows.push_back({100.0 * b * bin, train_counts[std::size_t(b)], val_counts[std::size_t(b)]});
    return table;
}

}  // namespace detail

// Writes one SVG per figure plus the matching CSV, and a manifest listing
// everything written (and every empty series skipped). Deterministic output.
inline Manifest emit_charts(const ChartBundle& bundle, const std::filesystem::path& dir) {
    if (!bundle.bound_deviations && !bundle.regression && !bundle.dnn)
        fail(errc::invalid_parameters, "nothing to chart");
    std::filesystem::create_directories(dir);
    Manifest manifest;

    if (bundle.bound_deviations) {
        detail::emit_table(manifest, dir, *bundle.bound_deviations);
        detail::emit_svg(manifest, dir, bundle.bound_deviations->name,
                         detail::series_by_column(*bundle.bound_deviations, 0, {2, 3}),
                         {"Bound deviation from h(G)", "n", "mean relative deviation"});
    }

    if (bundle.regression) {
        const RegressionReport& reg = *bundle.regression;
        detail::emit_table(manifest, dir, reg.insample);
        {
            std::vector<std::size_t> cols;
            for (std::size_t c = 1; c < reg.insample.columns.size(); ++c) cols.push_back(c);
            svg::ChartOptions opt{"Linear fit on top eigenvalues", "n", "mean relative deviation"};
            opt.log_y = true;
            detail::emit_svg(manifest, dir, reg.insample.name,
                             detail::series_by_column(reg.insample, 0, cols), opt);
        }
        detail::emit_table(manifest, dir, reg.coefficients);
        {
            svg::ChartOptions opt{"Regression coefficients", "n", "coefficient"};
            opt.ref_lines = {{0.5, "1/2"}, {-1.0 / 3.0, "-1/3"}};
            detail::emit_svg(manifest, dir, reg.coefficients.name,
                             detail::series_by_column(reg.coefficients, 0, {1, 2}), opt);
        }
        detail::emit_table(manifest, dir, reg.prediction);
        detail::emit_svg(manifest, dir, "regression_prediction_even",
                         detail::prediction_series(reg.prediction, 0, 2, "LR"),
                         {"Linear prediction, even n", "predicted n", "mean relative deviation"});
        detail::emit_svg(manifest, dir, "regression_prediction_odd",
                         detail::prediction_series(reg.prediction, 1, 2, "LR"),
                         {"Linear prediction, odd n", "predicted n", "mean relative deviation"});
    }

    if (bundle.dnn) {
        const DnnReport& dnn = *bundle.dnn;
        detail::emit_table(manifest, dir, dnn.insample);
        detail::emit_svg(manifest, dir, dnn.insample.name,
                         detail::series_by_column(dnn.insample, 0, {1, 2, 3}),
                         {"Network deviation by training size", "n", "relative deviation"});
        if (!dnn.hist_train.empty() || !dnn.hist_val.empty()) {
            const ReportTable hist = detail::histogram_table(dnn);
            detail::emit_table(manifest, dir, hist);
            svg::ChartOptions opt{"Deviation histogram, n=" + std::to_string(dnn.hist_n),
                                  "relative deviation (%)", "graphs"};
            opt.steps = true;
            detail::emit_svg(manifest, dir, hist.name, detail::series_by_column(hist, 0, {1, 2}),
                             opt);
        } else {
            manifest.warnings.push_back("skipped dnn_hist.svg: empty series");
        }
        detail::emit_table(manifest, dir, dnn.prediction);
        for (int parity = 0; parity < 2; ++parity) {
            const std::string suffix = parity == 0 ? "even" : "odd";
            auto series = detail::prediction_series(dnn.prediction, parity, 2, "DNN");
            auto lr = detail::prediction_series(dnn.prediction, parity, 4, "LR");
            series.insert(series.end(), lr.begin(), lr.end());
            detail::emit_svg(manifest, dir, "dnn_vs_lr_" + suffix, series,
                             {"DNN vs linear prediction, " + suffix + " n", "predicted n",
                              "mean relative deviation"});
            auto stats = detail::prediction_series(dnn.prediction, parity, 2, "mean");
            auto stds = detail::prediction_series(dnn.prediction, parity, 3, "stddev");
            stats.insert(stats.end(), stds.begin(), stds.end());
            detail::emit_svg(manifest, dir, "dnn_prediction_stats_" + suffix, stats,
                             {"Prediction statistics, " + suffix + " n", "predicted n",
                              "relative deviation"});
        }
    }

    std::string listing;
    for (const auto& f : manifest.files) listing += f + "\n";
    for (const auto& w : manifest.warnings) listing += "# " + w + "\n";
    detail::write_text_file(dir / "manifest.txt", listing);
    manifest.files.push_back("manifest.txt");
    return manifest;
}

}  // namespace cheeger
