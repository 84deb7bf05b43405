#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "cheeger/error.hpp"

namespace cheeger {

// One supervised example: top eigenvalues (or a full spectrum prefix) paired
// with the true Cheeger constant.
struct Sample {
    std::vector<double> inputs;
    double target = 0;
};

using SampleSet = std::vector<Sample>;

// Affine model over the top-m eigenvalues: h ≈ coeffs·(λ0..λ(m-1)) + intercept.
struct LinearModel {
    std::vector<double> coeffs;
    double intercept = 0;

    int arity() const { return int(coeffs.size()); }
};

namespace detail {

// Gaussian elimination with partial pivoting on the (m+1)x(m+1) normal
// equations. Pivot threshold is relative to the Gram matrix scale.
inline std::vector<double> solve_normal_equations(std::vector<double> a, std::vector<double> rhs,
                                                  int dim) {
    double scale = 0;
    for (int i = 0; i < dim; ++i) scale = std::max(scale, std::abs(a[std::size_t(i) * dim + i]));
    const double tiny = 1e-12 * std::max(scale, 1.0);

    for (int col = 0; col < dim; ++col) {
        int pivot = col;
        for (int r = col + 1; r < dim; ++r)
            if (std::abs(a[std::size_t(r) * dim + col]) >
                std::abs(a[std::size_t(pivot) * dim + col]))
                pivot = r;
        if (std::abs(a[std::size_t(pivot) * dim + col]) <= tiny)
            fail(errc::rank_deficient, "Gram matrix is singular (no variation in column " +
                                           std::to_string(col) + ")");
        if (pivot != col) {
            for (int c = 0; c < dim; ++c)
                std::swap(a[std::size_t(pivot) * dim + c], a[std::size_t(col) * dim + c]);
            std::swap(rhs[std::size_t(pivot)], rhs[std::size_t(col)]);
        }
        for (int r = col + 1; r < dim; ++r) {
            const double f = a[std::size_t(r) * dim + col] / a[std::size_t(col) * dim + col];
            if (f == 0) continue;
            for (int c = col; c < dim; ++c)
                a[std::size_t(r) * dim + c] -= f * a[std::size_t(col) * dim + c];
            rhs[std::size_t(r)] -= f * rhs[std::size_t(col)];
        }
    }
    std::vector<double> x(std::size_t(dim), 0.0);
    for (int r = dim - 1; r >= 0; --r) {
        double s = rhs[std::size_t(r)];
        for (int c = r + 1; c < dim; ++c) s -= a[std::size_t(r) * dim + c] * x[std::size_t(c)];
        x[std::size_t(r)] = s / a[std::size_t(r) * dim + r];
    }
    return x;
}

}  // namespace detail

// Ordinary least squares via the normal equations. The intercept rides as an
// extra all-ones column.
inline LinearModel fit_linear(const SampleSet& records) {
    if (records.empty()) fail(errc::invalid_parameters, "no records to fit");
    const int m = int(records.front().inputs.size());
    if (m < 1 || m > 4)
        fail(errc::invalid_parameters, "regression arity " + std::to_string(m) + " outside [1, 4]");
    if (int(records.size()) < m + 2)
        fail(errc::invalid_parameters, "need at least " + std::to_string(m + 2) + " records, got " +
                                           std::to_string(records.size()));
    const int dim = m + 1;
    std::vector<double> gram(std::size_t(dim) * dim, 0.0);
    std::vector<double> rhs(std::size_t(dim), 0.0);
    for (const Sample& rec : records) {
        if (int(rec.inputs.size()) != m)
            fail(errc::arity_mismatch, "record arity " + std::to_string(rec.inputs.size()) +
                                           " != " + std::to_string(m));
        double row[5];
        for (int i = 0; i < m; ++i) row[i] = rec.inputs[std::size_t(i)];
        row[m] = 1.0;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) gram[std::size_t(i) * dim + j] += row[i] * row[j];
            rhs[std::size_t(i)] += row[i] * rec.target;
        }
    }
    const std::vector<double> x = detail::solve_normal_equations(gram, rhs, dim);
    LinearModel model;
    model.coeffs.assign(x.begin(), x.begin() + m);
    model.intercept = x[std::size_t(m)];
    return model;
}

inline double predict_linear(const LinearModel& model, std::span<const double> prefix) {
    if (int(prefix.size()) != model.arity())
        fail(errc::arity_mismatch, "model wants " + std::to_string(model.arity()) +
                                       " eigenvalues, got " + std::to_string(prefix.size()));
    double y = model.intercept;
    for (int i = 0; i < model.arity(); ++i) y += model.coeffs[std::size_t(i)] * prefix[std::size_t(i)];
    return y;
}

namespace detail {

inline std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline std::string serialize_linear(const LinearModel& model) {
    std::string out = "format linear-model/1\n";
    out += "m " + std::to_string(model.arity()) + "\n";
    out += "coeffs";
    for (double c : model.coeffs) out += " " + detail::format_full(c);
    out += "\nintercept " + detail::format_full(model.intercept) + "\n";
    return out;
}

inline LinearModel parse_linear(const std::string& text) {
    LinearModel model;
    int m = -1;
    std::size_t pos = 0;
    bool saw_header = false, saw_intercept = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        const std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (line == "format linear-model/1") {
            saw_header = true;
        } else if (line.rfind("m ", 0) == 0) {
            m = std::stoi(line.substr(2));
        } else if (line.rfind("coeffs", 0) == 0) {
            const char* p = line.c_str() + 6;
            char* end = nullptr;
            for (double v = std::strtod(p, &end); end != p; v = std::strtod(p, &end)) {
                model.coeffs.push_back(v);
                p = end;
            }
        } else if (line.rfind("intercept ", 0) == 0) {
            model.intercept = std::strtod(line.c_str() + 10, nullptr);
            saw_intercept = true;
        } else {
            fail(errc::io_failure, "unrecognized linear model line: " + line);
        }
    }
    if (!saw_header || !saw_intercept || m != int(model.coeffs.size()))
        fail(errc::io_failure, "malformed linear model file");
    return model;
}

}  // namespace cheeger
