#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cheeger/cheeger_exact.hpp"
#include "cheeger/error.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/record.hpp"
#include "cheeger/spectral.hpp"

namespace cheeger {

// Degrees considered at a given size: 3..min(8, n-2), keeping n*k even.
inline std::vector<int> default_degrees(int n) {
    std::vector<int> ks;
    for (int k = 3; k <= std::min(8, n - 2); ++k)
        if ((std::int64_t(n) * k) % 2 == 0) ks.push_back(k);
    return ks;
}

// Per-degree sampling weights: a discretized Gaussian bump over the default
// degree range, centered at c(n) = 5.4 + 0.2*(n-12) with sigma 0.8. At n=12
// this tracks the census of connected regular graphs (middle degrees
// dominate), and the slow drift toward higher regularity keeps the bound
// statistics in line as n grows.
inline std::vector<double> default_degree_weights(int n, const std::vector<int>& degrees) {
    const double center = 5.4 + 0.2 * (n - 12);
    const double sigma = 0.8;
    std::vector<double> w;
    w.reserve(degrees.size());
    double total = 0;
    for (int k : degrees) {
        const double d = (k - center) / sigma;
        w.push_back(std::exp(-0.5 * d * d));
        total += w.back();
    }
    for (double& x : w) x /= total;
    return w;
}

struct DegreePlan {
    int k = 0;
    int count = 0;
};

struct SizePlan {
    int n = 0;
    std::vector<DegreePlan> degrees;

    int total() const {
        int t = 0;
        for (const DegreePlan& d : degrees) t += d.count;
        return t;
    }
};

inline void validate_degree(int n, int k) {
    if (k < 2 || k > n - 1 || (std::int64_t(n) * k) % 2 != 0)
        fail(errc::invalid_parameters, "invalid degree " + std::to_string(k) + " for n = " +
                                           std::to_string(n) + " (range or parity)");
}

// Splits `count` records across the weighted degrees by largest remainder,
// so totals are exact and the split is deterministic.
inline SizePlan make_size_plan(int n, int count, const std::vector<int>& degrees,
                               const std::vector<double>& weights) {
    if (count < 1) fail(errc::invalid_parameters, "record count must be >= 1");
    if (degrees.empty())
        fail(errc::invalid_parameters, "no parity-valid degrees for n = " + std::to_string(n));
    for (int k : degrees) validate_degree(n, k);
    SizePlan plan{n, {}};
    std::vector<double> remainders(degrees.size());
    int assigned = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const double exact = weights[i] * count;
        const int base = int(exact);
        plan.degrees.push_back({degrees[i], base});
        remainders[i] = exact - base;
        assigned += base;
    }
    std::vector<std::size_t> order(degrees.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainders[a] > remainders[b]; });
    for (int r = 0; r < count - assigned; ++r) ++plan.degrees[order[std::size_t(r)]].count;
    return plan;
}

inline SizePlan default_size_plan(int n, int count) {
    const std::vector<int> ks = default_degrees(n);
    return make_size_plan(n, count, ks, default_degree_weights(n, ks));
}

struct DatasetConfig {
    std::vector<SizePlan> plan;
    std::uint64_t master = 0;
    std::filesystem::path out_dir;
    int threads = 1;
    int max_restarts = 10000;
};

inline std::filesystem::path records_path(const std::filesystem::path& dir, int n) {
    return dir / ("records_n" + std::to_string(n) + ".jsonl");
}

// Stream index of record (n, k, index) under a master seed; pure function, so
// datasets are restartable and parallel generation stays deterministic.
inline Seed record_seed(std::uint64_t master, int n, int k, std::uint64_t index) {
    return Seed{master, derive(derive(std::uint64_t(n), std::uint64_t(k)), index)};
}

// Generates, solves and measures one record.
inline GraphRecord build_record(std::uint64_t master, int n, int k, std::uint64_t index,
                                int max_restarts = 10000) {
    const Seed seed = record_seed(master, n, k, index);
    const Graph g = generate_regular(n, k, seed, max_restarts);
    const CheegerResult exact = cheeger_exact(g);
    GraphRecord rec;
    rec.n = n;
    rec.k = k;
    rec.index = index;
    rec.seed = seed;
    rec.spectrum = spectrum(g).values;
    rec.h_num = exact.boundary;
    rec.h_den = exact.size;
    rec.h = exact.h;
    return rec;
}

struct DatasetSummary {
    struct PerSize {
        int n = 0;
        std::size_t records = 0;
        std::size_t generated = 0;  // newly built this run
        std::filesystem::path path;
    };
    std::vector<PerSize> sizes;
};

// Builds (or tops up) one JSON-lines file per size. Existing records are
// reused, missing (n, k, index) keys are generated — in parallel when asked —
// and the merged set is rewritten sorted by key, so re-runs are
// byte-identical regardless of thread count.
inline DatasetSummary build_dataset(const DatasetConfig& config) {
    if (config.plan.empty()) fail(errc::invalid_parameters, "empty dataset plan");
    if (config.threads < 1) fail(errc::invalid_parameters, "threads must be >= 1");
    for (const SizePlan& sp : config.plan)
        for (const DegreePlan& dp : sp.degrees) validate_degree(sp.n, dp.k);

    std::filesystem::create_directories(config.out_dir);

    struct Key {
        int n, k;
        std::uint64_t index;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, GraphRecord> records;
    std::vector<Key> missing;
    for (const SizePlan& sp : config.plan) {
        const auto path = records_path(config.out_dir, sp.n);
        if (std::filesystem::exists(path))
            for (GraphRecord& r : read_records_jsonl(path))
                records[{r.n, r.k, r.index}] = std::move(r);
        for (const DegreePlan& dp : sp.degrees)
            for (std::uint64_t i = 0; i < std::uint64_t(dp.count); ++i)
                if (!records.count({sp.n, dp.k, i})) missing.push_back({sp.n, dp.k, i});
    }

    std::vector<GraphRecord> fresh(missing.size());
    std::atomic<std::size_t> cursor{0};
    std::mutex error_mutex;
    std::string first_error;
    auto worker = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < missing.size(); i = cursor.fetch_add(1)) {
            const Key key = missing[i];
            try {
                fresh[i] = build_record(config.master, key.n, key.k, key.index, config.max_restarts);
            } catch (const std::exception& e) {
                std::lock_guard lock(error_mutex);
                if (first_error.empty())
                    first_error = "record (n=" + std::to_string(key.n) + ", k=" +
                                  std::to_string(key.k) + ", index=" + std::to_string(key.index) +
                                  "): " + e.what();
                return;
            }
        }
    };
    if (config.threads == 1 || missing.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const int n_threads = std::min<std::size_t>(config.threads, missing.size());
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (!first_error.empty()) fail(errc::invalid_parameters, first_error);
    for (GraphRecord& r : fresh) records[{r.n, r.k, r.index}] = std::move(r);

    DatasetSummary summary;
    for (const SizePlan& sp : config.plan) {
        std::vector<GraphRecord> rows;
        for (const auto& [key, rec] : records)
            if (key.n == sp.n) rows.push_back(rec);
        const auto path = records_path(config.out_dir, sp.n);
        write_records_jsonl(path, rows);
        write_records_csv(std::filesystem::path(path).replace_extension(".csv"), rows);
        std::size_t generated = 0;
        for (const Key& key : missing)
            if (key.n == sp.n) ++generated;
        summary.sizes.push_back({sp.n, rows.size(), generated, path});
    }
    return summary;
}

// Loads the records for one size from a dataset directory.
inline std::vector<GraphRecord> load_records(const std::filesystem::path& dir, int n) {
    const auto path = records_path(dir, n);
    if (!std::filesystem::exists(path))
        fail(errc::missing_size, "no records for n = " + std::to_string(n) + " under " +
                                     dir.string());
    return read_records_jsonl(path);
}

}  // namespace cheeger
