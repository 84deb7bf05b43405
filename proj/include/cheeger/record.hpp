#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cheeger/bounds.hpp"
#include "cheeger/error.hpp"
#include "cheeger/linear.hpp"
#include "cheeger/seed.hpp"

namespace cheeger {

// One dataset row: everything needed to reuse or regenerate a solved graph.
// (n, k, index) keys the record inside a dataset; the seed regenerates the
// exact adjacency.
struct GraphRecord {
    int n = 0;
    int k = 0;
    std::uint64_t index = 0;
    Seed seed;
    std::vector<double> spectrum;  // descending
    std::int64_t h_num = 0;        // |∂F| at the Cheeger minimizer
    std::int64_t h_den = 1;        // |F|
    double h = 0;
};

namespace detail {

inline std::string json_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

// Fixed key order and 17-significant-digit reals keep dataset files
// byte-stable across runs.
inline std::string record_to_json(const GraphRecord& r) {
    std::string out = "{\"n\":" + std::to_string(r.n);
    out += ",\"k\":" + std::to_string(r.k);
    out += ",\"index\":" + std::to_string(r.index);
    out += ",\"seed_master\":" + std::to_string(r.seed.master);
    out += ",\"seed_stream\":" + std::to_string(r.seed.stream);
    out += ",\"spectrum\":[";
    for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
        if (i) out += ",";
        out += detail::json_number(r.spectrum[i]);
    }
    out += "],\"h_num\":" + std::to_string(r.h_num);
    out += ",\"h_den\":" + std::to_string(r.h_den);
    out += ",\"h\":" + detail::json_number(r.h) + "}";
    return out;
}

inline GraphRecord record_from_json(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::io_failure, std::string("bad record line: ") + e.what());
    }
    GraphRecord r;
    try {
        r.n = j.at("n").get<int>();
        r.k = j.at("k").get<int>();
        r.index = j.at("index").get<std::uint64_t>();
        r.seed.master = j.at("seed_master").get<std::uint64_t>();
        r.seed.stream = j.at("seed_stream").get<std::uint64_t>();
        r.spectrum = j.at("spectrum").get<std::vector<double>>();
        r.h_num = j.at("h_num").get<std::int64_t>();
        r.h_den = j.at("h_den").get<std::int64_t>();
        r.h = j.at("h").get<double>();
    } catch (const nlohmann::json::exception& e) {
        fail(errc::io_failure, std::string("record missing field: ") + e.what());
    }
    return r;
}

inline void write_records_jsonl(const std::filesystem::path& path,
                                const std::vector<GraphRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    for (const GraphRecord& r : records) out << record_to_json(r) << "\n";
    if (!out) fail(errc::io_failure, "short write to " + path.string());
}

inline std::vector<GraphRecord> read_records_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_failure, "cannot open " + path.string());
    std::vector<GraphRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(record_from_json(line));
    }
    return records;
}

// Flat export for regression tooling: the top four eigenvalues and h.
inline void write_records_csv(const std::filesystem::path& path,
                              const std::vector<GraphRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_failure, "cannot open " + path.string() + " for writing");
    out << "n,k,lambda0,lambda1,lambda2,lambda3,h\n";
    for (const GraphRecord& r : records) {
        out << r.n << "," << r.k;
        for (int i = 0; i < 4; ++i)
            out << "," << detail::json_number(i < int(r.spectrum.size()) ? r.spectrum[std::size_t(i)] : 0.0);
        out << "," << detail::json_number(r.h) << "\n";
    }
}

// Stored-value invariants: spectrum shape and moments, the rational h, and
// the bound sandwich. Empty means the record is internally consistent.
inline std::vector<std::string> check_record(const GraphRecord& r) {
    std::vector<std::string> out;
    const auto where = "record (n=" + std::to_string(r.n) + ", k=" + std::to_string(r.k) +
                       ", index=" + std::to_string(r.index) + "): ";
    if (int(r.spectrum.size()) != r.n) {
        out.push_back(where + "spectrum length != n");
        return out;
    }
    double sum = 0, sum_sq = 0;
    for (std::size_t i = 0; i < r.spectrum.size(); ++i) {
        sum += r.spectrum[i];
        sum_sq += r.spectrum[i] * r.spectrum[i];
        if (i > 0 && r.spectrum[i] > r.spectrum[i - 1] + 1e-12)
            out.push_back(where + "spectrum not descending at position " + std::to_string(i));
        if (std::abs(r.spectrum[i]) > r.k + 1e-8)
            out.push_back(where + "eigenvalue exceeds degree in magnitude");
    }
    if (std::abs(r.spectrum[0] - r.k) > 1e-8) out.push_back(where + "Perron eigenvalue != k");
    if (std::abs(sum) > 1e-8 * r.n) out.push_back(where + "trace check failed");
    if (std::abs(sum_sq - double(r.n) * r.k) > 1e-8 * double(r.n) * r.n)
        out.push_back(where + "Frobenius check failed");
    if (r.h_den < 1 || r.h_den > r.n / 2) out.push_back(where + "witness size outside [1, n/2]");
    if (r.h_num < 1) out.push_back(where + "boundary count < 1 on a connected graph");
    if (r.h != double(r.h_num) / double(r.h_den)) out.push_back(where + "h != h_num/h_den");
    const BoundSet b = bounds(r.k, r.n, r.spectrum[1]);
    if (r.h < b.lower - 1e-9 || r.h > b.upper + 1e-9)
        out.push_back(where + "bound sandwich violated");
    return out;
}

// Top-m eigenvalue prefixes paired with h, ready for fitting.
inline SampleSet to_samples(const std::vector<GraphRecord>& records, int m) {
    SampleSet set;
    set.reserve(records.size());
    for (const GraphRecord& r : records) {
        if (m > int(r.spectrum.size()))
            fail(errc::arity_mismatch, "record has fewer than " + std::to_string(m) + " eigenvalues");
        Sample s;
        s.inputs.assign(r.spectrum.begin(), r.spectrum.begin() + m);
        s.target = r.h;
        set.push_back(std::move(s));
    }
    return set;
}

}  // namespace cheeger
