#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "cheeger/dataset.hpp"
#include "cheeger/record.hpp"

using namespace cheeger;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag)
        : path(std::filesystem::temp_directory_path() / ("cheeger_test_" + tag)) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
};

}  // namespace

TEST_CASE("records round-trip through json lines") {
    GraphRecord r;
    r.n = 12;
    r.k = 3;
    r.index = 7;
    r.seed = {42, 99};
    r.spectrum = {3, 2.5, 1.25, 0.5, 0.25, 0, -0.25, -0.5, -1.25, -1.5, -2, -4};
    r.h_num = 4;
    r.h_den = 3;
    r.h = 4.0 / 3.0;
    const GraphRecord back = record_from_json(record_to_json(r));
    CHECK(back.n == r.n);
    CHECK(back.k == r.k);
    CHECK(back.index == r.index);
    CHECK(back.seed == r.seed);
    CHECK(back.spectrum == r.spectrum);
    CHECK(back.h_num == r.h_num);
    CHECK(back.h == r.h);
    CHECK_THROWS_AS(record_from_json("{not json"), error);
    CHECK_THROWS_AS(record_from_json("{\"n\": 3}"), error);
}

TEST_CASE("check_record flags corrupted rows") {
    const GraphRecord good = build_record(7, 10, 3, 0);
    CHECK(check_record(good).empty());

    GraphRecord bad = good;
    bad.spectrum[0] = 2.0;  // Perron violated
    CHECK_FALSE(check_record(bad).empty());

    bad = good;
    bad.h = bad.h * 1.5;
    CHECK_FALSE(check_record(bad).empty());

    bad = good;
    bad.h_den = 99;
    CHECK_FALSE(check_record(bad).empty());
}

TEST_CASE("default degree plans respect parity and counts") {
    CHECK(default_degrees(12) == std::vector<int>{3, 4, 5, 6, 7, 8});
    CHECK(default_degrees(13) == std::vector<int>{4, 6, 8});
    CHECK(default_degrees(6) == std::vector<int>{3, 4});

    const SizePlan plan = default_size_plan(12, 2000);
    CHECK(plan.total() == 2000);
    // availability-style bump: middle degrees dominate
    int k5 = 0, k3 = 0;
    for (const auto& d : plan.degrees) {
        if (d.k == 5) k5 = d.count;
        if (d.k == 3) k3 = d.count;
    }
    CHECK(k5 > 600);
    CHECK(k3 < 40);

    CHECK_THROWS_MATCHES(make_size_plan(13, 100, {3}, {1.0}), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_parameters;
                         }));
}

TEST_CASE("build_dataset is deterministic, restartable and thread-stable") {
    TempDir dir("build");
    DatasetConfig config;
    config.plan = {make_size_plan(10, 24, {3, 4, 5}, {0.3, 0.4, 0.3})};
    config.master = 7;
    config.threads = 1;
    config.out_dir = dir.path;

    const DatasetSummary first = build_dataset(config);
    REQUIRE(first.sizes.size() == 1);
    CHECK(first.sizes[0].records == 24);
    CHECK(first.sizes[0].generated == 24);
    const std::string bytes_first = slurp(records_path(dir.path, 10));

    // idempotent re-run: nothing new, identical bytes
    const DatasetSummary again = build_dataset(config);
    CHECK(again.sizes[0].generated == 0);
    CHECK(slurp(records_path(dir.path, 10)) == bytes_first);

    // same plan in a fresh directory with more threads: identical bytes
    TempDir dir2("build_threads");
    config.out_dir = dir2.path;
    config.threads = 3;
    build_dataset(config);
    CHECK(slurp(records_path(dir2.path, 10)) == bytes_first);

    // raising the count keeps the existing prefix and tops up
    config.out_dir = dir.path;
    config.plan = {make_size_plan(10, 36, {3, 4, 5}, {0.3, 0.4, 0.3})};
    const DatasetSummary grown = build_dataset(config);
    CHECK(grown.sizes[0].records == 36);
    CHECK(grown.sizes[0].generated == 12);
    const std::string bytes_grown = slurp(records_path(dir.path, 10));
    CHECK(bytes_grown.find(bytes_first.substr(0, 200)) != std::string::npos);

    // every persisted record passes its invariants
    for (const GraphRecord& r : load_records(dir.path, 10)) {
        CAPTURE(r.k, r.index);
        CHECK(check_record(r).empty());
    }
}

TEST_CASE("build_dataset rejects odd-odd configurations") {
    DatasetConfig config;
    config.plan = {SizePlan{13, {DegreePlan{3, 5}}}};
    config.out_dir = std::filesystem::temp_directory_path() / "cheeger_test_oddodd";
    CHECK_THROWS_MATCHES(build_dataset(config), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::invalid_parameters;
                         }));
}

TEST_CASE("build_dataset names the offending key when a record fails") {
    TempDir dir("failkey");
    DatasetConfig config;
    config.plan = {make_size_plan(10, 4, {3}, {1.0})};
    config.out_dir = dir.path;
    config.max_restarts = 0;  // force generation-exhausted inside the worker
    try {
        build_dataset(config);
        FAIL("expected an error");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("record (n=10, k=3, index=") != std::string::npos);
        CHECK(std::string(e.what()).find("generation-exhausted") != std::string::npos);
    }
}

TEST_CASE("csv export carries the regression columns") {
    TempDir dir("csv");
    DatasetConfig config;
    config.plan = {make_size_plan(8, 6, {3}, {1.0})};
    config.master = 3;
    config.out_dir = dir.path;
    build_dataset(config);
    const std::string csv = slurp(dir.path / "records_n8.csv");
    CHECK(csv.rfind("n,k,lambda0,lambda1,lambda2,lambda3,h\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_CASE("load_records reports missing sizes") {
    TempDir dir("missing");
    CHECK_THROWS_MATCHES(load_records(dir.path, 14), error, Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::missing_size;
                         }));
}
