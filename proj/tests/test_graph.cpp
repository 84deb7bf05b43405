#include <catch2/catch_amalgamated.hpp>

#include "cheeger/graph.hpp"
#include "testing.hpp"

using namespace cheeger;

TEST_CASE("seed mixing is pure and stream-sensitive") {
    CHECK(seed_state({42, 0}) == seed_state({42, 0}));
    CHECK(seed_state({42, 0}) != seed_state({42, 1}));
    CHECK(seed_state({42, 0}) != seed_state({43, 0}));
    CHECK(seed_state({42, 0}, 1) != seed_state({42, 0}, 2));
    CHECK(substream({7, 3}, 5) == substream({7, 3}, 5));
    CHECK(substream({7, 3}, 5).stream != substream({7, 3}, 6).stream);
}

TEST_CASE("rng bounded draws stay in range") {
    Rng rng(Seed{1, 2});
    for (int i = 0; i < 1000; ++i) {
        CHECK(rng.below(7) < 7);
        const double u = rng.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("named graphs have the expected shape") {
    const Graph k4 = complete_graph(4);
    CHECK(validate(k4).empty());
    CHECK(k4.edge_count() == 6);
    const Graph c6 = cycle_graph(6);
    CHECK(validate(c6).empty());
    CHECK(c6.edge_count() == 6);
    const Graph pete = petersen_graph();
    CHECK(validate(pete).empty());
    CHECK(pete.edge_count() == 15);
    CHECK(is_connected(pete));
}

TEST_CASE("is_connected distinguishes cycles from unions") {
    CHECK(is_connected(complete_graph(4)));
    CHECK(is_connected(cycle_graph(6)));
    CHECK_FALSE(is_connected(testoracle::two_triangles()));
}

TEST_CASE("validate reports asymmetry and degree violations") {
    Graph g = complete_graph(4);
    g.adj[0] &= ~bit(1);  // drop 0->1 but keep 1->0
    const auto violations = validate(g);
    bool saw_asymmetry = false, saw_degree = false;
    for (const auto& v : violations) {
        if (v.find("asymmetric") != std::string::npos) saw_asymmetry = true;
        if (v.find("degree") != std::string::npos) saw_degree = true;
    }
    CHECK(saw_asymmetry);
    CHECK(saw_degree);

    Graph claimed = cycle_graph(6);
    claimed.k = 3;  // 2-regular data claimed cubic
    CHECK(validate(claimed).size() == 6);  // one per vertex
}

TEST_CASE("generate_regular rejects bad parameters") {
    CHECK_THROWS_MATCHES(generate_regular(5, 3, Seed{}), error, Catch::Matchers::Predicate<error>(
        [](const error& e) { return e.code() == errc::invalid_parameters; }));
    CHECK_THROWS_AS(generate_regular(4, 4, Seed{}), error);
    CHECK_THROWS_AS(generate_regular(2, 2, Seed{}), error);
    CHECK_THROWS_AS(generate_regular(70, 3, Seed{}), error);
}

TEST_CASE("a zero restart budget reports generation-exhausted") {
    CHECK_THROWS_MATCHES(generate_regular(8, 3, Seed{1, 1}, 0), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::generation_exhausted;
                         }));
}

TEST_CASE("n=4 k=3 always yields K4") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Graph g = generate_regular(4, 3, Seed{s, s});
        CHECK(g.adj == complete_graph(4).adj);
    }
}

TEST_CASE("generation is deterministic in the seed") {
    const Graph a = generate_regular(12, 3, Seed{42, 0});
    const Graph b = generate_regular(12, 3, Seed{42, 0});
    CHECK(a.adj == b.adj);
    const Graph c = generate_regular(12, 3, Seed{42, 1});
    CHECK(a.adj != c.adj);  // overwhelmingly likely for distinct streams
}

TEST_CASE("the 64-vertex cap works end to end") {
    const Graph g = generate_regular(64, 3, Seed{7, 7});
    CHECK(validate(g).empty());
    CHECK(is_connected(g));
    CHECK(g.edge_count() == 96);
    const Graph k64 = complete_graph(64);
    CHECK(validate(k64).empty());
    for (int v = 0; v < 64; ++v) CHECK(k64.degree_of(v) == 63);
}

TEST_CASE("generated graphs are valid, connected and regular") {
    for (const auto& [n, k] : std::vector<std::pair<int, int>>{
             {6, 3}, {9, 4}, {12, 3}, {12, 8}, {15, 6}, {20, 5}, {32, 4}}) {
        for (std::uint64_t s = 0; s < 8; ++s) {
            const Graph g = generate_regular(n, k, Seed{s, 99});
            CAPTURE(n, k, s);
            CHECK(validate(g).empty());
            CHECK(is_connected(g));
            CHECK(g.edge_count() == std::int64_t(n) * k / 2);
            for (int v = 0; v < n; ++v) CHECK(g.degree_of(v) == k);
        }
    }
}
