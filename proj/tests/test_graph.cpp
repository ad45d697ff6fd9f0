#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "gallai/graph.hpp"
#include "oracles.hpp"

using gallai::EdgeColoredCompleteGraph;

TEST_SUITE_BEGIN("graph");

TEST_CASE("construction validates colors and counts") {
    CHECK_NOTHROW(EdgeColoredCompleteGraph(3, 2, {1, 2, 1}));
    CHECK_THROWS_AS(EdgeColoredCompleteGraph(3, 2, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoredCompleteGraph(3, 2, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoredCompleteGraph(3, 2, {1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoredCompleteGraph(0, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(EdgeColoredCompleteGraph(2, 0, {}), std::invalid_argument);
    // a lone vertex needs no colors at all
    CHECK_NOTHROW(EdgeColoredCompleteGraph(1, 0, {}));
}

TEST_CASE("color lookup is symmetric and matches the upper triangle") {
    // rows: (0,1) (0,2) (0,3) | (1,2) (1,3) | (2,3)
    EdgeColoredCompleteGraph g(4, 3, {1, 2, 3, 1, 2, 3});
    CHECK(g.color(0, 1) == 1);
    CHECK(g.color(1, 0) == 1);
    CHECK(g.color(0, 3) == 3);
    CHECK(g.color(1, 2) == 1);
    CHECK(g.color(2, 3) == 3);
    CHECK(g.used_colors() == std::vector<int>{1, 2, 3});
}

TEST_CASE("adjacency rows agree with colors") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracles::random_coloring(9, 3, rng);
        for (int c = 1; c <= 3; ++c)
            for (int u = 0; u < 9; ++u)
                for (int v = 0; v < 9; ++v) {
                    const bool adj = v != u && g.color(u, v) == c;
                    CHECK(g.neighbors(c, u).test(v) == adj);
                }
    }
}

TEST_CASE("gcol round-trips byte-exactly") {
    EdgeColoredCompleteGraph g(4, 2, {1, 2, 2, 1, 1, 2});
    const std::string text = g.to_gcol();
    CHECK(text == "4 2\n1 2 2\n1 1\n2\n");
    CHECK(EdgeColoredCompleteGraph::from_gcol(text) == g);
    CHECK(EdgeColoredCompleteGraph::from_gcol(text).to_gcol() == text);

    const auto k1 = EdgeColoredCompleteGraph::single_vertex(0);
    CHECK(k1.to_gcol() == "1 0\n");
    CHECK(EdgeColoredCompleteGraph::from_gcol(k1.to_gcol()) == k1);
}

TEST_CASE("gcol rejects malformed input") {
    CHECK_THROWS(EdgeColoredCompleteGraph::from_gcol(std::string("")));
    CHECK_THROWS(EdgeColoredCompleteGraph::from_gcol(std::string("3 2\n1 2\n")));
    CHECK_THROWS(EdgeColoredCompleteGraph::from_gcol(std::string("3 2\n1 5 1\n")));
}

TEST_CASE("json mirror round-trips") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = oracles::random_coloring(7, 4, rng);
        CHECK(EdgeColoredCompleteGraph::from_json(g.to_json()) == g);
    }
    EdgeColoredCompleteGraph g(3, 2, {2, 1, 2});
    CHECK(g.to_json() == R"({"colors":[2,1,2],"k":2,"n":3})");
}

TEST_CASE("random gcol round-trip property") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> nd(1, 20), kd(1, 5);
        const int n = nd(rng);
        auto g = n == 1 ? EdgeColoredCompleteGraph::single_vertex(kd(rng))
                        : oracles::random_coloring(n, kd(rng), rng);
        const auto text = g.to_gcol();
        auto back = EdgeColoredCompleteGraph::from_gcol(text);
        CHECK(back == g);
        CHECK(back.to_gcol() == text);
    }
}

TEST_SUITE_END();
