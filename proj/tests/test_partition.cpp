#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include "gallai/construct.hpp"
#include "gallai/detect.hpp"
#include "gallai/partition.hpp"
#include "oracles.hpp"

using gallai::blow_up;
using gallai::coarsen_to_minimal;
using gallai::EdgeColoredCompleteGraph;
using gallai::find_gallai_partition;
using gallai::GallaiPartition;
using gallai::quadratic_residue_coloring;
using gallai::rainbow_triangle;
using gallai::verify_partition;

namespace {

// Q1-shaped coloring: red/blue pentagon pair (distances 1,4 vs 2,3 mod 5).
EdgeColoredCompleteGraph pentagon_pair() { return quadratic_residue_coloring(5); }

}  // namespace

TEST_SUITE_BEGIN("partition");

TEST_CASE("monochromatic complete graph splits into singletons") {
    const auto g = EdgeColoredCompleteGraph::monochromatic(6, 1, 1);
    const auto p = find_gallai_partition(g);
    CHECK(p.parts.size() == 6);
    CHECK(p.cross_colors == std::vector<int>{1});
    CHECK(verify_partition(g, p).ok);
}

TEST_CASE("pentagon pair stays at q = 5; brute force agrees") {
    const auto g = pentagon_pair();
    REQUIRE(!rainbow_triangle(g).has_value());
    const auto p = find_gallai_partition(g);
    CHECK(p.parts.size() == 5);
    CHECK(verify_partition(g, p).ok);
    CHECK(oracles::brute_force_min_parts(g) == 5);
    const auto coarse = coarsen_to_minimal(g, p);
    CHECK(coarse.parts.size() == 5);
}

TEST_CASE("block partition of a blow-up is valid") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        auto inner = oracles::random_nested_blowup(15, rng);
        std::uniform_int_distribution<int> bit(1, 2);
        std::vector<int> upper(6);
        for (int& c : upper) c = bit(rng);
        EdgeColoredCompleteGraph outer(4, 2, std::move(upper));
        const int k = inner.palette();
        auto g = blow_up(outer, inner, {{{1, k + 1}, {2, k + 2}}});

        GallaiPartition blocks{{}, {}, outer};  // reduced = outer, relabeled
        const int b = inner.order();
        std::vector<int> upper2;
        for (int i = 0; i < 4; ++i) {
            std::vector<int> part(b);
            for (int v = 0; v < b; ++v) part[v] = i * b + v;
            blocks.parts.push_back(std::move(part));
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                upper2.push_back(outer.color(i, j) == 1 ? k + 1 : k + 2);
        blocks.reduced = EdgeColoredCompleteGraph(4, g.palette(), std::move(upper2));
        for (int c : g.used_colors())
            if (c > k) blocks.cross_colors.push_back(c);
        CHECK(verify_partition(g, blocks).ok);
    }
}

TEST_CASE("verify_partition rejects bad partitions") {
    const auto rainbow = EdgeColoredCompleteGraph(3, 3, {1, 2, 3});
    GallaiPartition p{{{0}, {1}, {2}}, {1, 2, 3}, rainbow};
    const auto check = verify_partition(rainbow, p);
    CHECK(!check.ok);
    CHECK(check.violation.find("cross colors") != std::string::npos);

    const auto k4 = EdgeColoredCompleteGraph::monochromatic(4, 1, 1);
    GallaiPartition halves{{{0, 1}, {2, 3}},
                           {1},
                           EdgeColoredCompleteGraph::monochromatic(2, 1, 1)};
    CHECK(verify_partition(k4, halves).ok);

    GallaiPartition overlap{{{0, 1}, {1, 2, 3}},
                            {1},
                            EdgeColoredCompleteGraph::monochromatic(2, 1, 1)};
    CHECK_THROWS_AS(verify_partition(k4, overlap), std::invalid_argument);
    GallaiPartition gap{{{0, 1}, {2}},
                        {1},
                        EdgeColoredCompleteGraph::monochromatic(2, 1, 1)};
    CHECK_THROWS_AS(verify_partition(k4, gap), std::invalid_argument);
}

TEST_CASE("soundness over random nested blow-ups") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = oracles::random_nested_blowup(120, rng);
        if (g.order() < 2) continue;
        REQUIRE(!rainbow_triangle(g).has_value());
        const auto p = find_gallai_partition(g);
        CHECK(verify_partition(g, p).ok);
    }
}

TEST_CASE("completeness on all small Gallai colorings") {
    // every Gallai coloring on up to 7 vertices with up to 3 colors, up to
    // color relabeling, admits a partition
    for (int n = 2; n <= 7; ++n) {
        std::uint64_t count = 0, good = 0;
        oracles::for_each_gallai_coloring(n, 3, [&](const EdgeColoredCompleteGraph& g) {
            ++count;
            const auto p = find_gallai_partition(g);
            if (verify_partition(g, p).ok) ++good;
        });
        CHECK(count > 0);
        CHECK(good == count);
    }
}

TEST_CASE("coarsening merges a monochromatic complete graph down to two parts") {
    const auto g = EdgeColoredCompleteGraph::monochromatic(7, 1, 1);
    const auto p = find_gallai_partition(g);
    CHECK(p.parts.size() == 7);
    const auto coarse = coarsen_to_minimal(g, p);
    CHECK(coarse.parts.size() == 2);
    CHECK(verify_partition(g, coarse).ok);
}

TEST_CASE("coarsening reaches the brute-force minimum when the outer graph has a mono cut") {
    // outer: K4 with a monochromatic cut {0,1} | {2,3} in color 1
    // (0,1) and (2,3) colored 2; the four cross pairs colored 1
    EdgeColoredCompleteGraph outer(4, 2, {2, 1, 1, 1, 1, 2});
    const auto inner = EdgeColoredCompleteGraph::monochromatic(2, 1, 1);
    const auto g = blow_up(outer, inner, {{{1, 2}, {2, 3}}});
    REQUIRE(g.order() == 8);
    const auto p = find_gallai_partition(g);
    const auto coarse = coarsen_to_minimal(g, p);
    CHECK(verify_partition(g, coarse).ok);
    CHECK(static_cast<int>(coarse.parts.size()) == oracles::brute_force_min_parts(g));
    CHECK(coarse.parts.size() == 2);
}

TEST_CASE("coarsening never increases q and preserves validity") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracles::random_nested_blowup(60, rng);
        if (g.order() < 2) continue;
        const auto p = find_gallai_partition(g);
        const auto coarse = coarsen_to_minimal(g, p);
        CHECK(coarse.parts.size() <= p.parts.size());
        CHECK(coarse.parts.size() >= 2);
        CHECK(verify_partition(g, coarse).ok);
    }
}

TEST_CASE("reduced graph reproduces the cross edges exactly") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracles::random_nested_blowup(80, rng);
        if (g.order() < 2) continue;
        const auto p = find_gallai_partition(g);
        std::vector<int> owner(g.order());
        for (std::size_t i = 0; i < p.parts.size(); ++i)
            for (int v : p.parts[i]) owner[v] = static_cast<int>(i);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (owner[u] != owner[v])
                    CHECK(g.color(u, v) == p.reduced.color(owner[u], owner[v]));
    }
}

TEST_SUITE_END();
