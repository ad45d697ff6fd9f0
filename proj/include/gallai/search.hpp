#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/patterns.hpp"

namespace gallai {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double time_limit_s = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0x6a09e667f3bcc908ull;
};

enum class SearchStatus {
    Found,            // witness returned (re-verified against the detectors)
    ExhaustiveNone,   // complete search: no witness exists
    BudgetExhausted,  // gave up; says nothing about existence
};

struct SearchResult {
    SearchStatus status;
    std::optional<EdgeColoredCompleteGraph> witness;
    std::uint64_t nodes = 0;
};

// Exhaustive DFS for a 2-coloring of K_n with no copy of a in color 1 and no
// copy of b in color 2. Edges are decided in vertex-incremental order (each
// new vertex introduced as late as possible), partial forbidden copies prune
// immediately, and prefixes on <= 6 vertices are rejected unless they are the
// lexicographic minimum of their isomorphism class.
SearchResult witness_search(Pattern a, Pattern b, int n, const SearchBudget& budget = {});

// Diagnostic hook: same search after relabeling vertices by `order` (a
// permutation of 0..n-1), used to confirm exhaustive-none results are not an
// artifact of the fixed edge order.
SearchResult witness_search_with_order(Pattern a, Pattern b, int n,
                                       const SearchBudget& budget,
                                       const std::vector<int>& order);

struct RamseyResult {
    std::optional<int> value;  // set iff the number was determined
    SearchStatus last_status = SearchStatus::BudgetExhausted;
    std::uint64_t nodes = 0;
};

// Smallest n <= n_max at which the DFS proves no witness exists; requires and
// re-verifies a witness at n-1. value is empty when the budget ran out first
// or no exhaustive-none was reached by n_max.
RamseyResult compute_ramsey(Pattern a, Pattern b, int n_max, const SearchBudget& budget = {});

// Min-conflicts walk over edge recolorings, restarting on stagnation;
// deterministic given the seed. Never proves non-existence. An optional start
// coloring is tried before any random state.
SearchResult local_search_witness(Pattern a, Pattern b, int n, const SearchBudget& budget = {},
                                  const EdgeColoredCompleteGraph* start = nullptr);

}  // namespace gallai
