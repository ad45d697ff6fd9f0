#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gallai/formula.hpp"
#include "gallai/graph.hpp"
#include "gallai/patterns.hpp"

namespace gallai {

/// Certificate for a monochromatic copy: host vertices listed in
/// pattern-vertex order.
struct Embedding {
    std::vector<int> map;
};

// Some triple whose three edges carry three distinct colors, or nullopt if
// the coloring is a Gallai coloring. Returned ascending.
std::optional<std::array<int, 3>> rainbow_triangle(const EdgeColoredCompleteGraph& g);

// A (not necessarily induced) copy of p with every pattern edge colored c,
// found via common-neighborhood intersection kernels. Throws if c is outside
// 1..k.
std::optional<Embedding> find_mono_copy(const EdgeColoredCompleteGraph& g,
                                        const PatternGraph& p, int c);

bool embedding_valid(const EdgeColoredCompleteGraph& g, const PatternGraph& p,
                     int c, const Embedding& e);

struct ForbiddenCopy {
    int color;
    Pattern pattern;
    Embedding embedding;
};

// A copy of the pattern assigned to some color by the role map (B3plus in
// 1..r, S3plus in r+1..r+s, K3 in r+s+1..k). nullopt means g certifies the
// lower bound at its order. Colors scanned ascending; with threads > 1 the
// scan fans out per color but the lowest hit still wins.
std::optional<ForbiddenCopy> forbidden_copy(const EdgeColoredCompleteGraph& g,
                                            const Parameters& p, int threads = 1);

}  // namespace gallai
