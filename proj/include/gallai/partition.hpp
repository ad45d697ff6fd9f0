#pragma once

#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Partition of the vertex set into q >= 2 parts with monochromatic edges
/// between every pair of parts and at most two colors across all cross
/// pairs. Parts are ordered by minimum vertex; `reduced` is the q-vertex
/// complete graph carrying the cross color of each part pair.
struct GallaiPartition {
    std::vector<std::vector<int>> parts;
    std::vector<int> cross_colors;  // distinct colors between parts, ascending
    EdgeColoredCompleteGraph reduced;
};

// A valid Gallai partition of g (requires n >= 2 and no rainbow triangle).
// Candidate cross-color sets are tried in a fixed order (singletons {1}..{k},
// then pairs {a,b} lexicographically): parts seed as connected components of
// the edges colored outside the candidate set, the lowest-indexed violating
// part pair is merged until all cross pairs are monochromatic, and the first
// candidate ending with q >= 2 wins. Throws std::runtime_error if no
// candidate works, which for a rainbow-free input would be a bug.
GallaiPartition find_gallai_partition(const EdgeColoredCompleteGraph& g);

struct PartitionCheck {
    bool ok = true;
    std::string violation;  // first violated invariant, when !ok
};

// Checks every GallaiPartition invariant against g. Malformed partitions
// (overlap, gap, empty part) throw std::invalid_argument.
PartitionCheck verify_partition(const EdgeColoredCompleteGraph& g, const GallaiPartition& p);

// Greedily merges parts while every remaining cross pair stays monochromatic
// (cross colors can only shrink), lowest-indexed legal merge first, until no
// single merge applies. Merge-minimal, not necessarily globally minimal.
GallaiPartition coarsen_to_minimal(const EdgeColoredCompleteGraph& g,
                                   const GallaiPartition& p);

}  // namespace gallai
