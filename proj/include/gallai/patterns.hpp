#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace gallai {

// The six small target graphs. S3plus is the star S3 with one leaf-leaf edge
// (a triangle with a pendant edge); B3plus is the book B3 with one edge added
// between two page vertices.
enum class Pattern { K3, S3, S3plus, B3, B3plus, K4 };

struct PatternGraph {
    Pattern name;
    int order;                                  // <= 5
    std::vector<std::pair<int, int>> edges;     // simple, canonical numbering
};

const PatternGraph& pattern_graph(Pattern p);
const std::array<PatternGraph, 6>& pattern_catalog();

std::string_view pattern_name(Pattern p);
// Accepts "K3", "S3", "S3plus"/"S3+", "B3", "B3plus"/"B3+", "K4".
std::optional<Pattern> pattern_from_name(std::string_view name);

}  // namespace gallai
