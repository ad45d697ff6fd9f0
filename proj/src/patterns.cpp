#include "gallai/patterns.hpp"

namespace gallai {

namespace {

std::array<PatternGraph, 6> make_catalog() {
    // Canonical numbering: stars/triangles put the high-degree vertex first;
    // books put the spine on {0,1} and pages on {2,3,4}, with the extra
    // B3plus page edge between pages 2 and 3.
    return {{
        {Pattern::K3, 3, {{0, 1}, {0, 2}, {1, 2}}},
        {Pattern::S3, 4, {{0, 1}, {0, 2}, {0, 3}}},
        {Pattern::S3plus, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}},
        {Pattern::B3, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}},
        {Pattern::B3plus, 5,
         {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}},
        {Pattern::K4, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
    }};
}

}  // namespace

const std::array<PatternGraph, 6>& pattern_catalog() {
    static const std::array<PatternGraph, 6> catalog = make_catalog();
    return catalog;
}

const PatternGraph& pattern_graph(Pattern p) {
    return pattern_catalog()[static_cast<int>(p)];
}

std::string_view pattern_name(Pattern p) {
    switch (p) {
        case Pattern::K3: return "K3";
        case Pattern::S3: return "S3";
        case Pattern::S3plus: return "S3plus";
        case Pattern::B3: return "B3";
        case Pattern::B3plus: return "B3plus";
        case Pattern::K4: return "K4";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(std::string_view name) {
    if (name == "K3") return Pattern::K3;
    if (name == "S3") return Pattern::S3;
    if (name == "S3plus" || name == "S3+") return Pattern::S3plus;
    if (name == "B3") return Pattern::B3;
    if (name == "B3plus" || name == "B3+") return Pattern::B3plus;
    if (name == "K4") return Pattern::K4;
    return std::nullopt;
}

}  // namespace gallai
