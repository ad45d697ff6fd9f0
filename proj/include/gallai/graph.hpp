#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gallai/vertex_set.hpp"

namespace gallai {

/// Complete graph on n vertices with one color per edge, colors drawn from
/// the palette 1..k. Immutable after construction; per-color adjacency is
/// materialized as one VertexSet row per (color, vertex) so that common
/// neighborhoods are word-parallel intersections.
///
/// Edge colors are stored as the upper triangle in row-major order:
/// row i holds the colors of (i, i+1), (i, i+2), ..., (i, n-1).
class EdgeColoredCompleteGraph {
public:
    // upper: n*(n-1)/2 colors in row-major upper-triangle order.
    EdgeColoredCompleteGraph(int n, int k, std::vector<int> upper);

    static EdgeColoredCompleteGraph monochromatic(int n, int color, int k);
    static EdgeColoredCompleteGraph single_vertex(int k = 0);

    int order() const { return n_; }
    int palette() const { return k_; }

    int color(int u, int v) const {
        return u < v ? colors_[index(u, v)] : colors_[index(v, u)];
    }

    // Vertices joined to v by an edge of color c (c in 1..k).
    const VertexSet& neighbors(int c, int v) const { return adj_[(c - 1) * n_ + v]; }

    std::vector<int> used_colors() const;

    // Text format: line 1 "n k", then n-1 lines, line i (1-based) holding
    // the colors of edges (i, j) for j = i+1..n. Round-trips byte-exactly.
    std::string to_gcol() const;
    static EdgeColoredCompleteGraph from_gcol(std::istream& in);
    static EdgeColoredCompleteGraph from_gcol(const std::string& text);
    static EdgeColoredCompleteGraph load_gcol_file(const std::string& path);
    void save_gcol_file(const std::string& path) const;

    // JSON mirror: {"n":..., "k":..., "colors":[upper triangle]}.
    std::string to_json() const;
    static EdgeColoredCompleteGraph from_json(const std::string& text);

    bool operator==(const EdgeColoredCompleteGraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && colors_ == o.colors_;
    }

private:
    std::size_t index(int u, int v) const {  // requires u < v
        return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
    }
    void build_adjacency();

    int n_ = 1;
    int k_ = 0;
    std::vector<std::uint16_t> colors_;
    std::vector<VertexSet> adj_;
};

}  // namespace gallai
