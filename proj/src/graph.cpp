#include "gallai/graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gallai {

EdgeColoredCompleteGraph::EdgeColoredCompleteGraph(int n, int k, std::vector<int> upper)
    : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("graph order must be >= 1");
    if (k < 0) throw std::invalid_argument("palette size must be >= 0");
    if (n > 1 && k < 1) throw std::invalid_argument("n > 1 requires at least one color");
    const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (upper.size() != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " edge colors, got " +
                                    std::to_string(upper.size()));
    colors_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (upper[i] < 1 || upper[i] > k)
            throw std::invalid_argument("edge color " + std::to_string(upper[i]) +
                                        " outside palette 1.." + std::to_string(k));
        colors_[i] = static_cast<std::uint16_t>(upper[i]);
    }
    build_adjacency();
}

EdgeColoredCompleteGraph EdgeColoredCompleteGraph::monochromatic(int n, int color, int k) {
    if (n < 1) throw std::invalid_argument("graph order must be >= 1");
    std::vector<int> upper(static_cast<std::size_t>(n) * (n - 1) / 2, color);
    return EdgeColoredCompleteGraph(n, k, std::move(upper));
}

EdgeColoredCompleteGraph EdgeColoredCompleteGraph::single_vertex(int k) {
    return EdgeColoredCompleteGraph(1, k, {});
}

void EdgeColoredCompleteGraph::build_adjacency() {
    adj_.assign(static_cast<std::size_t>(k_) * n_, VertexSet(n_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            const int c = colors_[index(u, v)];
            adj_[(c - 1) * n_ + u].set(v);
            adj_[(c - 1) * n_ + v].set(u);
        }
}

std::vector<int> EdgeColoredCompleteGraph::used_colors() const {
    std::vector<bool> seen(k_ + 1, false);
    for (std::uint16_t c : colors_) seen[c] = true;
    std::vector<int> out;
    for (int c = 1; c <= k_; ++c)
        if (seen[c]) out.push_back(c);
    return out;
}

std::string EdgeColoredCompleteGraph::to_gcol() const {
    std::string out;
    out.reserve(colors_.size() * 3 + 16);
    out += std::to_string(n_);
    out += ' ';
    out += std::to_string(k_);
    out += '\n';
    std::size_t idx = 0;
    for (int u = 0; u + 1 < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (v > u + 1) out += ' ';
            out += std::to_string(colors_[idx++]);
        }
        out += '\n';
    }
    return out;
}

EdgeColoredCompleteGraph EdgeColoredCompleteGraph::from_gcol(std::istream& in) {
    int n = 0, k = 0;
    if (!(in >> n >> k)) throw std::runtime_error("gcol: missing header");
    if (n < 1) throw std::runtime_error("gcol: bad vertex count");
    const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> upper(m);
    for (std::size_t i = 0; i < m; ++i)
        if (!(in >> upper[i])) throw std::runtime_error("gcol: truncated edge colors");
    return EdgeColoredCompleteGraph(n, k, std::move(upper));
}

EdgeColoredCompleteGraph EdgeColoredCompleteGraph::from_gcol(const std::string& text) {
    std::istringstream in(text);
    return from_gcol(in);
}

EdgeColoredCompleteGraph EdgeColoredCompleteGraph::load_gcol_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return from_gcol(in);
}

void EdgeColoredCompleteGraph::save_gcol_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_gcol();
}

std::string EdgeColoredCompleteGraph::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["k"] = k_;
    j["colors"] = colors_;
    return j.dump();
}

EdgeColoredCompleteGraph EdgeColoredCompleteGraph::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<int> upper = j.at("colors").get<std::vector<int>>();
    return EdgeColoredCompleteGraph(j.at("n").get<int>(), j.at("k").get<int>(),
                                    std::move(upper));
}

}  // namespace gallai
