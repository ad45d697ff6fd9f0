#include "gallai/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gallai/detect.hpp"

namespace gallai {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<int>> canonical_parts(std::vector<std::vector<int>> parts) {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return parts;
}

// Cross color of (A, B) if monochromatic, else -1.
int cross_color(const EdgeColoredCompleteGraph& g, const std::vector<int>& a,
                const std::vector<int>& b) {
    const int c = g.color(a.front(), b.front());
    for (int u : a)
        for (int v : b)
            if (g.color(u, v) != c) return -1;
    return c;
}

GallaiPartition assemble(const EdgeColoredCompleteGraph& g,
                         std::vector<std::vector<int>> parts) {
    parts = canonical_parts(std::move(parts));
    const int q = static_cast<int>(parts.size());
    std::vector<int> colors;
    std::vector<int> upper;
    upper.reserve(static_cast<std::size_t>(q) * (q - 1) / 2);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            const int c = g.color(parts[i].front(), parts[j].front());
            upper.push_back(c);
            if (std::find(colors.begin(), colors.end(), c) == colors.end())
                colors.push_back(c);
        }
    std::sort(colors.begin(), colors.end());
    EdgeColoredCompleteGraph reduced(q, g.palette(), std::move(upper));
    return {std::move(parts), std::move(colors), std::move(reduced)};
}

// Repair a seeded partition: merge the lowest-indexed pair of parts whose
// cross edges are not monochromatic, until none remains.
std::vector<std::vector<int>> repair(const EdgeColoredCompleteGraph& g,
                                     std::vector<std::vector<int>> parts) {
    parts = canonical_parts(std::move(parts));
    bool merged = true;
    while (merged && parts.size() >= 2) {
        merged = false;
        for (std::size_t i = 0; i < parts.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < parts.size() && !merged; ++j)
                if (cross_color(g, parts[i], parts[j]) < 0) {
                    parts[i].insert(parts[i].end(), parts[j].begin(), parts[j].end());
                    std::sort(parts[i].begin(), parts[i].end());
                    parts.erase(parts.begin() + j);
                    merged = true;
                }
    }
    return parts;
}

}  // namespace

GallaiPartition find_gallai_partition(const EdgeColoredCompleteGraph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("partition requires n >= 2");
    const int k = g.palette();

    std::vector<std::pair<int, int>> candidates;
    for (int a = 1; a <= k; ++a) candidates.emplace_back(a, a);
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) candidates.emplace_back(a, b);

    for (const auto& [a, b] : candidates) {
        // components of the graph of edges colored outside {a, b}
        Dsu dsu(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const int c = g.color(u, v);
                if (c != a && c != b) dsu.unite(u, v);
            }
        std::vector<std::vector<int>> groups(n);
        for (int v = 0; v < n; ++v) groups[dsu.find(v)].push_back(v);
        std::vector<std::vector<int>> parts;
        for (auto& grp : groups)
            if (!grp.empty()) parts.push_back(std::move(grp));
        if (parts.size() < 2) continue;

        parts = repair(g, std::move(parts));
        if (parts.size() >= 2) return assemble(g, std::move(parts));
    }
    throw std::runtime_error(
        "no Gallai partition found; the input must contain a rainbow triangle");
}

PartitionCheck verify_partition(const EdgeColoredCompleteGraph& g, const GallaiPartition& p) {
    const int n = g.order();
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].empty()) throw std::invalid_argument("empty part");
        for (int v : p.parts[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex outside graph");
            if (owner[v] != -1) throw std::invalid_argument("parts overlap");
            owner[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) throw std::invalid_argument("parts do not cover the vertex set");

    auto fail = [](std::string msg) { return PartitionCheck{false, std::move(msg)}; };
    const int q = static_cast<int>(p.parts.size());
    if (q < 2) return fail("fewer than two parts");
    if (p.reduced.order() != q) return fail("reduced graph order differs from q");

    std::vector<int> seen;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            const int c = cross_color(g, p.parts[i], p.parts[j]);
            if (c < 0) {
                std::ostringstream msg;
                msg << "cross pair (" << i << "," << j << ") is not monochromatic";
                return fail(msg.str());
            }
            if (p.reduced.color(i, j) != c) {
                std::ostringstream msg;
                msg << "reduced edge (" << i << "," << j << ") carries color "
                    << p.reduced.color(i, j) << " but the cross color is " << c;
                return fail(msg.str());
            }
            if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
        }
    if (seen.size() > 2) return fail("more than two cross colors");
    std::sort(seen.begin(), seen.end());
    if (seen != p.cross_colors) return fail("cross_colors field does not match the coloring");
    return {};
}

GallaiPartition coarsen_to_minimal(const EdgeColoredCompleteGraph& g,
                                   const GallaiPartition& p) {
    if (auto check = verify_partition(g, p); !check.ok)
        throw std::invalid_argument("coarsen_to_minimal requires a valid partition: " +
                                    check.violation);
    auto parts = p.parts;
    // cross colors between current parts; merging i and j is legal iff every
    // third part sees i and j in the same color
    auto cc = [&](const std::vector<int>& a, const std::vector<int>& b) {
        return g.color(a.front(), b.front());
    };
    bool merged = true;
    while (merged && parts.size() > 2) {
        merged = false;
        for (std::size_t i = 0; i < parts.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < parts.size() && !merged; ++j) {
                bool legal = true;
                for (std::size_t l = 0; l < parts.size() && legal; ++l)
                    if (l != i && l != j) legal = cc(parts[l], parts[i]) == cc(parts[l], parts[j]);
                if (legal) {
                    parts[i].insert(parts[i].end(), parts[j].begin(), parts[j].end());
                    std::sort(parts[i].begin(), parts[i].end());
                    parts.erase(parts.begin() + j);
                    parts = canonical_parts(std::move(parts));
                    merged = true;
                }
            }
    }
    return assemble(g, std::move(parts));
}

}  // namespace gallai
