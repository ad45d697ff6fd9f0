#include "gallai/detect.hpp"

#include <future>
#include <stdexcept>

namespace gallai {

std::optional<std::array<int, 3>> rainbow_triangle(const EdgeColoredCompleteGraph& g) {
    const int n = g.order();
    const int k = g.palette();
    if (k < 3 || n < 3) return std::nullopt;  // rainbow needs three colors
    VertexSet blocked(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int c = g.color(u, v);
            // w fails to make {u,v,w} rainbow iff one of its edges repeats c
            // or both of its edges share a color.
            blocked = g.neighbors(c, u);
            blocked |= g.neighbors(c, v);
            for (int d = 1; d <= k; ++d)
                blocked.or_and(g.neighbors(d, u), g.neighbors(d, v));
            const int w = blocked.first_missing();
            if (w >= 0) {
                std::array<int, 3> tri{u, v, w};
                std::sort(tri.begin(), tri.end());
                return tri;
            }
        }
    return std::nullopt;
}

namespace {

// Picks `want` vertices from the set, excluding up to two vertices.
bool pick_from(const VertexSet& s, int want, int skip1, int skip2, std::vector<int>& out) {
    for (int v = s.next(0); v >= 0 && want > 0; v = s.next(v + 1)) {
        if (v == skip1 || v == skip2) continue;
        out.push_back(v);
        --want;
    }
    return want == 0;
}

std::optional<Embedding> find_k3(const EdgeColoredCompleteGraph& g, int c) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        const VertexSet& nu = g.neighbors(c, u);
        for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1)) {
            const int w = intersect_first(nu, g.neighbors(c, v));
            if (w >= 0) return Embedding{{u, v, w}};
        }
    }
    return std::nullopt;
}

std::optional<Embedding> find_s3(const EdgeColoredCompleteGraph& g, int c) {
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        const VertexSet& nu = g.neighbors(c, u);
        if (nu.count() >= 3) {
            std::vector<int> m{u};
            pick_from(nu, 3, -1, -1, m);
            return Embedding{std::move(m)};
        }
    }
    return std::nullopt;
}

// Triangle with a pendant edge: map order [center, leaf, leaf, pendant],
// pendant attached to the center.
std::optional<Embedding> find_s3plus(const EdgeColoredCompleteGraph& g, int c) {
    const int n = g.order();
    VertexSet common(n);
    for (int u = 0; u < n; ++u) {
        const VertexSet& nu = g.neighbors(c, u);
        for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1)) {
            const VertexSet& nv = g.neighbors(c, v);
            common.assign_and(nu, nv);
            for (int w = common.next(0); w >= 0; w = common.next(w + 1)) {
                // triangle {u,v,w}; any of its vertices with a fourth
                // c-neighbor is the center
                const VertexSet& nw = g.neighbors(c, w);
                const VertexSet* rows[3] = {&nu, &nv, &nw};
                const int tri[3][3] = {{u, v, w}, {v, u, w}, {w, u, v}};
                for (int i = 0; i < 3; ++i) {
                    std::vector<int> pendant;
                    if (rows[i]->count() >= 3 &&
                        pick_from(*rows[i], 1, tri[i][1], tri[i][2], pendant))
                        return Embedding{{tri[i][0], tri[i][1], tri[i][2], pendant[0]}};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Embedding> find_b3(const EdgeColoredCompleteGraph& g, int c) {
    const int n = g.order();
    VertexSet common(n);
    for (int u = 0; u < n; ++u) {
        const VertexSet& nu = g.neighbors(c, u);
        for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1)) {
            common.assign_and(nu, g.neighbors(c, v));
            if (common.count() >= 3) {
                std::vector<int> m{u, v};
                pick_from(common, 3, -1, -1, m);
                return Embedding{std::move(m)};
            }
        }
    }
    return std::nullopt;
}

// Spine edge uv whose common c-neighborhood W has >= 3 vertices and an
// internal c-edge; map order [spine, spine, page, page, page] with the page
// edge on positions 2-3.
std::optional<Embedding> find_b3plus(const EdgeColoredCompleteGraph& g, int c) {
    const int n = g.order();
    VertexSet common(n);
    for (int u = 0; u < n; ++u) {
        const VertexSet& nu = g.neighbors(c, u);
        for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1)) {
            common.assign_and(nu, g.neighbors(c, v));
            if (common.count() < 3) continue;
            for (int a = common.next(0); a >= 0; a = common.next(a + 1)) {
                const int b = intersect_first(common, g.neighbors(c, a));
                if (b < 0) continue;
                std::vector<int> m{u, v, a, b};
                pick_from(common, 1, a, b, m);
                return Embedding{std::move(m)};
            }
        }
    }
    return std::nullopt;
}

std::optional<Embedding> find_k4(const EdgeColoredCompleteGraph& g, int c) {
    const int n = g.order();
    VertexSet common(n);
    for (int u = 0; u < n; ++u) {
        const VertexSet& nu = g.neighbors(c, u);
        for (int v = nu.next(u + 1); v >= 0; v = nu.next(v + 1)) {
            common.assign_and(nu, g.neighbors(c, v));
            for (int a = common.next(0); a >= 0; a = common.next(a + 1)) {
                const int b = intersect_first(common, g.neighbors(c, a));
                if (b >= 0) return Embedding{{u, v, a, b}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_mono_copy(const EdgeColoredCompleteGraph& g,
                                        const PatternGraph& p, int c) {
    if (c < 1 || c > g.palette())
        throw std::invalid_argument("color " + std::to_string(c) + " outside palette 1.." +
                                    std::to_string(g.palette()));
    if (p.order > g.order()) return std::nullopt;
    switch (p.name) {
        case Pattern::K3: return find_k3(g, c);
        case Pattern::S3: return find_s3(g, c);
        case Pattern::S3plus: return find_s3plus(g, c);
        case Pattern::B3: return find_b3(g, c);
        case Pattern::B3plus: return find_b3plus(g, c);
        case Pattern::K4: return find_k4(g, c);
    }
    throw std::logic_error("unreachable");
}

bool embedding_valid(const EdgeColoredCompleteGraph& g, const PatternGraph& p, int c,
                     const Embedding& e) {
    if (static_cast<int>(e.map.size()) != p.order) return false;
    for (std::size_t i = 0; i < e.map.size(); ++i) {
        if (e.map[i] < 0 || e.map[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < e.map.size(); ++j)
            if (e.map[i] == e.map[j]) return false;
    }
    for (const auto& [a, b] : p.edges)
        if (g.color(e.map[a], e.map[b]) != c) return false;
    return true;
}

std::optional<ForbiddenCopy> forbidden_copy(const EdgeColoredCompleteGraph& g,
                                            const Parameters& p, int threads) {
    if (g.palette() != p.k())
        throw std::invalid_argument("palette size " + std::to_string(g.palette()) +
                                    " does not match r+s+t = " + std::to_string(p.k()));
    const int k = p.k();
    auto scan = [&](int c) -> std::optional<ForbiddenCopy> {
        const Pattern target = target_for_color(p, c);
        if (auto e = find_mono_copy(g, pattern_graph(target), c))
            return ForbiddenCopy{c, target, std::move(*e)};
        return std::nullopt;
    };
    if (threads <= 1 || k <= 1) {
        for (int c = 1; c <= k; ++c)
            if (auto hit = scan(c)) return hit;
        return std::nullopt;
    }
    // fan out per color class, capped at `threads` workers; lowest color wins
    const int workers = std::min(threads, k);
    auto scan_stride = [&](int first) -> std::optional<ForbiddenCopy> {
        for (int c = first; c <= k; c += workers)
            if (auto hit = scan(c)) return hit;
        return std::nullopt;
    };
    std::vector<std::future<std::optional<ForbiddenCopy>>> jobs;
    jobs.reserve(workers);
    for (int w = 1; w <= workers; ++w)
        jobs.push_back(std::async(std::launch::async, scan_stride, w));
    std::optional<ForbiddenCopy> best;
    for (auto& job : jobs) {
        auto hit = job.get();
        if (hit && (!best || hit->color < best->color)) best = std::move(hit);
    }
    return best;
}

}  // namespace gallai
