#include "gallai/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gallai/detect.hpp"

namespace gallai {

namespace {

constexpr int kMaxSearchOrder = 64;  // bitmask rows are single words

using Row = std::uint64_t;

int popcount(Row w) { return __builtin_popcountll(w); }

// 2-colored partial K_n on <= 64 vertices. Color index 0/1 internally.
struct TwoColoring {
    int n = 0;
    std::array<std::vector<Row>, 2> adj;

    explicit TwoColoring(int n_) : n(n_) {
        adj[0].assign(n, 0);
        adj[1].assign(n, 0);
    }
    void set(int c, int u, int v) {
        adj[c][u] |= Row{1} << v;
        adj[c][v] |= Row{1} << u;
    }
    void clear(int c, int u, int v) {
        adj[c][u] &= ~(Row{1} << v);
        adj[c][v] &= ~(Row{1} << u);
    }
};

// Does the c-colored graph contain a copy of `p` using edge (u, v)?
// Incremental checks: every copy through a fresh edge is reachable from one
// of a handful of local roles, so only neighborhoods of u and v are scanned.
bool completes_copy(const TwoColoring& g, Pattern p, int c, int u, int v) {
    const std::vector<Row>& adj = g.adj[c];
    const Row nu = adj[u], nv = adj[v];
    switch (p) {
        case Pattern::K3:
            return (nu & nv) != 0;
        case Pattern::S3:
            // star center must be u or v
            return popcount(nu) >= 3 || popcount(nv) >= 3;
        case Pattern::S3plus: {
            // (u,v) inside the triangle: any triangle vertex with a fourth
            // neighbor serves as center
            for (Row w = nu & nv; w; w &= w - 1) {
                const int wv = __builtin_ctzll(w);
                if (popcount(nu) >= 3 || popcount(nv) >= 3 || popcount(adj[wv]) >= 3)
                    return true;
            }
            // (u,v) as the pendant edge: u in a triangle avoiding v, or
            // v in a triangle avoiding u
            for (int roleu = 0; roleu < 2; ++roleu) {
                const int x = roleu ? v : u, y = roleu ? u : v;
                Row t = adj[x] & ~(Row{1} << y);
                for (Row m = t; m; m &= m - 1) {
                    const int a = __builtin_ctzll(m);
                    if (adj[a] & t & ~(Row{1} << a)) return true;
                }
            }
            return false;
        }
        case Pattern::B3:
        case Pattern::B3plus:
        case Pattern::K4: {
            const int need = p == Pattern::K4 ? 2 : 3;
            const bool page_edge = p != Pattern::B3;
            // candidate spines: edges incident to u or v, plus (for the
            // page-page role) c-edges inside the common neighborhood of u,v
            auto spine_ok = [&](int x, int y) {
                const Row w = adj[x] & adj[y];
                if (popcount(w) < need) return false;
                if (!page_edge) return true;
                for (Row m = w; m; m &= m - 1)
                    if (adj[__builtin_ctzll(m)] & w) return true;
                return false;
            };
            for (Row m = nu; m; m &= m - 1)
                if (spine_ok(u, __builtin_ctzll(m))) return true;
            for (Row m = nv; m; m &= m - 1) {
                const int y = __builtin_ctzll(m);
                if (y != u && spine_ok(v, y)) return true;
            }
            if (page_edge) {
                const Row common = nu & nv;
                for (Row m = common; m; m &= m - 1) {
                    const int a = __builtin_ctzll(m);
                    for (Row m2 = adj[a] & common; m2; m2 &= m2 - 1)
                        if (spine_ok(a, __builtin_ctzll(m2))) return true;
                }
            }
            return false;
        }
    }
    return false;
}

EdgeColoredCompleteGraph to_graph(const TwoColoring& g) {
    std::vector<int> upper;
    upper.reserve(g.n * (g.n - 1) / 2);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            upper.push_back((g.adj[0][u] >> v) & 1 ? 1 : 2);
    return EdgeColoredCompleteGraph(g.n, 2, std::move(upper));
}

bool verify_two_coloring(const EdgeColoredCompleteGraph& g,
                         const std::vector<Pattern>& forbid1,
                         const std::vector<Pattern>& forbid2) {
    for (Pattern p : forbid1)
        if (find_mono_copy(g, pattern_graph(p), 1)) return false;
    for (Pattern p : forbid2)
        if (find_mono_copy(g, pattern_graph(p), 2)) return false;
    return true;
}

class Deadline {
public:
    explicit Deadline(double seconds)
        : enabled_(std::isfinite(seconds)),
          end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(enabled_ ? seconds : 0))) {}
    bool expired() const { return enabled_ && std::chrono::steady_clock::now() >= end_; }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point end_;
};

// ---------------------------------------------------------------------------
// Exhaustive DFS

struct Dfs {
    int n;
    std::vector<Pattern> forbid[2];
    bool color_swap_symmetric;
    std::vector<std::pair<int, int>> edges;  // vertex-incremental order
    std::vector<int> relabel;                // identity unless diagnostics ask
    TwoColoring g;
    std::uint64_t nodes = 0;
    std::uint64_t max_nodes;
    Deadline deadline;
    bool out_of_budget = false;

    Dfs(int n_, std::vector<Pattern> f1, std::vector<Pattern> f2, const SearchBudget& b,
        std::vector<int> order)
        : n(n_),
          relabel(std::move(order)),
          g(n_),
          max_nodes(b.max_nodes),
          deadline(b.time_limit_s) {
        forbid[0] = std::move(f1);
        forbid[1] = std::move(f2);
        color_swap_symmetric = forbid[0] == forbid[1];
        relabel_is_identity = true;
        for (int i = 0; i < n; ++i)
            if (relabel[i] != i) relabel_is_identity = false;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    }

    int color_at(int u, int v) const {  // complete prefix only
        return (g.adj[0][u] >> v) & 1 ? 0 : 1;
    }

    // Lex-min test of the fully colored prefix on p <= 6 vertices, over all
    // vertex permutations (and the color swap when both sides forbid the same
    // patterns). Non-minimal prefixes are pruned: every completed coloring is
    // isomorphic to one whose prefixes all survive.
    bool prefix_canonical(int p) const {
        std::array<int, 6> perm{};
        std::iota(perm.begin(), perm.end(), 0);
        const int swaps = color_swap_symmetric ? 2 : 1;
        do {
            for (int sw = 0; sw < swaps; ++sw) {
                // compare the relabeled prefix against the current one,
                // edge by edge in search order
                for (int v = 1; v < p; ++v)
                    for (int u = 0; u < v; ++u) {
                        const int base = color_at(u, v);
                        int img = color_at(std::min(perm[u], perm[v]),
                                           std::max(perm[u], perm[v]));
                        if (sw) img ^= 1;
                        if (img != base) {
                            if (img < base) return false;  // smaller relabeling exists
                            goto next_variant;
                        }
                    }
            next_variant:;
            }
        } while (std::next_permutation(perm.begin(), perm.begin() + p));
        return true;
    }

    bool budget_ok() {
        if (++nodes > max_nodes || (nodes % 4096 == 0 && deadline.expired())) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    bool run(std::size_t depth) {  // true = witness completed
        if (depth == edges.size()) return true;
        if (!budget_ok()) return false;
        const auto [pu, pv] = edges[depth];
        const int u = relabel[pu], v = relabel[pv];
        for (int c = 0; c < 2; ++c) {
            g.set(c, u, v);
            bool ok = true;
            for (Pattern p : forbid[c])
                if (completes_copy(g, p, c, u, v)) {
                    ok = false;
                    break;
                }
            // isomorph rejection when this edge completes the prefix K_p;
            // only meaningful for the identity labeling
            if (ok && relabel_is_identity && pu == pv - 1 && pv + 1 <= 6)
                ok = prefix_canonical(pv + 1);
            if (ok && run(depth + 1)) return true;
            g.clear(c, u, v);
            if (out_of_budget) return false;
        }
        return false;
    }

    bool relabel_is_identity = true;
};

SearchResult dfs_search(int n, std::vector<Pattern> forbid1, std::vector<Pattern> forbid2,
                        const SearchBudget& budget, std::vector<int> order) {
    if (n < 1 || n > kMaxSearchOrder)
        throw std::invalid_argument("witness search supports 1 <= n <= 64");
    Dfs dfs(n, std::move(forbid1), std::move(forbid2), budget, std::move(order));
    if (dfs.run(0)) {
        auto g = to_graph(dfs.g);
        if (!verify_two_coloring(g, dfs.forbid[0], dfs.forbid[1]))
            throw std::logic_error("search returned a coloring that fails re-verification");
        return {SearchStatus::Found, std::move(g), dfs.nodes};
    }
    if (dfs.out_of_budget) return {SearchStatus::BudgetExhausted, std::nullopt, dfs.nodes};
    return {SearchStatus::ExhaustiveNone, std::nullopt, dfs.nodes};
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

// ---------------------------------------------------------------------------
// Min-conflicts local search

struct LocalSearch {
    int n;
    std::vector<Pattern> forbid[2];
    TwoColoring g;
    std::vector<std::pair<int, int>> edges;
    std::mt19937_64 rng;

    LocalSearch(int n_, std::vector<Pattern> f1, std::vector<Pattern> f2, std::uint64_t seed)
        : n(n_), g(n_), rng(seed) {
        forbid[0] = std::move(f1);
        forbid[1] = std::move(f2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }

    // Conflict count: one unit per (color, local witness site). Zero iff no
    // forbidden copy exists in either color.
    int cost(std::vector<int>* conflict_edges = nullptr) {
        if (conflict_edges) conflict_edges->clear();
        int total = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [u, v] = edges[e];
            const int c = (g.adj[0][u] >> v) & 1 ? 0 : 1;
            bool bad = false;
            for (Pattern p : forbid[c])
                if (edge_in_copy(p, c, u, v)) {
                    bad = true;
                    break;
                }
            if (bad) {
                ++total;
                if (conflict_edges) conflict_edges->push_back(static_cast<int>(e));
            }
        }
        return total;
    }

    // Is (u, v) part of some copy of p in color c? Same local roles as the
    // DFS pruning check.
    bool edge_in_copy(Pattern p, int c, int u, int v) { return completes_copy(g, p, c, u, v); }

    void randomize() {
        for (const auto& [u, v] : edges) {
            g.clear(0, u, v);
            g.clear(1, u, v);
            g.set(static_cast<int>(rng() & 1), u, v);
        }
    }

    void load(const EdgeColoredCompleteGraph& start) {
        for (const auto& [u, v] : edges) {
            g.clear(0, u, v);
            g.clear(1, u, v);
            g.set(start.color(u, v) - 1, u, v);
        }
    }

    void flip(int e) {
        const auto [u, v] = edges[e];
        const int c = (g.adj[0][u] >> v) & 1 ? 0 : 1;
        g.clear(c, u, v);
        g.set(c ^ 1, u, v);
    }
};

}  // namespace

SearchResult witness_search(Pattern a, Pattern b, int n, const SearchBudget& budget) {
    const int lo = std::max(pattern_graph(a).order, pattern_graph(b).order);
    if (n < lo)
        throw std::invalid_argument("order below both pattern orders");
    return dfs_search(n, {a}, {b}, budget, identity_order(n));
}

SearchResult witness_search_with_order(Pattern a, Pattern b, int n, const SearchBudget& budget,
                                       const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("relabeling must cover all vertices");
    std::vector<bool> seen(n, false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("relabeling is not a permutation");
        seen[v] = true;
    }
    return dfs_search(n, {a}, {b}, budget, order);
}

RamseyResult compute_ramsey(Pattern a, Pattern b, int n_max, const SearchBudget& budget) {
    const int lo = std::max(pattern_graph(a).order, pattern_graph(b).order);
    if (n_max < 3) throw std::invalid_argument("n_max must be >= 3");
    RamseyResult out;
    std::optional<EdgeColoredCompleteGraph> prev_witness;
    const auto start = std::chrono::steady_clock::now();
    for (int n = lo; n <= n_max; ++n) {
        SearchBudget step = budget;  // node budget applies per order
        if (std::isfinite(budget.time_limit_s)) {
            const double spent =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            step.time_limit_s = budget.time_limit_s - spent;
            if (step.time_limit_s <= 0) {
                out.last_status = SearchStatus::BudgetExhausted;
                return out;
            }
        }
        SearchResult r = witness_search(a, b, n, step);
        out.nodes += r.nodes;
        out.last_status = r.status;
        if (r.status == SearchStatus::Found) {
            prev_witness = std::move(r.witness);
            continue;
        }
        if (r.status == SearchStatus::ExhaustiveNone) {
            if (n > lo) {
                if (!prev_witness || !verify_two_coloring(*prev_witness, {a}, {b}))
                    throw std::logic_error("missing or invalid witness one below the bound");
            }
            out.value = n;
            return out;
        }
        return out;  // budget exhausted: inconclusive
    }
    return out;  // no exhaustive-none up to n_max: inconclusive
}

SearchResult local_search_witness(Pattern a, Pattern b, int n, const SearchBudget& budget,
                                  const EdgeColoredCompleteGraph* start) {
    const int lo = std::max(pattern_graph(a).order, pattern_graph(b).order);
    if (n < lo) throw std::invalid_argument("order below both pattern orders");
    if (n > kMaxSearchOrder) throw std::invalid_argument("local search supports n <= 64");
    if (start && start->order() != n)
        throw std::invalid_argument("start coloring has the wrong order");

    LocalSearch ls(n, {a}, {b}, budget.seed);
    const Deadline deadline(budget.time_limit_s);
    std::uint64_t steps = 0;
    const int restart_after = 40 * static_cast<int>(ls.edges.size());

    bool first = true;
    while (true) {
        if (first && start)
            ls.load(*start);
        else
            ls.randomize();
        first = false;

        std::vector<int> conflicts;
        int cur = ls.cost(&conflicts);
        int since_improvement = 0;
        while (cur > 0 && since_improvement < restart_after) {
            if (++steps > budget.max_nodes || (steps % 256 == 0 && deadline.expired()))
                return {SearchStatus::BudgetExhausted, std::nullopt, steps};
            const int e = conflicts[ls.rng() % conflicts.size()];
            ls.flip(e);
            const int next = ls.cost(&conflicts);
            // accept lateral and improving moves; occasionally keep a bad one
            if (next <= cur || ls.rng() % 100 < 4) {
                since_improvement = next < cur ? 0 : since_improvement + 1;
                cur = next;
            } else {
                ls.flip(e);
                cur = ls.cost(&conflicts);
                ++since_improvement;
            }
        }
        if (cur == 0) {
            auto g = to_graph(ls.g);
            if (!verify_two_coloring(g, {a}, {b}))
                throw std::logic_error("local search returned a coloring that fails re-verification");
            return {SearchStatus::Found, std::move(g), steps};
        }
        if (steps > budget.max_nodes || deadline.expired())
            return {SearchStatus::BudgetExhausted, std::nullopt, steps};
    }
}

}  // namespace gallai
