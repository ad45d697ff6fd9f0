#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "gallai/detect.hpp"
#include "gallai/formula.hpp"
#include "gallai/graph.hpp"
#include "gallai/patterns.hpp"

namespace gallai {

/// Witness mining gave up within its budget; says nothing about existence.
struct TimeoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 2-colored complete graph of order R(avoid_color1, avoid_color2) - 1 with
/// no copy of avoid_color1 in color 1 and none of avoid_color2 in color 2.
struct SharpnessExample {
    EdgeColoredCompleteGraph graph;
    Pattern avoid_color1;
    Pattern avoid_color2;
};

/// Injective map from an outer graph's colors into global palette positions.
struct ColorRouting {
    std::map<int, int> map;
};

// Substitution product: each vertex of the 2-colored outer graph becomes a
// copy of inner, and every cross pair between blocks u, v is uniformly
// colored routing.map[outer color of (u, v)]. Routed colors must not appear
// on any inner edge.
EdgeColoredCompleteGraph blow_up(const EdgeColoredCompleteGraph& outer,
                                 const EdgeColoredCompleteGraph& inner,
                                 const ColorRouting& routing);

/// Directory of mined sharpness witnesses in .gcol format, keyed by the
/// ordered pattern pair. Entries re-verify fully on load; anything invalid is
/// treated as a miss and regenerated.
class QCache {
public:
    explicit QCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const std::string& key) const;

    std::optional<EdgeColoredCompleteGraph> load(const std::string& key) const;
    void store(const std::string& key, const EdgeColoredCompleteGraph& g) const;

private:
    std::filesystem::path dir_;
};

// GALLAI_CACHE if set, else ./qcache.
std::filesystem::path default_cache_dir();

// 2-coloring of K_p (p prime, p = 1 mod 4): color 1 where the vertex
// difference is a nonzero quadratic residue mod p. Self-complementary; the
// p = 17 instance is the classical K4-free coloring.
EdgeColoredCompleteGraph quadratic_residue_coloring(int p);

// Certified sharpness example for a Lemma-table pair, from the cache when a
// valid entry exists, else mined (exhaustive DFS through order 9; seeded
// min-conflicts from the quadratic-residue coloring for the order-17 pair)
// and re-verified before caching. Sides that avoid B3plus are additionally
// chosen K4-free so the witness stays forbidden-copy-free under blow-ups.
SharpnessExample find_sharpness(Pattern a, Pattern b, const QCache& cache);

// The recursion base for condition_label(p), on the global palette of p;
// consumes the lowest-index colors of each role the ledger names.
EdgeColoredCompleteGraph base_graph(const Parameters& p, const QCache& cache);

// Gallai k-coloring of order f(p) with no forbidden copy, built from the
// base by one blow-up per remaining color pair (first-r pairs on the
// order-17 witness, then middle-s and last-t pairs on the order-5 witness,
// ascending positions). Order, Gallai-ness and copy-freeness are checked
// before returning; a failure throws std::logic_error.
EdgeColoredCompleteGraph construct_lower_bound(const Parameters& p, const QCache& cache);

struct ConstructionCertificate {
    bool order_ok = false;
    bool gallai_ok = false;
    bool avoid_ok = false;
    std::int64_t expected_order = 0;
    std::int64_t actual_order = 0;
    std::string detail;  // first violation, when any field is false

    bool all_ok() const { return order_ok && gallai_ok && avoid_ok; }
};

ConstructionCertificate verify_construction(const EdgeColoredCompleteGraph& g,
                                            const Parameters& p, int threads = 1);

}  // namespace gallai
