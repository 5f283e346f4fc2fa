// Hopset construction: per-level pivots, bunches, and the shortcut edge set
// with exact-distance weights.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hopset/graph.hpp"
#include "hopset/hierarchy.hpp"

namespace hopset {

// dist[i][v] = distance from v to the nearest level-i vertex, pivot[i][v] its
// id (smallest id among minimizers; kNoVertex when unreachable or V_i empty).
// Rows are indexed 1..k; row 0 is unused.
struct PivotTable {
    int k = 0;
    std::vector<std::vector<double>> dist;
    std::vector<std::vector<Vertex>> pivot;

    // Distance from v to V_{i+1}: +inf at i == k (the top level has no next
    // level) and wherever V_{i+1} is empty or unreachable.
    double threshold(int i, Vertex v) const {
        return i >= k ? kInf : dist[i + 1][v];
    }
};

// One multi-source Dijkstra per level fills each row.
PivotTable compute_pivots(const WeightedGraph& g, const LevelAssignment& levels);

// Bunch of a level-i vertex v: the level-i vertices strictly closer to v than
// v's nearest level-(i+1) vertex. Members carry their distance from the owner
// and include the owner itself whenever its pivot threshold is positive.
struct Bunch {
    Vertex owner;
    std::vector<std::pair<Vertex, double>> members;  // sorted by member id
};

enum class BunchMethod {
    Truncated,       // per-owner Dijkstra, stopped at the first next-level vertex
    ClusterGrowing,  // per-candidate pruned Dijkstra, inverted into bunches
};

// Bunches for every owner in V_i \ V_{i+1}, sorted by owner id. The two
// methods must produce identical member sets; the truncated form is the
// reference, cluster growing the inverted formulation. Per-owner searches are
// independent, so `threads` may fan them out; the merged result is identical
// for every thread count.
std::vector<Bunch> compute_bunches(const WeightedGraph& g, const LevelAssignment& levels,
                                   const PivotTable& pivots, int i,
                                   BunchMethod method = BunchMethod::Truncated, int threads = 1);

// A shortcut edge. The first endpoint is the vertex whose shortest-path search
// produced the weight, so a fresh Dijkstra from `u` reproduces `w` exactly.
struct HopsetEdge {
    Vertex u;
    Vertex v;
    double w;
    int level;
};

struct Hopset {
    Vertex n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::uint64_t graph_fingerprint = 0;
    std::vector<double> q;           // q_0..q_k snapshot
    std::vector<HopsetEdge> edges;   // sorted by (level, u, v); unique pairs per level

    std::size_t level_count(int i) const;
};

struct BuildResult {
    Hopset hopset;
    LevelAssignment levels;
    PivotTable pivots;
};

// Assigns levels from (n, k, seed), computes pivots, then emits per level the
// bunch edges plus one edge to the next-level pivot. Weights are exact
// shortest-path distances. Deterministic for fixed inputs, including across
// thread counts.
BuildResult build_hopset(const WeightedGraph& g, int k, std::uint64_t seed,
                         BunchMethod method = BunchMethod::Truncated, int threads = 1);

// Per-level counts against the expected-size expression
// n^(1 + 1/(2^(k+1)-1)) * 2^(-i+2).
struct LevelStat {
    int level;
    std::size_t count;
    double expected;
    double ratio;  // count / expected
};

struct SizeStats {
    std::vector<LevelStat> per_level;
    std::size_t total = 0;
    double base = 0.0;              // n^(1 + 1/(2^(k+1)-1))
    double normalized_total = 0.0;  // total / base
};

SizeStats size_stats(const Hopset& h, Vertex n, int k);

// `# hopset ...` header lines followed by `u v w i` rows; round-trip exact.
std::string serialize(const Hopset& h);
Hopset parse_hopset(const std::string& text);
void save_hopset(const Hopset& h, const std::string& path);
Hopset load_hopset(const std::string& path);

}  // namespace hopset
