// Immutable undirected weighted graph with a CSR adjacency index.
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace hopset {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Edge {
    Vertex u;
    Vertex v;
    double w;
};

struct Neighbor {
    Vertex to;
    double w;
};

// Canonical form: no self-loops, at most one edge per unordered pair (parallel
// edges collapsed to the minimum weight), endpoints stored u < v, edge list
// sorted by (u, v). Immutable after build(); safe for concurrent reads.
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Throws UsageError on negative or non-finite weights or out-of-range ids.
    static WeightedGraph build(Vertex n, std::vector<Edge> edges);

    Vertex num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const Edge> edges() const { return edges_; }

    std::span<const Neighbor> neighbors(Vertex u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }

    std::size_t dropped_self_loops() const { return dropped_self_loops_; }
    std::size_t collapsed_parallel_edges() const { return collapsed_parallel_; }

    // True when every weight is exactly 1.
    bool is_unit_weight() const;

    // Full rescan: adjacency index matches the edge list, both directions.
    bool consistent() const;

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adj_;
    std::size_t dropped_self_loops_ = 0;
    std::size_t collapsed_parallel_ = 0;
};

}  // namespace hopset
