// Exact shortest-path oracles: multi-source Dijkstra and an independent
// all-pairs routine used as a cross-check.
#pragma once

#include <span>
#include <vector>

#include "hopset/graph.hpp"

namespace hopset {

struct DistanceVector {
    std::vector<Vertex> sources;
    std::vector<double> dist;    // +inf where unreachable
    std::vector<Vertex> parent;  // kNoVertex at sources / unreachable
    std::vector<Vertex> root;    // winning source; kNoVertex if unreachable

    bool reachable(Vertex v) const { return dist[v] != kInf; }
};

// Multi-source Dijkstra: dist[v] = min over sources s of dist(s, v).
// Ties between equally distant sources resolve to the smallest source id,
// independent of heap order (lexicographic (dist, root) relaxation).
// Throws UsageError on an empty source set or out-of-range ids.
DistanceVector dijkstra(const WeightedGraph& g, std::span<const Vertex> sources);
DistanceVector dijkstra(const WeightedGraph& g, Vertex source);

// Brute-force all-pairs distances via per-source rounds of edge relaxation.
// Deliberately a different algorithm than dijkstra() so the two can serve as
// independent oracles for each other. Refuses n > cap with CapacityError.
std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g,
                                                     std::size_t cap = 2000);

}  // namespace hopset
