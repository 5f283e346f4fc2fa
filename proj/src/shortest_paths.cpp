#include "hopset/shortest_paths.hpp"

#include <queue>
#include <tuple>

#include "hopset/errors.hpp"

namespace hopset {

DistanceVector dijkstra(const WeightedGraph& g, std::span<const Vertex> sources) {
    if (sources.empty()) throw UsageError("dijkstra requires a nonempty source set");
    const Vertex n = g.num_vertices();

    DistanceVector out;
    out.sources.assign(sources.begin(), sources.end());
    out.dist.assign(n, kInf);
    out.parent.assign(n, kNoVertex);
    out.root.assign(n, kNoVertex);

    // Heap keys are (dist, root, vertex); the root component makes the
    // smallest-id source win exact distance ties deterministically.
    using Item = std::tuple<double, Vertex, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;

    for (Vertex s : sources) {
        if (s >= n) throw UsageError("dijkstra source out of range: " + std::to_string(s));
        if (0.0 < out.dist[s] || s < out.root[s]) {
            out.dist[s] = 0.0;
            out.root[s] = s;
            heap.emplace(0.0, s, s);
        }
    }

    while (!heap.empty()) {
        auto [d, r, u] = heap.top();
        heap.pop();
        if (d != out.dist[u] || r != out.root[u]) continue;  // stale entry
        for (const auto& nb : g.neighbors(u)) {
            const double nd = d + nb.w;
            if (nd < out.dist[nb.to] || (nd == out.dist[nb.to] && r < out.root[nb.to])) {
                out.dist[nb.to] = nd;
                out.root[nb.to] = r;
                out.parent[nb.to] = u;
                heap.emplace(nd, r, nb.to);
            }
        }
    }
    return out;
}

DistanceVector dijkstra(const WeightedGraph& g, Vertex source) {
    const Vertex sources[1] = {source};
    return dijkstra(g, std::span<const Vertex>(sources, 1));
}

std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g, std::size_t cap) {
    const Vertex n = g.num_vertices();
    if (n > cap) {
        throw CapacityError("all_pairs_distances refused: n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
    }

    std::vector<std::vector<double>> dist(n);
    const auto edges = g.edges();
    for (Vertex s = 0; s < n; ++s) {
        auto& row = dist[s];
        row.assign(n, kInf);
        row[s] = 0.0;
        // Rounds of full-edge relaxation until a fixpoint; at most n-1 rounds.
        for (Vertex round = 0; n > 0 && round < n - 1; ++round) {
            bool changed = false;
            for (const auto& e : edges) {
                if (row[e.u] + e.w < row[e.v]) {
                    row[e.v] = row[e.u] + e.w;
                    changed = true;
                }
                if (row[e.v] + e.w < row[e.u]) {
                    row[e.u] = row[e.v] + e.w;
                    changed = true;
                }
            }
            if (!changed) break;
        }
    }
    return dist;
}

}  // namespace hopset
