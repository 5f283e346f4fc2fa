#include "hopset/graph.hpp"

#include <algorithm>
#include <cmath>

#include "hopset/errors.hpp"

namespace hopset {

WeightedGraph WeightedGraph::build(Vertex n, std::vector<Edge> edges) {
    WeightedGraph g;
    g.n_ = n;

    for (auto& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw UsageError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ") with n=" + std::to_string(n));
        }
        if (!(e.w >= 0.0) || !std::isfinite(e.w)) {
            throw UsageError("edge weight must be a finite nonnegative real, got " +
                             std::to_string(e.w));
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    });

    g.edges_.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u == e.v) {
            ++g.dropped_self_loops_;
            continue;
        }
        if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
            ++g.collapsed_parallel_;  // sorted by weight within a pair, first wins
            continue;
        }
        g.edges_.push_back(e);
    }

    std::vector<std::size_t> degree(n + 1, 0);
    for (const auto& e : g.edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (Vertex u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + degree[u];
    g.adj_.resize(g.offsets_[n]);

    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : g.edges_) {
        g.adj_[cursor[e.u]++] = {e.v, e.w};
        g.adj_[cursor[e.v]++] = {e.u, e.w};
    }
    return g;
}

bool WeightedGraph::is_unit_weight() const {
    for (const auto& e : edges_) {
        if (e.w != 1.0) return false;
    }
    return true;
}

bool WeightedGraph::consistent() const {
    if (offsets_.size() != static_cast<std::size_t>(n_) + 1) return false;
    if (adj_.size() != 2 * edges_.size()) return false;

    std::vector<std::size_t> seen(n_, 0);
    for (const auto& e : edges_) {
        if (e.u >= e.v || e.v >= n_) return false;
        bool uv = false, vu = false;
        for (const auto& nb : neighbors(e.u)) {
            if (nb.to == e.v && nb.w == e.w) uv = true;
        }
        for (const auto& nb : neighbors(e.v)) {
            if (nb.to == e.u && nb.w == e.w) vu = true;
        }
        if (!uv || !vu) return false;
        ++seen[e.u];
        ++seen[e.v];
    }
    for (Vertex u = 0; u < n_; ++u) {
        if (seen[u] != offsets_[u + 1] - offsets_[u]) return false;
    }
    return true;
}

}  // namespace hopset
