#include "hopset/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "hopset/errors.hpp"
#include "hopset/rng.hpp"

namespace hopset {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<Edge> path_edges(Vertex n) {
    std::vector<Edge> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return edges;
}

std::vector<Edge> grid_edges(Vertex n, Vertex rows, Vertex cols) {
    if (rows == 0 && cols == 0) {
        const auto side = static_cast<Vertex>(std::lround(std::sqrt(static_cast<double>(n))));
        if (static_cast<std::uint64_t>(side) * side != n) {
            throw UsageError("grid: n=" + std::to_string(n) +
                             " is not a perfect square; pass rows and cols");
        }
        rows = cols = side;
    }
    if (static_cast<std::uint64_t>(rows) * cols != n) {
        throw UsageError("grid: rows*cols must equal n");
    }
    std::vector<Edge> edges;
    edges.reserve(2ull * n);
    auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
    for (Vertex r = 0; r < rows; ++r) {
        for (Vertex c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
        }
    }
    return edges;
}

std::vector<Edge> erdos_renyi_edges(Vertex n, std::uint64_t m, std::mt19937_64& topo) {
    const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > max_m) {
        throw UsageError("erdos-renyi: m=" + std::to_string(m) + " exceeds n(n-1)/2=" +
                         std::to_string(max_m));
    }
    std::unordered_set<std::uint64_t> used;
    used.reserve(m * 2);
    std::vector<Edge> edges;
    edges.reserve(m);
    while (edges.size() < m) {
        const auto u = static_cast<Vertex>(rng::uniform_below(topo, n));
        const auto v = static_cast<Vertex>(rng::uniform_below(topo, n));
        if (u == v) continue;
        if (!used.insert(pair_key(u, v)).second) continue;
        edges.push_back({u, v, 1.0});
    }
    return edges;
}

std::vector<Edge> random_geometric_edges(Vertex n, double radius, std::mt19937_64& topo) {
    if (radius <= 0.0) {
        // Above the connectivity threshold for uniform points in the unit square.
        radius = 1.5 * std::sqrt(std::log(static_cast<double>(std::max<Vertex>(n, 2))) /
                                 (3.14159265358979323846 * n));
    }
    std::vector<double> x(n), y(n);
    for (Vertex i = 0; i < n; ++i) {
        x[i] = rng::uniform01(topo);
        y[i] = rng::uniform01(topo);
    }
    const double r2 = radius * radius;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            const double dx = x[i] - x[j];
            const double dy = y[i] - y[j];
            if (dx * dx + dy * dy <= r2) edges.push_back({i, j, 1.0});
        }
    }
    return edges;
}

}  // namespace

Family parse_family(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "grid") return Family::Grid;
    if (name == "erdos-renyi" || name == "er") return Family::ErdosRenyi;
    if (name == "random-geometric" || name == "rgg") return Family::RandomGeometric;
    throw UsageError("unknown graph family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Grid: return "grid";
        case Family::ErdosRenyi: return "erdos-renyi";
        case Family::RandomGeometric: return "random-geometric";
    }
    return "?";
}

WeightedGraph generate_graph(Family family, Vertex n, const FamilyParams& params,
                             const WeightDist& weights, std::uint64_t seed) {
    if (n < 1) throw UsageError("generate_graph requires n >= 1");
    if (weights.kind == WeightDist::Kind::Uniform &&
        (!(weights.lo >= 0.0) || weights.hi < weights.lo)) {
        throw UsageError("uniform weights require 0 <= lo <= hi");
    }

    auto topo = rng::make_stream(seed, rng::Stream::Topology);
    std::vector<Edge> edges;
    switch (family) {
        case Family::Path: edges = path_edges(n); break;
        case Family::Grid: edges = grid_edges(n, params.rows, params.cols); break;
        case Family::ErdosRenyi: edges = erdos_renyi_edges(n, params.m, topo); break;
        case Family::RandomGeometric:
            edges = random_geometric_edges(n, params.radius, topo);
            break;
    }

    // Weights are assigned in canonical edge order so they depend only on the
    // final topology, not on generation order.
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return pair_key(a.u, a.v) < pair_key(b.u, b.v);
    });
    if (weights.kind == WeightDist::Kind::Uniform) {
        auto wstream = rng::make_stream(seed, rng::Stream::Weights);
        for (auto& e : edges) e.w = rng::uniform_real(wstream, weights.lo, weights.hi);
    }
    return WeightedGraph::build(n, std::move(edges));
}

}  // namespace hopset
