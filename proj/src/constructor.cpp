#include "hopset/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <thread>
#include <tuple>

#include "hopset/errors.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

PivotTable compute_pivots(const WeightedGraph& g, const LevelAssignment& levels) {
    if (levels.n() != g.num_vertices()) {
        throw UsageError("level assignment does not match the graph's vertex count");
    }
    const Vertex n = g.num_vertices();
    PivotTable table;
    table.k = levels.k;
    table.dist.assign(levels.k + 1, {});
    table.pivot.assign(levels.k + 1, {});

    for (int i = 1; i <= levels.k; ++i) {
        auto& dist = table.dist[i];
        auto& pivot = table.pivot[i];
        if (levels.members[i].empty()) {
            dist.assign(n, kInf);
            pivot.assign(n, kNoVertex);
            continue;
        }
        const DistanceVector dv = dijkstra(g, levels.members[i]);
        dist = dv.dist;
        pivot = dv.root;  // smallest-id source among minimizers
    }
    return table;
}

namespace {

using HeapItem = std::pair<double, Vertex>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>>;

// Runs fn(chunk_index, begin, end) over [0, count) split into contiguous
// chunks, one per worker. Workers share nothing; callers merge by index, so
// the outcome is independent of the thread count.
template <typename Fn>
void parallel_chunks(std::size_t count, int threads, Fn fn) {
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count ? count : 1)));
    if (workers == 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : pool) t.join();
}

// Dijkstra from `owner`, stopped at the first settled vertex of level >= stop_level.
// Returns the settled (vertex, dist) pairs with dist strictly below the stop
// distance, i.e. exactly the vertices closer to the owner than its next-level
// pivot. Every distance is a from-owner sum, matching what a full Dijkstra
// from the owner would compute.
std::vector<std::pair<Vertex, double>> truncated_search(const WeightedGraph& g,
                                                        const LevelAssignment& levels,
                                                        Vertex owner, int stop_level,
                                                        std::vector<double>& dist,
                                                        std::vector<Vertex>& touched) {
    MinHeap heap;
    dist[owner] = 0.0;
    touched.push_back(owner);
    heap.emplace(0.0, owner);

    std::vector<std::pair<Vertex, double>> settled;
    double stop_dist = kInf;
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[u]) continue;
        if (stop_level <= levels.k && levels.level[u] >= stop_level) {
            stop_dist = d;
            break;
        }
        settled.emplace_back(u, d);
        for (const auto& nb : g.neighbors(u)) {
            const double nd = d + nb.w;
            if (nd < dist[nb.to]) {
                if (dist[nb.to] == kInf) touched.push_back(nb.to);
                dist[nb.to] = nd;
                heap.emplace(nd, nb.to);
            }
        }
    }
    // Vertices settled at exactly the stop distance are not strictly closer.
    std::erase_if(settled, [stop_dist](const auto& p) { return !(p.second < stop_dist); });

    for (Vertex v : touched) dist[v] = kInf;
    touched.clear();
    return settled;
}

std::vector<Vertex> level_owners(const LevelAssignment& levels, int i) {
    std::vector<Vertex> owners;
    for (Vertex v : levels.members[i]) {
        if (levels.level[v] == i) owners.push_back(v);  // owners are V_i \ V_{i+1}
    }
    return owners;
}

std::vector<Bunch> bunches_truncated(const WeightedGraph& g, const LevelAssignment& levels,
                                     int i, int threads) {
    const auto owners = level_owners(levels, i);
    std::vector<Bunch> out(owners.size());
    parallel_chunks(owners.size(), threads, [&](int, std::size_t begin, std::size_t end) {
        std::vector<double> dist(g.num_vertices(), kInf);
        std::vector<Vertex> touched;
        for (std::size_t idx = begin; idx < end; ++idx) {
            Bunch& b = out[idx];
            b.owner = owners[idx];
            for (const auto& [u, d] : truncated_search(g, levels, b.owner, i + 1, dist, touched)) {
                if (levels.level[u] >= i) b.members.emplace_back(u, d);
            }
            std::sort(b.members.begin(), b.members.end());
        }
    });
    return out;
}

// Pruned Dijkstra from a bunch candidate w: grow only through vertices whose
// next-level pivot is strictly farther than w. Membership of any vertex on a
// shortest path is implied by membership of its endpoint, so pruning is exact.
std::vector<Bunch> bunches_cluster(const WeightedGraph& g, const LevelAssignment& levels,
                                   const PivotTable& pivots, int i, int threads) {
    const Vertex n = g.num_vertices();
    const auto centers = level_owners(levels, i);  // next-level centers grow empty clusters

    // (owner, center, dist-from-center) hits, gathered per worker then
    // scattered; member sets get sorted, so the gather order is irrelevant.
    const int workers = std::max(1, threads);
    std::vector<std::vector<std::tuple<Vertex, Vertex, double>>> hits(workers);
    parallel_chunks(centers.size(), workers, [&](int wi, std::size_t begin, std::size_t end) {
        std::vector<double> dist(n, kInf);
        std::vector<Vertex> touched;
        auto& local = hits[wi];
        for (std::size_t idx = begin; idx < end; ++idx) {
            const Vertex w = centers[idx];
            MinHeap heap;
            dist[w] = 0.0;
            touched.push_back(w);
            heap.emplace(0.0, w);
            while (!heap.empty()) {
                auto [d, v] = heap.top();
                heap.pop();
                if (d != dist[v]) continue;
                if (!(d < pivots.threshold(i, v))) continue;  // prune: v keeps w out of its bunch
                if (levels.level[v] == i) local.emplace_back(v, w, d);
                for (const auto& nb : g.neighbors(v)) {
                    const double nd = d + nb.w;
                    if (nd < dist[nb.to]) {
                        if (dist[nb.to] == kInf) touched.push_back(nb.to);
                        dist[nb.to] = nd;
                        heap.emplace(nd, nb.to);
                    }
                }
            }
            for (Vertex v : touched) dist[v] = kInf;
            touched.clear();
        }
    });

    std::vector<std::vector<std::pair<Vertex, double>>> inverted(n);
    for (const auto& worker_hits : hits) {
        for (const auto& [owner, center, d] : worker_hits) {
            inverted[owner].emplace_back(center, d);
        }
    }

    std::vector<Bunch> out(centers.size());
    for (std::size_t idx = 0; idx < centers.size(); ++idx) {
        Bunch& b = out[idx];
        b.owner = centers[idx];
        b.members = std::move(inverted[b.owner]);
        std::sort(b.members.begin(), b.members.end());
    }
    return out;
}

}  // namespace

std::vector<Bunch> compute_bunches(const WeightedGraph& g, const LevelAssignment& levels,
                                   const PivotTable& pivots, int i, BunchMethod method,
                                   int threads) {
    if (i < 0 || i > levels.k) throw UsageError("compute_bunches: level out of range");
    if (levels.n() != g.num_vertices()) {
        throw UsageError("level assignment does not match the graph's vertex count");
    }
    return method == BunchMethod::Truncated ? bunches_truncated(g, levels, i, threads)
                                            : bunches_cluster(g, levels, pivots, i, threads);
}

namespace {

// Deduplicates the unordered pairs within one level. When both orientations
// are present, the one with the smaller first endpoint wins.
void append_level_edges(std::vector<HopsetEdge>& out, std::vector<HopsetEdge> level_edges) {
    auto pair_key = [](const HopsetEdge& e) {
        return std::pair<Vertex, Vertex>{std::min(e.u, e.v), std::max(e.u, e.v)};
    };
    std::sort(level_edges.begin(), level_edges.end(),
              [&](const HopsetEdge& a, const HopsetEdge& b) {
                  const auto ka = pair_key(a);
                  const auto kb = pair_key(b);
                  if (ka != kb) return ka < kb;
                  return a.u < b.u;
              });
    std::pair<Vertex, Vertex> prev_key{kNoVertex, kNoVertex};
    for (const auto& e : level_edges) {
        const auto key = pair_key(e);
        if (key == prev_key) continue;
        out.push_back(e);
        prev_key = key;
    }
}

}  // namespace

BuildResult build_hopset(const WeightedGraph& g, int k, std::uint64_t seed,
                         BunchMethod method, int threads) {
    if (k < 1) throw UsageError("build_hopset requires k >= 1");
    if (g.num_vertices() == 0) throw UsageError("build_hopset requires a nonempty graph");

    BuildResult result;
    const Vertex n = g.num_vertices();
    if (n == 1) {
        // No pairs, no hopset; still record the parameter snapshot.
        result.levels.k = k;
        result.levels.seed = seed;
        result.levels.level.assign(1, 0);
        result.levels.members.assign(k + 1, {});
        result.levels.members[0] = {0};
        result.pivots.k = k;
        result.pivots.dist.assign(k + 1, std::vector<double>(1, kInf));
        result.pivots.pivot.assign(k + 1, std::vector<Vertex>(1, kNoVertex));
    } else {
        result.levels = assign_levels(n, k, seed);
        result.pivots = compute_pivots(g, result.levels);
    }

    Hopset& h = result.hopset;
    h.n = n;
    h.k = k;
    h.seed = seed;
    h.graph_fingerprint = fingerprint(g);
    h.q.resize(k + 1);
    for (int i = 0; i <= k; ++i) {
        h.q[i] = n >= 2 ? sampling_probability(i, k, n) : 1.0;
    }
    if (n == 1) return result;

    for (int i = 0; i <= k; ++i) {
        std::vector<HopsetEdge> level_edges;
        for (const auto& bunch :
             compute_bunches(g, result.levels, result.pivots, i, method, threads)) {
            for (const auto& [u, d] : bunch.members) {
                if (u == bunch.owner) continue;
                // Cluster growing knows distances from the member (the summation
                // source), the truncated search from the owner; orient accordingly.
                if (method == BunchMethod::ClusterGrowing) {
                    level_edges.push_back({u, bunch.owner, d, i});
                } else {
                    level_edges.push_back({bunch.owner, u, d, i});
                }
            }
            if (i < k) {
                const Vertex p = result.pivots.pivot[i + 1][bunch.owner];
                if (p != kNoVertex) {
                    level_edges.push_back({p, bunch.owner, result.pivots.dist[i + 1][bunch.owner], i});
                }
            }
        }
        append_level_edges(h.edges, std::move(level_edges));
    }

    std::sort(h.edges.begin(), h.edges.end(), [](const HopsetEdge& a, const HopsetEdge& b) {
        if (a.level != b.level) return a.level < b.level;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    return result;
}

std::size_t Hopset::level_count(int i) const {
    std::size_t c = 0;
    for (const auto& e : edges) c += (e.level == i);
    return c;
}

SizeStats size_stats(const Hopset& h, Vertex n, int k) {
    if (h.n != n || h.k != k) {
        throw UsageError("size_stats: hopset was built with different (n, k)");
    }
    SizeStats stats;
    stats.base = std::pow(static_cast<double>(n), 1.0 + 1.0 / (std::ldexp(1.0, k + 1) - 1.0));
    std::vector<std::size_t> counts(k + 1, 0);
    for (const auto& e : h.edges) ++counts[e.level];
    for (int i = 0; i <= k; ++i) {
        LevelStat s;
        s.level = i;
        s.count = counts[i];
        s.expected = stats.base * std::exp2(static_cast<double>(-i + 2));
        s.ratio = s.expected > 0 ? static_cast<double>(s.count) / s.expected : 0.0;
        stats.per_level.push_back(s);
        stats.total += counts[i];
    }
    stats.normalized_total = static_cast<double>(stats.total) / stats.base;
    return stats;
}

std::string serialize(const Hopset& h) {
    char fp[32];
    std::snprintf(fp, sizeof(fp), "%016llx", static_cast<unsigned long long>(h.graph_fingerprint));
    std::string out = "# hopset n=" + std::to_string(h.n) + " k=" + std::to_string(h.k) +
                      " seed=" + std::to_string(h.seed) + "\n# fingerprint " + fp + "\n# q";
    for (double qi : h.q) {
        out += ' ';
        out += format_double(qi);
    }
    out += '\n';
    for (const auto& e : h.edges) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += ' ';
        out += format_double(e.w);
        out += ' ';
        out += std::to_string(e.level);
        out += '\n';
    }
    return out;
}

Hopset parse_hopset(const std::string& text) {
    Hopset h;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok)) continue;
        if (tok == "#") {
            std::string kind;
            if (!(ss >> kind)) continue;
            if (kind == "hopset") {
                std::string field;
                while (ss >> field) {
                    const auto eq = field.find('=');
                    if (eq == std::string::npos) continue;
                    const std::string key = field.substr(0, eq);
                    const std::string value = field.substr(eq + 1);
                    if (key == "n") h.n = static_cast<Vertex>(std::stoull(value));
                    else if (key == "k") h.k = std::stoi(value);
                    else if (key == "seed") h.seed = std::stoull(value);
                }
                have_header = true;
            } else if (kind == "fingerprint") {
                std::string hex;
                if (!(ss >> hex)) throw ParseError("missing fingerprint value", line_no);
                h.graph_fingerprint = std::stoull(hex, nullptr, 16);
            } else if (kind == "q") {
                std::string value;
                while (ss >> value) h.q.push_back(parse_double(value));
            }
            continue;
        }
        HopsetEdge e;
        std::string su = tok, sv, sw, sl;
        if (!(ss >> sv >> sw >> sl)) throw ParseError("expected 'u v w i'", line_no);
        try {
            e.u = static_cast<Vertex>(std::stoull(su));
            e.v = static_cast<Vertex>(std::stoull(sv));
            e.w = parse_double(sw);
            e.level = std::stoi(sl);
        } catch (const std::exception&) {
            throw ParseError("malformed hopset edge", line_no);
        }
        if (std::string extra; ss >> extra) throw ParseError("trailing fields", line_no);
        h.edges.push_back(e);
    }
    if (!have_header) throw ParseError("missing '# hopset' header");
    if (!h.q.empty() && h.q.size() != static_cast<std::size_t>(h.k) + 1) {
        throw ParseError("probability header does not match k");
    }
    for (const auto& e : h.edges) {
        if (e.u >= h.n || e.v >= h.n || e.level < 0 || e.level > h.k || !(e.w >= 0)) {
            throw ParseError("hopset edge out of range");
        }
    }
    return h;
}

void save_hopset(const Hopset& h, const std::string& path) {
    write_file(path, serialize(h));
}

Hopset load_hopset(const std::string& path) {
    return parse_hopset(read_file(path));
}

}  // namespace hopset
