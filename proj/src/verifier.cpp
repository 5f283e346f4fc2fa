#include "hopset/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "hopset/errors.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/rng.hpp"
#include "hopset/shortest_paths.hpp"

namespace hopset {

namespace {

// G union H as a flat edge list, per-pair deduplicated to the minimum weight.
// Hopset levels are irrelevant here.
std::vector<Edge> union_edges(const WeightedGraph& g, const Hopset& h) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.reserve(edges.size() + h.edges.size());
    for (const auto& e : h.edges) {
        Edge u{e.u, e.v, e.w};
        if (u.u > u.v) std::swap(u.u, u.v);
        edges.push_back(u);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    });
    std::vector<Edge> dedup;
    dedup.reserve(edges.size());
    for (const auto& e : edges) {
        if (!dedup.empty() && dedup.back().u == e.u && dedup.back().v == e.v) continue;
        dedup.push_back(e);
    }
    return dedup;
}

// Synchronous relaxation: round t+1 reads only round t's labels, so after t
// rounds dist[v] is exactly the shortest length among paths with at most t
// edges. Once a round changes nothing, every later round is identical and the
// sweep can stop.
std::vector<double> bounded_hop_sweep(const std::vector<Edge>& edges, Vertex n, Vertex source,
                                      std::int64_t beta) {
    std::vector<double> cur(n, kInf);
    cur[source] = 0.0;
    std::vector<double> next;
    for (std::int64_t t = 0; t < beta; ++t) {
        next = cur;
        bool changed = false;
        for (const auto& e : edges) {
            const double via_u = cur[e.u] + e.w;
            if (via_u < next[e.v]) {
                next[e.v] = via_u;
                changed = true;
            }
            const double via_v = cur[e.v] + e.w;
            if (via_v < next[e.u]) {
                next[e.u] = via_v;
                changed = true;
            }
        }
        if (!changed) break;
        cur.swap(next);
    }
    return cur;
}

void check_compatibility(const WeightedGraph& g, const Hopset& h) {
    if (h.n != g.num_vertices()) {
        throw UsageError("hopset vertex count does not match the graph");
    }
    if (h.graph_fingerprint != fingerprint(g)) {
        throw FingerprintMismatch("hopset was built from a different graph (fingerprint mismatch)");
    }
}

// Sampled (source -> targets) map. Pairs share sources so each source needs
// only one exact search and one bounded-hop sweep.
std::map<Vertex, std::vector<Vertex>> sample_pairs(const WeightedGraph& g,
                                                   const PairSamplingSpec& spec) {
    const Vertex n = g.num_vertices();
    std::map<Vertex, std::vector<Vertex>> by_source;
    if (n < 2 || spec.num_pairs == 0) return by_source;

    auto stream = rng::make_stream(spec.seed, rng::Stream::PairSampling);
    const std::size_t sources = std::max<std::size_t>(1, std::min(spec.num_sources, spec.num_pairs));
    const std::size_t per_source = (spec.num_pairs + sources - 1) / sources;

    std::set<std::pair<Vertex, Vertex>> used;
    std::size_t total = 0;
    for (std::size_t s = 0; s < sources && total < spec.num_pairs; ++s) {
        const auto u = static_cast<Vertex>(rng::uniform_below(stream, n));
        std::vector<Vertex> targets;

        if (spec.mode == PairSamplingSpec::Mode::DistanceStratified) {
            // Bucket reachable targets by distance decile, then draw round-robin
            // so long-range pairs are always represented.
            const DistanceVector dv = dijkstra(g, u);
            std::vector<std::pair<double, Vertex>> reach;
            for (Vertex v = 0; v < n; ++v) {
                if (v != u && dv.reachable(v)) reach.emplace_back(dv.dist[v], v);
            }
            if (reach.empty()) continue;
            std::sort(reach.begin(), reach.end());
            constexpr std::size_t kBuckets = 10;
            std::vector<std::vector<Vertex>> buckets(kBuckets);
            for (std::size_t idx = 0; idx < reach.size(); ++idx) {
                buckets[idx * kBuckets / reach.size()].push_back(reach[idx].second);
            }
            for (std::size_t round = 0; targets.size() < per_source && round < reach.size();
                 ++round) {
                auto& bucket = buckets[round % kBuckets];
                if (bucket.empty()) continue;
                const auto pick = rng::uniform_below(stream, bucket.size());
                targets.push_back(bucket[pick]);
                bucket.erase(bucket.begin() + static_cast<std::ptrdiff_t>(pick));
            }
        } else {
            for (std::size_t attempts = 0; targets.size() < per_source && attempts < per_source * 20;
                 ++attempts) {
                const auto v = static_cast<Vertex>(rng::uniform_below(stream, n));
                if (v == u) continue;
                if (!used.insert({u, v}).second) continue;
                targets.push_back(v);
            }
        }
        if (targets.empty()) continue;
        auto& slot = by_source[u];
        for (Vertex v : targets) {
            if (total == spec.num_pairs) break;
            slot.push_back(v);
            ++total;
        }
    }
    return by_source;
}

}  // namespace

std::vector<double> bounded_hop_distances(const WeightedGraph& g, const Hopset& h,
                                          Vertex source, std::int64_t beta) {
    if (beta < 0) throw UsageError("hop budget must be nonnegative");
    if (source >= g.num_vertices()) throw UsageError("source out of range");
    check_compatibility(g, h);
    return bounded_hop_sweep(union_edges(g, h), g.num_vertices(), source, beta);
}

namespace {

struct SourceResult {
    std::vector<PairRecord> rows;
    std::size_t skipped_unreachable = 0;
    std::size_t phantom_connections = 0;  // bounded finite where exact is infinite
};

// Chunked fan-out identical to the construction side: workers share only
// immutable inputs and write into their own slots.
template <typename Fn>
void parallel_chunks(std::size_t count, int threads, Fn fn) {
    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count ? count : 1)));
    if (workers == 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

StretchReport verify_hopset(const WeightedGraph& g, const Hopset& h,
                            const HopsetParams& params, const PairSamplingSpec& sampling,
                            int threads) {
    check_compatibility(g, h);
    if (params.k != h.k) {
        throw UsageError("params k=" + std::to_string(params.k) +
                         " does not match hopset k=" + std::to_string(h.k));
    }

    StretchReport report;
    report.params = params;
    report.size = size_stats(h, h.n, h.k);
    report.sampling = sampling;
    report.graph_fingerprint = h.graph_fingerprint;
    report.n = g.num_vertices();
    report.graph_edges = g.num_edges();
    report.hopset_edges = h.edges.size();

    const auto edges = union_edges(g, h);

    const auto by_source = sample_pairs(g, sampling);
    std::vector<std::pair<Vertex, std::vector<Vertex>>> work(by_source.begin(), by_source.end());
    std::vector<SourceResult> results(work.size());

    parallel_chunks(work.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const auto& [source, targets] = work[idx];
            SourceResult& slot = results[idx];
            const DistanceVector exact = dijkstra(g, source);
            const auto bounded = bounded_hop_sweep(edges, report.n, source, params.beta);
            for (Vertex v : targets) {
                PairRecord rec;
                rec.u = source;
                rec.v = v;
                rec.exact = exact.dist[v];
                rec.bounded = bounded[v];
                rec.hops = -1;
                if (rec.exact == kInf) {
                    ++slot.skipped_unreachable;
                    if (rec.bounded != kInf) ++slot.phantom_connections;
                    continue;
                }
                rec.stretch = rec.exact == 0.0 ? (rec.bounded == 0.0 ? 1.0 : kInf)
                                               : rec.bounded / rec.exact;
                slot.rows.push_back(rec);
            }
        }
    });

    const double upper = (1.0 + params.epsilon) * (1.0 + kStretchTolerance);
    const double lower_factor = 1.0 - kStretchTolerance;
    double stretch_sum = 0.0;
    for (const auto& slot : results) {
        report.aggregate.pairs_skipped_unreachable += slot.skipped_unreachable;
        report.aggregate.lower_bound_violations += slot.phantom_connections;
        for (const auto& rec : slot.rows) {
            report.pairs.push_back(rec);
            ++report.aggregate.pairs_checked;
            stretch_sum += rec.stretch;
            report.aggregate.max_stretch = std::max(report.aggregate.max_stretch, rec.stretch);
            if (rec.stretch > upper) ++report.aggregate.violations;
            if (rec.bounded < rec.exact * lower_factor) {
                ++report.aggregate.lower_bound_violations;
            }
        }
    }
    report.aggregate.mean_stretch = report.aggregate.pairs_checked
                                        ? stretch_sum / report.aggregate.pairs_checked
                                        : 1.0;
    std::sort(report.pairs.begin(), report.pairs.end(), [](const PairRecord& a, const PairRecord& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    return report;
}

HopCount min_hops_for_stretch(const WeightedGraph& g, const Hopset& h, Vertex u, Vertex v,
                              double target_stretch, std::int64_t cap) {
    check_compatibility(g, h);
    if (u >= g.num_vertices() || v >= g.num_vertices()) throw UsageError("pair out of range");
    if (!(target_stretch >= 1.0)) throw UsageError("target stretch must be >= 1");

    const DistanceVector exact = dijkstra(g, u);
    if (!exact.reachable(v)) {
        throw DomainError("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") is unreachable");
    }
    const double target = target_stretch * exact.dist[v];

    const auto edges = union_edges(g, h);
    const Vertex n = g.num_vertices();
    std::vector<double> cur(n, kInf);
    cur[u] = 0.0;
    if (cur[v] <= target) return {0, true};
    std::vector<double> next;
    for (std::int64_t t = 1; t <= cap; ++t) {
        next = cur;
        bool changed = false;
        for (const auto& e : edges) {
            const double via_u = cur[e.u] + e.w;
            if (via_u < next[e.v]) {
                next[e.v] = via_u;
                changed = true;
            }
            const double via_v = cur[e.v] + e.w;
            if (via_v < next[e.u]) {
                next[e.u] = via_v;
                changed = true;
            }
        }
        cur.swap(next);
        if (cur[v] <= target) return {t, true};
        if (!changed) break;  // fixpoint below the target: no budget will reach it
    }
    return {cap, false};
}

EmulatorReport verify_emulator(const WeightedGraph& g, const Hopset& h, int k, double budget,
                               const PairSamplingSpec& sampling, double d_min) {
    check_compatibility(g, h);
    if (!g.is_unit_weight()) {
        throw UsageError("emulator verification requires a unit-weight graph");
    }
    if (k < 1) throw UsageError("emulator verification requires k >= 1");

    EmulatorReport report;
    report.k = k;
    report.budget = budget;
    report.d_min = d_min;
    report.graph_fingerprint = h.graph_fingerprint;
    report.sampling = sampling;

    // Distances over the hopset's own edges only.
    std::vector<Edge> hopset_edges;
    hopset_edges.reserve(h.edges.size());
    for (const auto& e : h.edges) hopset_edges.push_back({e.u, e.v, e.w});
    const WeightedGraph emu = WeightedGraph::build(g.num_vertices(), std::move(hopset_edges));

    for (const auto& [source, targets] : sample_pairs(g, sampling)) {
        const DistanceVector exact = dijkstra(g, source);
        const DistanceVector over_h = dijkstra(emu, source);
        for (Vertex v : targets) {
            if (!exact.reachable(v)) {
                ++report.pairs_skipped_unreachable;
                continue;
            }
            EmulatorRecord rec;
            rec.u = source;
            rec.v = v;
            rec.exact = exact.dist[v];
            rec.emulator = over_h.dist[v];
            rec.additive = rec.emulator - rec.exact;
            rec.ratio = rec.additive / (k * std::pow(rec.exact, 1.0 - 1.0 / k));
            ++report.pairs_checked;
            if (rec.emulator < rec.exact) ++report.lower_bound_violations;
            if (rec.exact <= d_min) {
                report.small_pairs.push_back(rec);
            } else {
                report.pairs.push_back(rec);
                report.max_ratio = std::max(report.max_ratio, rec.ratio);
            }
        }
    }
    auto by_pair = [](const EmulatorRecord& a, const EmulatorRecord& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    };
    std::sort(report.pairs.begin(), report.pairs.end(), by_pair);
    std::sort(report.small_pairs.begin(), report.small_pairs.end(), by_pair);
    return report;
}

std::size_t audit_edge_weights(const WeightedGraph& g, const Hopset& h) {
    check_compatibility(g, h);
    // Group by first endpoint: the weight was produced by a search from that
    // vertex, so one fresh Dijkstra per distinct endpoint reproduces it exactly.
    std::map<Vertex, std::vector<const HopsetEdge*>> by_source;
    for (const auto& e : h.edges) by_source[e.u].push_back(&e);

    std::size_t mismatches = 0;
    for (const auto& [source, edges] : by_source) {
        const DistanceVector dv = dijkstra(g, source);
        for (const auto* e : edges) {
            if (dv.dist[e->v] != e->w) ++mismatches;
        }
    }
    return mismatches;
}

namespace {

nlohmann::json sampling_to_json(const PairSamplingSpec& s) {
    return {
        {"num_pairs", s.num_pairs},
        {"num_sources", s.num_sources},
        {"seed", s.seed},
        {"mode", s.mode == PairSamplingSpec::Mode::Uniform ? "uniform" : "distance-stratified"},
    };
}

nlohmann::json params_to_json(const HopsetParams& p) {
    return {
        {"k", p.k},
        {"epsilon", p.epsilon},
        {"epsilon_prime", p.epsilon_prime},
        {"r", p.r},
        {"hop_sequence", p.hop_sequence},
        {"beta", p.beta},
    };
}

nlohmann::json size_to_json(const SizeStats& s) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& row : s.per_level) {
        levels.push_back({{"level", row.level},
                          {"count", row.count},
                          {"expected", row.expected},
                          {"ratio", row.ratio}});
    }
    return {{"per_level", levels},
            {"total", s.total},
            {"base", s.base},
            {"normalized_total", s.normalized_total}};
}

std::string fingerprint_hex(std::uint64_t fp) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fp));
    return buf;
}

double json_safe(double x) { return x == kInf ? -1.0 : x; }

}  // namespace

std::string report_to_json(const StretchReport& report, const std::string& config_echo) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : report.pairs) {
        pairs.push_back({{"u", p.u},
                         {"v", p.v},
                         {"exact", p.exact},
                         {"bounded", json_safe(p.bounded)},
                         {"stretch", json_safe(p.stretch)},
                         {"hops", p.hops}});
    }
    nlohmann::json j{
        {"schema_version", report.schema_version},
        {"config", config_echo.empty() ? nlohmann::json(nullptr)
                                       : nlohmann::json::parse(config_echo)},
        {"graph",
         {{"n", report.n},
          {"m", report.graph_edges},
          {"fingerprint", fingerprint_hex(report.graph_fingerprint)}}},
        {"params", params_to_json(report.params)},
        {"size_stats", size_to_json(report.size)},
        {"sampling", sampling_to_json(report.sampling)},
        {"hopset_edges", report.hopset_edges},
        {"pairs", pairs},
        {"aggregate",
         {{"max_stretch", report.aggregate.max_stretch},
          {"mean_stretch", report.aggregate.mean_stretch},
          {"violations", report.aggregate.violations},
          {"lower_bound_violations", report.aggregate.lower_bound_violations},
          {"pairs_checked", report.aggregate.pairs_checked},
          {"pairs_skipped_unreachable", report.aggregate.pairs_skipped_unreachable}}},
        {"passed", report.passed()},
    };
    return j.dump(2) + "\n";
}

std::string report_to_csv(const StretchReport& report) {
    std::string out = "u,v,exact,bounded,stretch,hops\n";
    for (const auto& p : report.pairs) {
        out += std::to_string(p.u) + ',' + std::to_string(p.v) + ',' + format_double(p.exact) +
               ',' + format_double(p.bounded) + ',' + format_double(p.stretch) + ',' +
               std::to_string(p.hops) + '\n';
    }
    return out;
}

std::string report_to_json(const EmulatorReport& report, const std::string& config_echo) {
    auto record = [](const EmulatorRecord& r) {
        return nlohmann::json{{"u", r.u},
                              {"v", r.v},
                              {"exact", r.exact},
                              {"emulator", json_safe(r.emulator)},
                              {"additive", json_safe(r.additive)},
                              {"ratio", json_safe(r.ratio)}};
    };
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& r : report.pairs) pairs.push_back(record(r));
    nlohmann::json small = nlohmann::json::array();
    for (const auto& r : report.small_pairs) small.push_back(record(r));

    nlohmann::json j{
        {"schema_version", report.schema_version},
        {"config", config_echo.empty() ? nlohmann::json(nullptr)
                                       : nlohmann::json::parse(config_echo)},
        {"k", report.k},
        {"budget", report.budget},
        {"d_min", report.d_min},
        {"graph_fingerprint", fingerprint_hex(report.graph_fingerprint)},
        {"sampling", sampling_to_json(report.sampling)},
        {"pairs", pairs},
        {"small_distance_pairs", small},
        {"aggregate",
         {{"max_ratio", report.max_ratio},
          {"lower_bound_violations", report.lower_bound_violations},
          {"pairs_checked", report.pairs_checked},
          {"pairs_skipped_unreachable", report.pairs_skipped_unreachable}}},
        {"passed", report.passed()},
    };
    return j.dump(2) + "\n";
}

}  // namespace hopset
