// Command-line front end: generate graphs, build hopsets, verify stretch and
// size guarantees, and run the full experiment matrix.
#include <atomic>
#include <cmath>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopset/constructor.hpp"
#include "hopset/errors.hpp"
#include "hopset/generators.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/hierarchy.hpp"
#include "hopset/params.hpp"
#include "hopset/rng.hpp"
#include "hopset/shortest_paths.hpp"
#include "hopset/verifier.hpp"

namespace {

using nlohmann::json;

// Exit codes, one per failure class so scripts can branch on them.
enum ExitCode : int {
    kOk = 0,
    kBadArgs = 2,
    kIo = 3,
    kVerificationFailed = 4,
    kFingerprintMismatch = 5,
    kOverflow = 6,
};

int default_workers() {
    if (const char* env = std::getenv("HOPSET_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

hopset::GraphFormat parse_format(const std::string& name) {
    if (name == "edge-list") return hopset::GraphFormat::EdgeList;
    if (name == "dimacs") return hopset::GraphFormat::Dimacs;
    throw hopset::UsageError("unknown graph format: " + name);
}

int parse_k(const std::string& text, hopset::Vertex n, int auto_offset) {
    if (text == "auto") return hopset::auto_k(static_cast<double>(n), auto_offset);
    const int k = std::stoi(text);
    if (k < 1) throw hopset::UsageError("k must be >= 1");
    return k;
}

struct GenOptions {
    std::string family = "erdos-renyi";
    hopset::Vertex n = 1000;
    std::uint64_t m = 0;
    hopset::Vertex rows = 0, cols = 0;
    double radius = 0.0;
    std::string weights = "unit";
    double wlo = 1.0, whi = 100.0;
    std::uint64_t seed = 1;
    std::string out;
};

hopset::WeightedGraph generate_from(const GenOptions& opt) {
    hopset::FamilyParams fp;
    fp.m = opt.m;
    fp.rows = opt.rows;
    fp.cols = opt.cols;
    fp.radius = opt.radius;
    hopset::WeightDist wd = opt.weights == "uniform"
                                ? hopset::WeightDist::uniform(opt.wlo, opt.whi)
                                : hopset::WeightDist::unit();
    if (opt.weights != "unit" && opt.weights != "uniform") {
        throw hopset::UsageError("weights must be 'unit' or 'uniform'");
    }
    return hopset::generate_graph(hopset::parse_family(opt.family), opt.n, fp, wd, opt.seed);
}

int cmd_gen(const GenOptions& opt) {
    const auto g = generate_from(opt);
    json config{{"command", "gen"},     {"family", opt.family}, {"n", opt.n},
                {"m", opt.m},           {"rows", opt.rows},     {"cols", opt.cols},
                {"radius", opt.radius}, {"weights", opt.weights}, {"wlo", opt.wlo},
                {"whi", opt.whi},       {"seed", opt.seed},     {"out", opt.out}};
    std::string text = "# config " + config.dump() + "\n" + hopset::serialize_edge_list(g);
    hopset::write_file(opt.out, text);
    char fp[32];
    std::snprintf(fp, sizeof(fp), "%016llx",
                  static_cast<unsigned long long>(hopset::fingerprint(g)));
    std::cout << "wrote " << opt.out << ": n=" << g.num_vertices() << " m=" << g.num_edges()
              << " fingerprint=" << fp << "\n";
    return kOk;
}

struct BuildOptions {
    std::string graph_path;
    std::string format = "edge-list";
    std::string k_text = "auto";
    int auto_offset = 1;
    std::optional<double> epsilon;
    std::uint64_t seed = 1;
    std::string method = "truncated";
    int workers = default_workers();
    std::string out;
    std::string levels_out;
};

void warn_about_input(const hopset::LoadedGraph& loaded) {
    if (loaded.remapped) {
        std::cerr << "note: sparse vertex ids remapped to 0.."
                  << loaded.graph.num_vertices() - 1 << "\n";
    }
    if (loaded.graph.dropped_self_loops() > 0) {
        std::cerr << "note: dropped " << loaded.graph.dropped_self_loops() << " self-loops\n";
    }
}

int cmd_build(const BuildOptions& opt) {
    if (opt.k_text != "auto" && std::stoi(opt.k_text) < 1) {
        throw hopset::UsageError("k must be >= 1");
    }
    const auto loaded = hopset::load_graph(opt.graph_path, parse_format(opt.format));
    warn_about_input(loaded);
    const auto& g = loaded.graph;
    const int k = parse_k(opt.k_text, g.num_vertices(), opt.auto_offset);
    const auto method = opt.method == "cluster" ? hopset::BunchMethod::ClusterGrowing
                                                : hopset::BunchMethod::Truncated;
    if (opt.method != "truncated" && opt.method != "cluster") {
        throw hopset::UsageError("method must be 'truncated' or 'cluster'");
    }

    auto result = hopset::build_hopset(g, k, opt.seed, method, opt.workers);
    const auto stats = hopset::size_stats(result.hopset, g.num_vertices(), k);

    json config{{"command", "build"}, {"graph", opt.graph_path}, {"k", k},
                {"seed", opt.seed},   {"method", opt.method},    {"out", opt.out}};
    if (opt.epsilon) config["epsilon"] = *opt.epsilon;
    std::string text = hopset::serialize(result.hopset);
    text += "# config " + config.dump() + "\n";
    hopset::write_file(opt.out, text);
    if (!opt.levels_out.empty()) {
        hopset::write_file(opt.levels_out, hopset::serialize(result.levels));
    }

    // The construction itself is epsilon-free; epsilon only determines the
    // hop budget the verifier will enforce, so it is optional here.
    std::cout << "k=" << k;
    if (opt.epsilon) {
        const auto params = hopset::derive_params(k, *opt.epsilon);
        std::cout << " epsilon=" << hopset::format_double(*opt.epsilon) << " r=" << params.r
                  << " beta=" << params.beta;
    }
    std::cout << " |H|=" << result.hopset.edges.size() << "\n";
    std::cout << "level count expected ratio\n";
    for (const auto& row : stats.per_level) {
        std::cout << row.level << ' ' << row.count << ' ' << hopset::format_double(row.expected)
                  << ' ' << hopset::format_double(row.ratio) << "\n";
    }
    return kOk;
}

struct VerifyOptions {
    std::string graph_path;
    std::string format = "edge-list";
    std::string hopset_path;
    double epsilon = 1.0;
    std::size_t pairs = 200;
    std::size_t sources = 20;
    std::uint64_t seed = 1;
    std::string mode = "uniform";
    bool audit_weights = false;
    bool measure_hops = false;
    int workers = default_workers();
    std::string out;
    std::string out_format = "json";
};

int cmd_verify(const VerifyOptions& opt) {
    const auto loaded = hopset::load_graph(opt.graph_path, parse_format(opt.format));
    warn_about_input(loaded);
    const auto h = hopset::load_hopset(opt.hopset_path);
    const auto params = hopset::derive_params(h.k, opt.epsilon);

    hopset::PairSamplingSpec spec;
    spec.num_pairs = opt.pairs;
    spec.num_sources = opt.sources;
    spec.seed = opt.seed;
    spec.mode = opt.mode == "stratified" ? hopset::PairSamplingSpec::Mode::DistanceStratified
                                         : hopset::PairSamplingSpec::Mode::Uniform;
    if (opt.mode != "uniform" && opt.mode != "stratified") {
        throw hopset::UsageError("mode must be 'uniform' or 'stratified'");
    }

    auto report = hopset::verify_hopset(loaded.graph, h, params, spec, opt.workers);
    if (opt.measure_hops) {
        for (auto& rec : report.pairs) {
            const auto hc = hopset::min_hops_for_stretch(loaded.graph, h, rec.u, rec.v,
                                                         1.0 + opt.epsilon, params.beta);
            rec.hops = hc.met ? hc.hops : -params.beta;  // negative cap marks "not reached"
        }
    }

    std::size_t weight_mismatches = 0;
    if (opt.audit_weights) {
        weight_mismatches = hopset::audit_edge_weights(loaded.graph, h);
    }

    json config{{"command", "verify"},   {"graph", opt.graph_path},
                {"hopset", opt.hopset_path}, {"epsilon", opt.epsilon},
                {"pairs", opt.pairs},     {"sources", opt.sources},
                {"seed", opt.seed},       {"mode", opt.mode},
                {"audit_weights", opt.audit_weights}, {"out", opt.out}};
    if (!opt.out.empty()) {
        hopset::write_file(opt.out, opt.out_format == "csv"
                                        ? hopset::report_to_csv(report)
                                        : hopset::report_to_json(report, config.dump()));
    }

    std::cout << hopset::format_params(params) << "\n"
              << "pairs_checked=" << report.aggregate.pairs_checked
              << " skipped_unreachable=" << report.aggregate.pairs_skipped_unreachable
              << " max_stretch=" << hopset::format_double(report.aggregate.max_stretch)
              << " violations=" << report.aggregate.violations
              << " lower_bound_violations=" << report.aggregate.lower_bound_violations << "\n";
    if (opt.audit_weights) {
        std::cout << "weight_audit_mismatches=" << weight_mismatches << "\n";
    }
    const bool ok = report.passed() && weight_mismatches == 0;
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kOk : kVerificationFailed;
}

struct EmulateOptions {
    std::string graph_path;
    std::string format = "edge-list";
    std::string k_text = "2";
    int auto_offset = 1;
    std::uint64_t seed = 1;
    std::size_t pairs = 500;
    std::size_t sources = 25;
    double budget = 8.0;
    double d_min = 2.0;
    std::string out;
};

int cmd_emulate(const EmulateOptions& opt) {
    const auto loaded = hopset::load_graph(opt.graph_path, parse_format(opt.format));
    const auto& g = loaded.graph;
    const int k = parse_k(opt.k_text, g.num_vertices(), opt.auto_offset);
    auto result = hopset::build_hopset(g, k, opt.seed);

    hopset::PairSamplingSpec spec;
    spec.num_pairs = opt.pairs;
    spec.num_sources = opt.sources;
    spec.seed = opt.seed;
    const auto report = hopset::verify_emulator(g, result.hopset, k, opt.budget, spec, opt.d_min);

    json config{{"command", "emulate"}, {"graph", opt.graph_path}, {"k", k},
                {"seed", opt.seed},     {"pairs", opt.pairs},      {"budget", opt.budget},
                {"d_min", opt.d_min},   {"out", opt.out}};
    if (!opt.out.empty()) {
        hopset::write_file(opt.out, hopset::report_to_json(report, config.dump()));
    }
    std::cout << "pairs_checked=" << report.pairs_checked
              << " max_ratio=" << hopset::format_double(report.max_ratio)
              << " lower_bound_violations=" << report.lower_bound_violations << "\n"
              << (report.passed() ? "PASS" : "FAIL") << "\n";
    return report.passed() ? kOk : kVerificationFailed;
}

struct StatsOptions {
    std::string hopset_path;
};

int cmd_stats(const StatsOptions& opt) {
    const auto h = hopset::load_hopset(opt.hopset_path);
    const auto stats = hopset::size_stats(h, h.n, h.k);
    std::cout << "n=" << h.n << " k=" << h.k << " seed=" << h.seed
              << " |H|=" << stats.total
              << " normalized_total=" << hopset::format_double(stats.normalized_total) << "\n";
    std::cout << "level count expected ratio\n";
    for (const auto& row : stats.per_level) {
        std::cout << row.level << ' ' << row.count << ' ' << hopset::format_double(row.expected)
                  << ' ' << hopset::format_double(row.ratio) << "\n";
    }
    return kOk;
}

struct MatrixOptions {
    std::string preset = "stretch";
    std::size_t seeds = 5;
    std::uint64_t base_seed = 1;
    int workers = default_workers();
    std::string out;
};

struct MatrixCell {
    std::string family;
    std::string weights;
    hopset::Vertex n = 0;
    int k = 0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;

    // Filled by the run.
    bool pass = false;
    std::string error;
    double max_stretch = 0.0;
    std::size_t violations = 0;
    std::size_t lower_bound_violations = 0;
    std::size_t hopset_edges = 0;
    double normalized_size = 0.0;
};

hopset::WeightedGraph cell_graph(const MatrixCell& cell) {
    GenOptions opt;
    opt.family = cell.family;
    opt.n = cell.n;
    opt.weights = cell.weights;
    opt.seed = cell.seed;
    if (cell.family == "erdos-renyi") opt.m = 5ull * cell.n;
    if (cell.family == "grid") {
        const auto side = static_cast<hopset::Vertex>(std::lround(std::sqrt((double)cell.n)));
        opt.rows = opt.cols = side;
    }
    return generate_from(opt);
}

void run_stretch_cell(MatrixCell& cell) {
    const auto g = cell_graph(cell);
    auto result = hopset::build_hopset(g, cell.k, cell.seed);
    const auto params = hopset::derive_params(cell.k, cell.epsilon);
    hopset::PairSamplingSpec spec;
    spec.num_pairs = 200;
    spec.num_sources = 20;
    spec.seed = cell.seed;
    const auto report = hopset::verify_hopset(g, result.hopset, params, spec);
    cell.max_stretch = report.aggregate.max_stretch;
    cell.violations = report.aggregate.violations;
    cell.lower_bound_violations = report.aggregate.lower_bound_violations;
    cell.hopset_edges = result.hopset.edges.size();
    cell.normalized_size = hopset::size_stats(result.hopset, g.num_vertices(), cell.k)
                               .normalized_total;
    cell.pass = report.passed();
}

int cmd_matrix(const MatrixOptions& opt) {
    std::vector<MatrixCell> cells;
    if (opt.preset != "stretch") {
        throw hopset::UsageError("unknown matrix preset: " + opt.preset);
    }
    const std::vector<std::string> families{"erdos-renyi", "grid", "random-geometric"};
    const std::vector<std::string> weight_kinds{"unit", "uniform"};
    std::uint64_t index = 0;
    for (const auto& family : families) {
        for (const auto& weights : weight_kinds) {
            for (int k : {1, 2}) {
                for (double eps : {0.5, 1.0}) {
                    for (std::size_t s = 0; s < opt.seeds; ++s) {
                        MatrixCell cell;
                        cell.family = family;
                        cell.weights = weights;
                        cell.n = family == "grid" ? 1024 : 1000;
                        cell.k = k;
                        cell.epsilon = eps;
                        cell.seed = hopset::rng::cell_seed(opt.base_seed, index++);
                        cells.push_back(cell);
                    }
                }
            }
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            try {
                run_stretch_cell(cells[i]);
            } catch (const std::exception& e) {
                cells[i].pass = false;
                cells[i].error = e.what();
            }
        }
    };
    const int workers = std::max(1, opt.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    json rows = json::array();
    std::size_t failures = 0;
    std::cout << "family weights n k epsilon seed |H| norm_size max_stretch violations pass\n";
    for (const auto& cell : cells) {
        if (!cell.pass) ++failures;
        std::cout << cell.family << ' ' << cell.weights << ' ' << cell.n << ' ' << cell.k << ' '
                  << cell.epsilon << ' ' << cell.seed << ' ' << cell.hopset_edges << ' '
                  << hopset::format_double(cell.normalized_size) << ' '
                  << hopset::format_double(cell.max_stretch) << ' '
                  << cell.violations + cell.lower_bound_violations << ' '
                  << (cell.pass ? "PASS" : "FAIL") << (cell.error.empty() ? "" : " " + cell.error)
                  << "\n";
        rows.push_back({{"family", cell.family},
                        {"weights", cell.weights},
                        {"n", cell.n},
                        {"k", cell.k},
                        {"epsilon", cell.epsilon},
                        {"seed", cell.seed},
                        {"hopset_edges", cell.hopset_edges},
                        {"normalized_size", cell.normalized_size},
                        {"max_stretch", cell.max_stretch},
                        {"violations", cell.violations},
                        {"lower_bound_violations", cell.lower_bound_violations},
                        {"pass", cell.pass},
                        {"error", cell.error}});
    }
    std::cout << (failures == 0 ? "PASS" : "FAIL") << " (" << cells.size() - failures << "/"
              << cells.size() << " cells)\n";

    if (!opt.out.empty()) {
        json config{{"command", "matrix"}, {"preset", opt.preset}, {"seeds", opt.seeds},
                    {"base_seed", opt.base_seed}, {"workers", workers}};
        json summary{{"schema_version", 1}, {"config", config}, {"cells", rows},
                     {"failures", failures}, {"passed", failures == 0}};
        hopset::write_file(opt.out, summary.dump(2) + "\n");
    }
    return failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopset: build and verify bounded-hop shortcut sets for weighted graphs"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cgen = app.add_subcommand("gen", "generate a graph file");
    cgen->add_option("--family", gen.family, "path | grid | erdos-renyi | random-geometric");
    cgen->add_option("--n", gen.n, "vertex count")->required();
    cgen->add_option("--m", gen.m, "edge count (erdos-renyi)");
    cgen->add_option("--rows", gen.rows, "grid rows");
    cgen->add_option("--cols", gen.cols, "grid cols");
    cgen->add_option("--radius", gen.radius, "random-geometric radius (0 = default)");
    cgen->add_option("--weights", gen.weights, "unit | uniform");
    cgen->add_option("--wlo", gen.wlo, "uniform weight lower bound");
    cgen->add_option("--whi", gen.whi, "uniform weight upper bound");
    cgen->add_option("--seed", gen.seed, "generator seed");
    cgen->add_option("--out", gen.out, "output graph path")->required();

    BuildOptions build;
    auto* cbuild = app.add_subcommand("build", "build a hopset for a graph");
    cbuild->add_option("--graph", build.graph_path, "input graph")->required();
    cbuild->add_option("--graph-format", build.format, "edge-list | dimacs");
    cbuild->add_option("--k", build.k_text, "level count or 'auto'");
    cbuild->add_option("--auto-k-offset", build.auto_offset, "offset used by --k auto");
    cbuild->add_option("--epsilon", build.epsilon, "stretch slack (optional; printing only)");
    cbuild->add_option("--seed", build.seed, "level-sampling seed");
    cbuild->add_option("--method", build.method, "truncated | cluster");
    cbuild->add_option("--workers", build.workers, "parallel bunch searches");
    cbuild->add_option("--out", build.out, "output hopset path")->required();
    cbuild->add_option("--levels-out", build.levels_out, "also write the level assignment");

    VerifyOptions verify;
    auto* cverify = app.add_subcommand("verify", "verify stretch within the hop budget");
    cverify->add_option("--graph", verify.graph_path, "input graph")->required();
    cverify->add_option("--graph-format", verify.format, "edge-list | dimacs");
    cverify->add_option("--hopset", verify.hopset_path, "hopset file")->required();
    cverify->add_option("--epsilon", verify.epsilon, "stretch slack")->required();
    cverify->add_option("--pairs", verify.pairs, "sampled pair count");
    cverify->add_option("--sources", verify.sources, "distinct sources among the pairs");
    cverify->add_option("--seed", verify.seed, "pair-sampling seed");
    cverify->add_option("--mode", verify.mode, "uniform | stratified");
    cverify->add_flag("--audit-weights", verify.audit_weights,
                      "recompute every hopset edge weight exactly");
    cverify->add_flag("--measure-hops", verify.measure_hops,
                      "record the hop count needed per pair (slow)");
    cverify->add_option("--workers", verify.workers, "parallel source sweeps");
    cverify->add_option("--out", verify.out, "report output path");
    cverify->add_option("--format", verify.out_format, "json | csv");

    EmulateOptions emulate;
    auto* cemulate = app.add_subcommand("emulate", "additive-stretch check using hopset edges only");
    cemulate->add_option("--graph", emulate.graph_path, "unit-weight input graph")->required();
    cemulate->add_option("--graph-format", emulate.format, "edge-list | dimacs");
    cemulate->add_option("--k", emulate.k_text, "level count or 'auto'");
    cemulate->add_option("--seed", emulate.seed, "seed");
    cemulate->add_option("--pairs", emulate.pairs, "sampled pair count");
    cemulate->add_option("--sources", emulate.sources, "distinct sources among the pairs");
    cemulate->add_option("--budget", emulate.budget, "max allowed normalized additive stretch");
    cemulate->add_option("--d-min", emulate.d_min, "exclude pairs at distance <= d-min");
    cemulate->add_option("--out", emulate.out, "report output path");

    StatsOptions stats;
    auto* cstats = app.add_subcommand("stats", "per-level size statistics of a hopset file");
    cstats->add_option("--hopset", stats.hopset_path, "hopset file")->required();

    MatrixOptions matrix;
    auto* cmatrix = app.add_subcommand("matrix", "run the experiment grid");
    cmatrix->add_option("--preset", matrix.preset, "stretch");
    cmatrix->add_option("--seeds", matrix.seeds, "seeds per cell");
    cmatrix->add_option("--base-seed", matrix.base_seed, "base seed for per-cell derivation");
    cmatrix->add_option("--workers", matrix.workers, "parallel cells (default $HOPSET_WORKERS)");
    cmatrix->add_option("--out", matrix.out, "summary JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadArgs;
    }

    try {
        if (cgen->parsed()) return cmd_gen(gen);
        if (cbuild->parsed()) return cmd_build(build);
        if (cverify->parsed()) return cmd_verify(verify);
        if (cemulate->parsed()) return cmd_emulate(emulate);
        if (cstats->parsed()) return cmd_stats(stats);
        if (cmatrix->parsed()) return cmd_matrix(matrix);
    } catch (const hopset::FingerprintMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFingerprintMismatch;
    } catch (const hopset::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOverflow;
    } catch (const hopset::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const hopset::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const hopset::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    }
    return kBadArgs;
}
