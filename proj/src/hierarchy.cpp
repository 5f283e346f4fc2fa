#include "hopset/hierarchy.hpp"

#include <cmath>

#include "hopset/errors.hpp"
#include "hopset/graph_io.hpp"
#include "hopset/rng.hpp"

namespace hopset {

double sampling_probability(int i, int k, std::uint64_t n) {
    if (k < 1) throw UsageError("sampling_probability requires k >= 1");
    if (i < 0 || i > k) {
        throw UsageError("sampling_probability requires 0 <= i <= k, got i=" +
                         std::to_string(i) + " k=" + std::to_string(k));
    }
    if (n < 2) throw UsageError("sampling_probability requires n >= 2");
    if (i == 0) return 1.0;

    const double pow2_i = std::ldexp(1.0, i);  // 2^i
    const double n_exponent = -(pow2_i - 1.0) / (std::ldexp(1.0, k + 1) - 1.0);
    const double two_exponent = -pow2_i - i + 1.0;
    return std::pow(static_cast<double>(n), n_exponent) * std::exp2(two_exponent);
}

bool LevelAssignment::consistent() const {
    if (members.size() != static_cast<std::size_t>(k) + 1) return false;
    std::vector<std::vector<Vertex>> rescan(k + 1);
    for (Vertex v = 0; v < n(); ++v) {
        if (level[v] < 0 || level[v] > k) return false;
        for (int i = 0; i <= level[v]; ++i) rescan[i].push_back(v);
    }
    return rescan == members;
}

LevelAssignment assign_levels(Vertex n, int k, std::uint64_t seed) {
    if (n < 2) throw UsageError("assign_levels requires n >= 2");
    if (k < 1) throw UsageError("assign_levels requires k >= 1");

    std::vector<double> q(k + 1);
    for (int i = 0; i <= k; ++i) q[i] = sampling_probability(i, k, n);

    LevelAssignment out;
    out.k = k;
    out.seed = seed;
    out.level.assign(n, 0);
    out.members.assign(k + 1, {});

    auto stream = rng::make_stream(seed, rng::Stream::Levels);
    for (Vertex v = 0; v < n; ++v) {
        const double u = rng::uniform01(stream);
        int lvl = 0;
        while (lvl < k && u < q[lvl + 1]) ++lvl;
        out.level[v] = lvl;
        for (int i = 0; i <= lvl; ++i) out.members[i].push_back(v);
    }
    return out;
}

int auto_k(double n, int c) {
    if (!(n >= 4.0)) throw UsageError("auto_k requires n >= 4");
    if (c < 0) throw UsageError("auto_k requires c >= 0");
    const int k = static_cast<int>(std::floor(std::log2(std::log2(n)))) - c;
    return k < 1 ? 1 : k;
}

std::string serialize(const LevelAssignment& levels) {
    const Vertex n = levels.n();
    std::string out = "# levels n=" + std::to_string(n) + " k=" + std::to_string(levels.k) +
                      " seed=" + std::to_string(levels.seed) + "\n# q";
    for (int i = 0; i <= levels.k; ++i) {
        out += ' ';
        out += format_double(sampling_probability(i, levels.k, n));
    }
    out += '\n';
    for (Vertex v = 0; v < n; ++v) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(levels.level[v]);
        out += '\n';
    }
    return out;
}

}  // namespace hopset
