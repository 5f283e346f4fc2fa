#include "hopset/params.hpp"

#include <cmath>

#include "hopset/errors.hpp"
#include "hopset/graph_io.hpp"

namespace hopset {

HopsetParams derive_params(int k, double epsilon) {
    if (k < 1) throw UsageError("derive_params requires k >= 1");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw UsageError("derive_params requires epsilon > 0");
    }

    HopsetParams p;
    p.k = k;
    p.epsilon = epsilon;
    p.epsilon_prime = std::log1p(epsilon);

    const double quotient = 4.0 * k / p.epsilon_prime;
    const double nearest = std::round(quotient);
    double rounded;
    if (std::abs(quotient - nearest) <= 1e-12 * std::max(1.0, std::abs(quotient))) {
        rounded = nearest;  // guard: don't let an ulp of noise bump the ceiling
    } else {
        rounded = std::ceil(quotient);
    }
    if (rounded >= 9.2e18) throw CapacityError("r exceeds the 64-bit limit");
    p.r = static_cast<std::int64_t>(rounded);

    p.hop_sequence.assign(k + 1, 0);
    p.hop_sequence[0] = 1;
    for (int i = 1; i <= k; ++i) {
        std::int64_t scaled = 0, next = 0;
        if (__builtin_mul_overflow(p.r + 1, p.hop_sequence[i - 1], &scaled) ||
            __builtin_add_overflow(scaled, p.r, &next)) {
            throw CapacityError("hop sequence overflows 64-bit integers at level " +
                                std::to_string(i) + " (r=" + std::to_string(p.r) + ")");
        }
        p.hop_sequence[i] = next;
    }
    p.beta = p.hop_sequence[k];
    return p;
}

StretchBudget stretch_budget(int k, double epsilon) {
    const HopsetParams p = derive_params(k, epsilon);
    return {p.beta, 1.0 + epsilon};
}

std::string format_params(const HopsetParams& p) {
    std::string out = "k=" + std::to_string(p.k) + " epsilon=" + format_double(p.epsilon) +
                      " epsilon_prime=" + format_double(p.epsilon_prime) +
                      " r=" + std::to_string(p.r) + " hops=";
    for (std::size_t i = 0; i < p.hop_sequence.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.hop_sequence[i]);
    }
    out += " beta=" + std::to_string(p.beta);
    return out;
}

}  // namespace hopset
