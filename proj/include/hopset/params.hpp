// Derives the verification parameters from (k, epsilon): the rounded segment
// count r, the hop sequence h_0..h_k, and the hopbound beta = h_k.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hopset {

struct HopsetParams {
    int k = 0;
    double epsilon = 0.0;
    double epsilon_prime = 0.0;               // ln(1 + epsilon)
    std::int64_t r = 0;                       // ceil(4k / epsilon_prime)
    std::vector<std::int64_t> hop_sequence;   // h_0 = 1, h_i = (r+1)h_{i-1} + r
    std::int64_t beta = 0;                    // h_k = 2(r+1)^k - 1
};

struct StretchBudget {
    std::int64_t beta;
    double max_stretch;  // exactly 1 + epsilon
};

// Throws UsageError for epsilon <= 0 or k < 1; CapacityError when beta would
// overflow 64-bit integers. A guard window of 1e-12 (relative) around integer
// values of 4k/epsilon_prime keeps the ceiling stable under rounding noise.
HopsetParams derive_params(int k, double epsilon);

// The (hopbound, stretch-bound) pair the verifier enforces.
StretchBudget stretch_budget(int k, double epsilon);

// One-line header: `k epsilon epsilon' r h_0..h_k beta`.
std::string format_params(const HopsetParams& p);

}  // namespace hopset
