#pragma once

// Correlation lower bounds for (K, M, N) spreading families and the
// optimality factor rho = delta_max / bound. The Liu bound applies when
// K >= 3M, M >= 2 and N >= 2 and is the tighter of the two there; outside
// that region the Welch bound is used. rho == 1 is optimal and 1 < rho <= 2
// near-optimal.

#include <cstdint>
#include <optional>

namespace florcc {

// M*N * sqrt((K/M - 1) / (K*(2N - 1) - 1)); requires K >= M >= 1, N >= 1.
double welch_bound(int K, int M, int N);

bool liu_applicable(int K, int M, int N);

// sqrt(M*N * (1 - 2*sqrt(M / (3K)))); nullopt when not applicable.
std::optional<double> liu_bound(int K, int M, int N);

enum class BoundBranch { Liu, Welch };
enum class OptimalityClass { Optimal, NearOptimal, Other };

const char* to_string(BoundBranch b);
const char* to_string(OptimalityClass c);

struct BoundsReport {
    int set_count = 0;   // K
    int flock_size = 0;  // M
    int length = 0;      // N
    double delta_max = 0.0;
    double welch = 0.0;
    std::optional<double> liu;
    double rho = 0.0;
    BoundBranch branch = BoundBranch::Welch;
    OptimalityClass classification = OptimalityClass::Other;
};

// rho = delta / liu_bound when the Liu branch applies, else delta / welch.
// Throws std::domain_error when delta > 0 but the applicable bound is zero.
BoundsReport optimality_factor(int K, int M, int N, double delta);

// rho of an (N*F, N, N, N) family: 1 / sqrt(1 - 2 / sqrt(3F)), independent of
// N. Strictly decreasing in F with limit 1. Requires 3F > 4.
double asymptotic_rho(std::int64_t f);

}  // namespace florcc
