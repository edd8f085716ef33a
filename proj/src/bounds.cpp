#include "florcc/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace florcc {

const char* to_string(BoundBranch b) {
    return b == BoundBranch::Liu ? "liu" : "welch";
}

const char* to_string(OptimalityClass c) {
    switch (c) {
        case OptimalityClass::Optimal: return "optimal";
        case OptimalityClass::NearOptimal: return "near-optimal";
        case OptimalityClass::Other: return "other";
    }
    return "other";
}

double welch_bound(int K, int M, int N) {
    if (M < 1 || K < M || N < 1) {
        throw std::invalid_argument("welch_bound: need K >= M >= 1 and N >= 1");
    }
    const double denom = static_cast<double>(K) * (2.0 * N - 1.0) - 1.0;
    if (denom <= 0.0) {
        throw std::invalid_argument("welch_bound: K*(2N-1) - 1 must be positive");
    }
    const double ratio = (static_cast<double>(K) / M - 1.0) / denom;
    return static_cast<double>(M) * N * std::sqrt(ratio);
}

bool liu_applicable(int K, int M, int N) { return K >= 3 * M && M >= 2 && N >= 2; }

std::optional<double> liu_bound(int K, int M, int N) {
    if (!liu_applicable(K, M, N)) return std::nullopt;
    const double inner = 1.0 - 2.0 * std::sqrt(static_cast<double>(M) / (3.0 * K));
    return std::sqrt(static_cast<double>(M) * N * inner);
}

BoundsReport optimality_factor(int K, int M, int N, double delta) {
    if (delta < 0.0) throw std::invalid_argument("optimality_factor: delta < 0");
    BoundsReport report;
    report.set_count = K;
    report.flock_size = M;
    report.length = N;
    report.delta_max = delta;
    report.welch = welch_bound(K, M, N);
    report.liu = liu_bound(K, M, N);
    report.branch = report.liu ? BoundBranch::Liu : BoundBranch::Welch;
    const double bound = report.liu ? *report.liu : report.welch;
    if (bound == 0.0) {
        if (delta > 0.0) {
            throw std::domain_error("optimality_factor: bound is zero, rho unbounded");
        }
        report.rho = 1.0;  // delta meets the trivial bound with equality
    } else {
        report.rho = delta / bound;
    }
    report.classification = report.rho <= 1.0 + 1e-9 ? OptimalityClass::Optimal
                            : report.rho <= 2.0      ? OptimalityClass::NearOptimal
                                                     : OptimalityClass::Other;
    return report;
}

double asymptotic_rho(std::int64_t f) {
    if (3 * f <= 4) {
        throw std::invalid_argument("asymptotic_rho: need 3F > 4, got F = " +
                                    std::to_string(f));
    }
    return 1.0 / std::sqrt(1.0 - 2.0 / std::sqrt(3.0 * static_cast<double>(f)));
}

}  // namespace florcc
