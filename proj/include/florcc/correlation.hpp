#pragma once

// Aperiodic correlation of exponent sequences and sequence sets, and the
// worst-case correlation scan over a spreading family.
//
// Correlations of unimodular sequences over Z_n are integer combinations of
// n-th roots of unity, so every value is carried as a multiplicity vector
// (counts[j] = how many terms contributed w^j). The complex evaluation is
// derived from the counts; whether a value is exactly zero is decidable by
// reduction modulo the n-th cyclotomic polynomial.

#include <complex>
#include <cstdint>
#include <vector>

#include "florcc/seqgen.hpp"

namespace florcc {

struct CorrelationValue {
    int n = 0;
    std::vector<std::int64_t> counts;  // length n
    std::complex<double> value;        // sum of counts[j] * w^j

    double magnitude() const { return std::abs(value); }
};

// Aperiodic correlation of two equal-length exponent rows over root order n
// at shift tau in (-N, N): for tau >= 0 the terms are c_t * conj(d_{t+tau}).
CorrelationValue acf(const std::vector<int>& c, const std::vector<int>& d, int n,
                     int tau);

// Row-wise sum of acf over the aligned rows of two equally-shaped sets.
CorrelationValue set_correlation(const SequenceSet& a, const SequenceSet& b, int tau);

// Exact zero test for a correlation value (cyclotomic reduction).
bool exact_is_zero(const CorrelationValue& v);

enum class Backend { Float, Exact };

struct CorrelationArgmax {
    int set_a = 0;
    int set_b = 0;
    int tau = 0;
};

struct CorrelationReport {
    int set_count = 0;   // K
    int flock_size = 0;  // M
    int length = 0;      // N
    double delta_max = 0.0;
    CorrelationArgmax argmax;
    // Observed |correlation| values rounded to 1e-6, with multiplicities.
    std::vector<std::pair<double, std::uint64_t>> histogram;
};

// Maximum |set correlation| over ordered set pairs with shifts 0..N-1,
// excluding only the in-phase self terms (a == b, tau == 0). Negative shifts
// are covered because both pair orders are scanned and
// |R_{A,B}(-tau)| == |R_{B,A}(tau)|. The scan order is pair-major and
// shift-minor; ties keep the first item, so the reported argmax does not
// depend on the worker count. workers == 0 picks the hardware concurrency.
CorrelationReport delta_max(const Qcss& q, Backend backend = Backend::Float,
                            int workers = 0);

}  // namespace florcc
