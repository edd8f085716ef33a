#include "florcc/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "florcc/cyclotomic.hpp"

namespace florcc {

namespace {

std::vector<std::complex<double>> root_table(int n) {
    std::vector<std::complex<double>> w(n);
    for (int j = 0; j < n; ++j) {
        w[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    }
    return w;
}

std::complex<double> evaluate(const std::vector<std::int64_t>& counts,
                              const std::vector<std::complex<double>>& w) {
    std::complex<double> acc;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] != 0) acc += static_cast<double>(counts[j]) * w[j];
    }
    return acc;
}

void accumulate_counts(const std::vector<int>& c, const std::vector<int>& d, int n,
                       int tau, std::vector<std::int64_t>& counts) {
    const int len = static_cast<int>(c.size());
    if (tau >= 0) {
        for (int t = 0; t + tau < len; ++t) {
            int diff = c[t] - d[t + tau];
            if (diff < 0) diff += n;
            ++counts[diff];
        }
    } else {
        for (int t = 0; t - tau < len; ++t) {
            int diff = c[t - tau] - d[t];
            if (diff < 0) diff += n;
            ++counts[diff];
        }
    }
}

}  // namespace

CorrelationValue acf(const std::vector<int>& c, const std::vector<int>& d, int n,
                     int tau) {
    if (n < 1) throw std::invalid_argument("acf: need root order n >= 1");
    if (c.size() != d.size() || c.empty()) {
        throw std::invalid_argument("acf: rows must have equal nonzero length");
    }
    const int len = static_cast<int>(c.size());
    if (tau <= -len || tau >= len) {
        throw std::invalid_argument("acf: |tau| must be below the row length");
    }
    for (int v : c) {
        if (v < 0 || v >= n) throw std::invalid_argument("acf: exponent outside Z_n");
    }
    for (int v : d) {
        if (v < 0 || v >= n) throw std::invalid_argument("acf: exponent outside Z_n");
    }
    CorrelationValue out;
    out.n = n;
    out.counts.assign(n, 0);
    accumulate_counts(c, d, n, tau, out.counts);
    out.value = evaluate(out.counts, root_table(n));
    return out;
}

CorrelationValue set_correlation(const SequenceSet& a, const SequenceSet& b, int tau) {
    if (a.n != b.n || a.exponents.size() != b.exponents.size()) {
        throw std::invalid_argument("set_correlation: shape mismatch");
    }
    if (a.exponents.empty()) throw std::invalid_argument("set_correlation: empty set");
    const int n = a.n;
    const int len = static_cast<int>(a.exponents[0].size());
    if (tau <= -len || tau >= len) {
        throw std::invalid_argument("set_correlation: |tau| must be below the length");
    }
    CorrelationValue out;
    out.n = n;
    out.counts.assign(n, 0);
    for (std::size_t r = 0; r < a.exponents.size(); ++r) {
        if (a.exponents[r].size() != b.exponents[r].size() ||
            static_cast<int>(a.exponents[r].size()) != len) {
            throw std::invalid_argument("set_correlation: ragged rows");
        }
        accumulate_counts(a.exponents[r], b.exponents[r], n, tau, out.counts);
    }
    out.value = evaluate(out.counts, root_table(n));
    return out;
}

bool exact_is_zero(const CorrelationValue& v) {
    return CyclotomicField(v.n).is_zero_sum(v.counts);
}

namespace {

struct ScanItem {
    double magnitude = -1.0;
    std::uint64_t index = 0;  // global (pair, tau) rank for deterministic ties
};

struct WorkerState {
    ScanItem best;
    std::map<std::int64_t, std::uint64_t> histogram;  // key = round(mag * 1e6)

    void observe(double mag, std::uint64_t index) {
        ++histogram[std::llround(mag * 1e6)];
        if (mag > best.magnitude ||
            (mag == best.magnitude && index < best.index)) {
            best = {mag, index};
        }
    }
};

// Scans the ordered pair range [pair_lo, pair_hi) of the flattened index
// a * K + b. Shift tau runs over 0..N-1, skipping the in-phase self term.
template <typename Eval>
void scan_range(int K, int N, std::uint64_t pair_lo, std::uint64_t pair_hi,
                WorkerState& state, Eval eval) {
    for (std::uint64_t pr = pair_lo; pr < pair_hi; ++pr) {
        const int a = static_cast<int>(pr / K);
        const int b = static_cast<int>(pr % K);
        for (int tau = (a == b) ? 1 : 0; tau < N; ++tau) {
            state.observe(eval(a, b, tau), pr * N + tau);
        }
    }
}

}  // namespace

CorrelationReport delta_max(const Qcss& q, Backend backend, int workers) {
    if (q.sets.empty()) throw std::invalid_argument("delta_max: empty spreading family");
    const int K = q.set_count();
    const int M = q.flock_size();
    const int N = q.length();
    const int n = q.n;

    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    const std::uint64_t pair_count = static_cast<std::uint64_t>(K) * K;
    workers = static_cast<int>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(pair_count, 1)));

    const auto w = root_table(n);

    // Per-worker evaluation closures. Float materializes the complex
    // sequences once and correlates them directly; Exact accumulates
    // multiplicity vectors and certifies zeros through the cyclotomic field.
    std::vector<std::vector<std::vector<std::complex<double>>>> cm;
    std::unique_ptr<CyclotomicField> field;
    if (backend == Backend::Float) {
        cm.resize(K);
        for (int i = 0; i < K; ++i) {
            cm[i].resize(M);
            for (int r = 0; r < M; ++r) {
                cm[i][r].resize(N);
                for (int t = 0; t < N; ++t) {
                    cm[i][r][t] = w[q.sets[i].exponents[r][t]];
                }
            }
        }
    } else {
        field = std::make_unique<CyclotomicField>(n);
    }

    std::vector<WorkerState> states(workers);
    auto run_worker = [&](int wi) {
        const std::uint64_t lo = pair_count * wi / workers;
        const std::uint64_t hi = pair_count * (wi + 1) / workers;
        if (backend == Backend::Float) {
            auto eval = [&](int a, int b, int tau) {
                std::complex<double> acc;
                for (int r = 0; r < M; ++r) {
                    const auto& x = cm[a][r];
                    const auto& y = cm[b][r];
                    for (int t = 0; t + tau < N; ++t) acc += x[t] * std::conj(y[t + tau]);
                }
                return std::abs(acc);
            };
            scan_range(K, N, lo, hi, states[wi], eval);
        } else {
            std::vector<std::int64_t> counts(n);
            auto eval = [&](int a, int b, int tau) {
                std::fill(counts.begin(), counts.end(), 0);
                for (int r = 0; r < M; ++r) {
                    accumulate_counts(q.sets[a].exponents[r], q.sets[b].exponents[r], n,
                                      tau, counts);
                }
                if (field->is_zero_sum(counts)) return 0.0;
                return std::abs(evaluate(counts, w));
            };
            scan_range(K, N, lo, hi, states[wi], eval);
        }
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int wi = 0; wi < workers; ++wi) pool.emplace_back(run_worker, wi);
        for (auto& t : pool) t.join();
    }

    ScanItem best;
    std::map<std::int64_t, std::uint64_t> histogram;
    for (const auto& st : states) {
        if (st.best.magnitude > best.magnitude ||
            (st.best.magnitude == best.magnitude && st.best.index < best.index)) {
            best = st.best;
        }
        for (const auto& [key, cnt] : st.histogram) histogram[key] += cnt;
    }

    CorrelationReport report;
    report.set_count = K;
    report.flock_size = M;
    report.length = N;
    report.delta_max = std::max(best.magnitude, 0.0);
    const std::uint64_t pr = best.index / N;
    report.argmax = {static_cast<int>(pr / K), static_cast<int>(pr % K),
                     static_cast<int>(best.index % N)};
    report.histogram.reserve(histogram.size());
    for (const auto& [key, cnt] : histogram) {
        report.histogram.emplace_back(static_cast<double>(key) / 1e6, cnt);
    }
    return report;
}

}  // namespace florcc
