#include "florcc/seqgen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace florcc {

std::vector<int> phase_row(const std::vector<int>& pi, int m, int s) {
    const int n = static_cast<int>(pi.size());
    if (n < 1) throw std::invalid_argument("phase_row: empty permutation");
    std::vector<char> seen(n, 0);
    for (int v : pi) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument("phase_row: input is not a bijection on Z_n");
        }
        seen[v] = 1;
    }
    if (m < 0 || m >= n || s < 0 || s >= n) {
        throw std::invalid_argument("phase_row: m and s must lie in Z_n");
    }
    std::vector<int> row(n);
    for (int t = 0; t < n; ++t) {
        row[t] = static_cast<int>(
            (static_cast<long long>(s) * pi[t] + static_cast<long long>(m) * t) % n);
    }
    return row;
}

Ccc build_ccc(const PermutationFamily& family, int k) {
    if (k < 0 || k >= family.f_value()) {
        throw std::invalid_argument("build_ccc: generator index " + std::to_string(k) +
                                    " out of range [0, " +
                                    std::to_string(family.f_value()) + ")");
    }
    const int n = family.n;
    const auto& pi = family.perms[k];
    Ccc ccc;
    ccc.n = n;
    ccc.k = k;
    ccc.sets.reserve(n);
    for (int m = 0; m < n; ++m) {
        SequenceSet set;
        set.n = n;
        set.k = k;
        set.m = m;
        set.exponents.reserve(n);
        for (int s = 0; s < n; ++s) set.exponents.push_back(phase_row(pi, m, s));
        ccc.sets.push_back(std::move(set));
    }
    return ccc;
}

Qcss build_qcss(const PermutationFamily& family) {
    if (family.f_value() == 0) throw std::invalid_argument("build_qcss: empty family");
    Qcss q;
    q.n = family.n;
    q.k_count = family.f_value();
    q.sets.reserve(static_cast<std::size_t>(family.n) * family.f_value());
    for (int k = 0; k < family.f_value(); ++k) {
        Ccc ccc = build_ccc(family, k);
        std::move(ccc.sets.begin(), ccc.sets.end(), std::back_inserter(q.sets));
    }
    return q;
}

}  // namespace florcc
