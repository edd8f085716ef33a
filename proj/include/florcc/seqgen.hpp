#pragma once

// Sequence-set synthesis from permutation families. A sequence set is stored
// as an N x N matrix of phase exponents over Z_n; entry e stands for the
// unimodular value w_n^e. Row s of set (k, m) is
//     s * perm_k(t) + m * t  (mod n),  t = 0..n-1,
// so a family of F permutations yields F complete complementary codes of N
// sets each, and their union is the (N*F, N, N) spreading family.

#include <vector>

#include "florcc/florentine.hpp"

namespace florcc {

struct SequenceSet {
    int n = 0;  // alphabet size == flock size == length
    int k = 0;  // generator (code family) index
    int m = 0;  // set index within its family
    std::vector<std::vector<int>> exponents;  // M x N over Z_n
};

// Single sequence of phase exponents: (s * pi(t) + m * t) mod n. pi must be a
// bijection on {0..n-1} and 0 <= m, s < n.
std::vector<int> phase_row(const std::vector<int>& pi, int m, int s);

struct Ccc {
    int n = 0;
    int k = 0;
    std::vector<SequenceSet> sets;  // sets[m].m == m
};

struct Qcss {
    int n = 0;
    int k_count = 0;                // number of merged code families (F)
    std::vector<SequenceSet> sets;  // family-major, m ascending

    int set_count() const { return static_cast<int>(sets.size()); }  // K = n * F
    int flock_size() const { return n; }                             // M
    int length() const { return n; }                                 // N
};

Ccc build_ccc(const PermutationFamily& family, int k);

// Concatenation of build_ccc(family, k) for k = 0..F-1.
Qcss build_qcss(const PermutationFamily& family);

}  // namespace florcc
