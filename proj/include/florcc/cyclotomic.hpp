#pragma once

// Exact arithmetic over Z[w] for w a primitive n-th root of unity. A sum of
// roots is represented by its multiplicity vector counts[j] (coefficient of
// w^j); the sum vanishes iff the polynomial sum counts[j] x^j is divisible by
// the n-th cyclotomic polynomial. All coefficients are int64; at the scales
// used here (n <= a few hundred, counts bounded by n^2) this never overflows.

#include <cstdint>
#include <optional>
#include <vector>

namespace florcc {

// Dense integer polynomial, coeffs[i] = coefficient of x^i, no trailing zeros.
using Poly = std::vector<std::int64_t>;

// x^n - 1 divided by the product of the lower-order cyclotomic polynomials,
// computed by exact division. n >= 1.
Poly cyclotomic_poly(int n);

// Cached reducer modulo a fixed cyclotomic polynomial.
class CyclotomicField {
  public:
    explicit CyclotomicField(int n);

    int order() const { return n_; }
    const Poly& modulus() const { return phi_; }

    // p mod Phi_n (empty result means zero).
    Poly reduce(Poly p) const;

    // True iff sum counts[j] w^j == 0.
    bool is_zero_sum(const std::vector<std::int64_t>& counts) const;

    // If sum counts[j] w^j == scale * w^e for some exponent e, returns e
    // (smallest such); nullopt otherwise. scale must be nonzero.
    std::optional<int> as_root_multiple(const std::vector<std::int64_t>& counts,
                                        std::int64_t scale) const;

  private:
    int n_;
    Poly phi_;
    std::vector<Poly> power_residue_;  // x^e mod Phi_n for e in [0, n)
};

}  // namespace florcc
