#include <doctest.h>

#include <stdexcept>

#include "florcc/cyclotomic.hpp"

using namespace florcc;

namespace {

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

int euler_phi(int n) {
    int count = 0;
    for (int k = 1; k <= n; ++k) {
        int a = k, b = n;
        while (b) {
            const int t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == Poly{-1, 1});
    CHECK(cyclotomic_poly(2) == Poly{1, 1});
    CHECK(cyclotomic_poly(3) == Poly{1, 1, 1});
    CHECK(cyclotomic_poly(4) == Poly{1, 0, 1});
    CHECK(cyclotomic_poly(6) == Poly{1, -1, 1});
    CHECK(cyclotomic_poly(12) == Poly{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
}

TEST_CASE("product over divisors reconstructs x^n - 1") {
    for (int n = 1; n <= 40; ++n) {
        CAPTURE(n);
        Poly prod = {1};
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) prod = multiply(prod, cyclotomic_poly(d));
        }
        Poly expected(n + 1, 0);
        expected[0] = -1;
        expected[n] = 1;
        CHECK(prod == expected);
    }
}

TEST_CASE("degree equals Euler phi") {
    for (int n = 1; n <= 64; ++n) {
        CAPTURE(n);
        CHECK(static_cast<int>(cyclotomic_poly(n).size()) - 1 == euler_phi(n));
    }
}

TEST_CASE("zero sums of roots of unity") {
    for (int n = 2; n <= 12; ++n) {
        CAPTURE(n);
        const CyclotomicField field(n);
        CHECK(field.is_zero_sum(std::vector<std::int64_t>(n, 1)));
        std::vector<std::int64_t> peak(n, 0);
        peak[0] = n;
        CHECK_FALSE(field.is_zero_sum(peak));
    }
    CHECK_THROWS_AS(CyclotomicField(4).is_zero_sum({1, 2}), std::invalid_argument);
}

TEST_CASE("recognizing scaled single roots") {
    const CyclotomicField field(7);
    std::vector<std::int64_t> counts(7, 0);
    counts[3] = 5;
    CHECK(field.as_root_multiple(counts, 5) == 3);
    CHECK_FALSE(field.as_root_multiple(counts, 4).has_value());

    // Adding a full geometric sum (which vanishes) must not change the answer.
    for (auto& c : counts) c += 9;
    CHECK(field.as_root_multiple(counts, 5) == 3);

    counts.assign(7, 0);
    counts[0] = 1;
    counts[1] = 1;
    CHECK_FALSE(field.as_root_multiple(counts, 1).has_value());
    CHECK_THROWS_AS(field.as_root_multiple(counts, 0), std::invalid_argument);
}

TEST_CASE("reduction handles high-degree inputs") {
    const CyclotomicField field(5);  // Phi_5 = 1 + x + x^2 + x^3 + x^4
    // x^5 reduces to 1, x^6 to x.
    CHECK(field.reduce({0, 0, 0, 0, 0, 1}) == Poly{1});
    CHECK(field.reduce({0, 0, 0, 0, 0, 0, 1}) == Poly{0, 1});
    CHECK(field.reduce({}).empty());
}
