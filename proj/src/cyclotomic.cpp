#include "florcc/cyclotomic.hpp"

#include <stdexcept>

namespace florcc {

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b, remainder discarded must be zero (exact division).
Poly divide_exact(Poly a, const Poly& b) {
    if (b.empty() || b.back() != 1) {
        throw std::logic_error("divide_exact: divisor must be monic");
    }
    if (a.size() < b.size()) throw std::logic_error("divide_exact: degree underflow");
    Poly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        const std::int64_t c = a[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

}  // namespace

Poly cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: need n >= 1");
    // x^n - 1
    Poly acc(n + 1, 0);
    acc[0] = -1;
    acc[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) acc = divide_exact(std::move(acc), cyclotomic_poly(d));
    }
    return acc;
}

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(cyclotomic_poly(n)) {
    power_residue_.reserve(n);
    for (int e = 0; e < n; ++e) {
        Poly p(e + 1, 0);
        p[e] = 1;
        power_residue_.push_back(reduce(std::move(p)));
    }
}

Poly CyclotomicField::reduce(Poly p) const {
    trim(p);
    while (p.size() >= phi_.size()) {
        const std::int64_t c = p.back();
        const std::size_t shift = p.size() - phi_.size();
        for (std::size_t j = 0; j < phi_.size(); ++j) p[shift + j] -= c * phi_[j];
        trim(p);
    }
    return p;
}

bool CyclotomicField::is_zero_sum(const std::vector<std::int64_t>& counts) const {
    if (static_cast<int>(counts.size()) != n_) {
        throw std::invalid_argument("is_zero_sum: counts length != field order");
    }
    return reduce(Poly(counts.begin(), counts.end())).empty();
}

std::optional<int> CyclotomicField::as_root_multiple(
    const std::vector<std::int64_t>& counts, std::int64_t scale) const {
    if (scale == 0) throw std::invalid_argument("as_root_multiple: zero scale");
    Poly r = reduce(Poly(counts.begin(), counts.end()));
    for (int e = 0; e < n_; ++e) {
        const Poly& pw = power_residue_[e];
        if (r.size() != pw.size()) continue;
        bool match = true;
        for (std::size_t j = 0; j < r.size() && match; ++j) {
            match = r[j] == scale * pw[j];
        }
        if (match) return e;
    }
    return std::nullopt;
}

}  // namespace florcc
