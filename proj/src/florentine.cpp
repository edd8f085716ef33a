#include "florcc/florentine.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace florcc {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

int smallest_prime_factor(int n) {
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) return d;
    }
    return n;
}

// C1: every row is a permutation of {0..n-1}. Returns a witness with
// displacement 0 on failure (col_a = first offending position).
std::optional<TuscanWitness> check_rows_are_permutations(const FlorentineRect& rect) {
    const int n = rect.n;
    std::vector<char> seen(n);
    for (int i = 0; i < rect.row_count(); ++i) {
        const auto& row = rect.rows[i];
        if (static_cast<int>(row.size()) != n) {
            return TuscanWitness{0, 0, 0, i, static_cast<int>(row.size()), i, 0};
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            const int v = row[j];
            if (v < 0 || v >= n || seen[v]) {
                return TuscanWitness{0, v, v, i, j, i, j};
            }
            seen[v] = 1;
        }
    }
    return std::nullopt;
}

FlorentineRect verified(FlorentineRect rect) {
    if (rect.n >= 2) {
        if (auto check = is_tuscan_k(rect, rect.n - 1); !check.ok) {
            throw std::runtime_error("internal construction error: " +
                                     check.witness->describe());
        }
    }
    return rect;
}

}  // namespace

const char* to_string(Construction c) {
    switch (c) {
        case Construction::LemmaPrimeTable: return "LemmaPrimeTable";
        case Construction::Thm1MultTable: return "Thm1MultTable";
        case Construction::Thm2EvenA: return "Thm2EvenA";
        case Construction::Thm3EvenB: return "Thm3EvenB";
        case Construction::Cor1Odd: return "Cor1Odd";
        case Construction::Handmade: return "Handmade";
    }
    return "Handmade";
}

std::optional<Construction> construction_from_string(const std::string& name) {
    static constexpr std::array<Construction, 6> all = {
        Construction::LemmaPrimeTable, Construction::Thm1MultTable,
        Construction::Thm2EvenA,       Construction::Thm3EvenB,
        Construction::Cor1Odd,         Construction::Handmade,
    };
    for (Construction c : all) {
        if (name == to_string(c)) return c;
    }
    return std::nullopt;
}

std::string TuscanWitness::describe() const {
    if (displacement == 0) {
        return "row " + std::to_string(row_a) + " is not a permutation (position " +
               std::to_string(col_a) + ")";
    }
    return "pair (" + std::to_string(symbol_a) + "," + std::to_string(symbol_b) +
           ") at displacement " + std::to_string(displacement) + " occurs at row " +
           std::to_string(row_a) + " col " + std::to_string(col_a) + " and row " +
           std::to_string(row_b) + " col " + std::to_string(col_b);
}

// The cross-row part of C2 reduces to a per-row-pair histogram: with
// pos_i(a) the column of symbol a in row i, a duplicated displaced pair
// between rows i and m at some displacement d is equivalent to two symbols
// a, b with pos_m(a) - pos_i(a) == pos_m(b) - pos_i(b) and
// d = |pos_i(b) - pos_i(a)| <= k. Same-row duplicates are impossible once C1
// holds. This gives O(rows^2 * n) instead of scanning every displacement.
TuscanCheck is_tuscan_k(const FlorentineRect& rect, int k) {
    const int n = rect.n;
    if (n < 1) throw std::invalid_argument("is_tuscan_k: empty rectangle");
    if (k < 1 || k > n - 1) {
        throw std::invalid_argument("is_tuscan_k: displacement bound must be in [1, n-1]");
    }
    if (auto bad = check_rows_are_permutations(rect)) {
        return TuscanCheck{false, bad};
    }

    const int r = rect.row_count();
    std::vector<std::vector<int>> pos(r, std::vector<int>(n));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) pos[i][rect.rows[i][j]] = j;
    }

    std::optional<TuscanWitness> best;
    // last_col[shift + n] = most recent row-i column seen in this shift bucket
    std::vector<int> last_col(2 * n, -1);
    for (int i = 0; i < r; ++i) {
        for (int m = i + 1; m < r; ++m) {
            std::fill(last_col.begin(), last_col.end(), -1);
            // Walk row i left to right so bucket entries arrive in column order;
            // the nearest same-bucket predecessor gives the smallest displacement
            // involving this column.
            for (int j = 0; j < n; ++j) {
                const int a = rect.rows[i][j];
                const int bucket = pos[m][a] - j + n;
                const int prev = last_col[bucket];
                last_col[bucket] = j;
                if (prev < 0) continue;
                const int d = j - prev;
                if (d > k) continue;
                const int sa = rect.rows[i][prev];
                TuscanWitness w{d, sa, a, i, prev, m, pos[m][sa]};
                if (!best || std::tie(w.displacement, w.row_a, w.row_b, w.col_a) <
                                 std::tie(best->displacement, best->row_a,
                                          best->row_b, best->col_a)) {
                    best = w;
                }
            }
        }
    }
    if (best) return TuscanCheck{false, best};
    return TuscanCheck{true, std::nullopt};
}

bool is_latin(const FlorentineRect& rect) {
    const int n = rect.n;
    if (rect.row_count() != n) return false;
    if (check_rows_are_permutations(rect)) return false;
    std::vector<char> seen(n);
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            const int v = rect.rows[i][j];
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

bool is_vatican(const FlorentineRect& rect) {
    return is_latin(rect) && is_tuscan_k(rect, rect.n - 1).ok;
}

FlorentineRect vatican_from_prime(int p) {
    if (p < 3 || !is_prime(p)) {
        throw std::invalid_argument("vatican_from_prime: need an odd prime, got " +
                                    std::to_string(p));
    }
    FlorentineRect rect;
    rect.n = p - 1;
    rect.construction = Construction::LemmaPrimeTable;
    rect.source_modulus = p;
    rect.rows.resize(p - 1, std::vector<int>(p - 1));
    for (int i = 0; i < p - 1; ++i) {
        for (int j = 0; j < p - 1; ++j) {
            rect.rows[i][j] = static_cast<int>(
                (static_cast<long long>(i + 1) * (j + 1)) % p) - 1;
        }
    }
    return verified(std::move(rect));
}

FlorentineRect florentine_mult_table(int n) {
    if (n < 2) throw std::invalid_argument("florentine_mult_table: need n >= 2");
    const int p = smallest_prime_factor(n);
    FlorentineRect rect;
    rect.n = n;
    rect.construction = Construction::Thm1MultTable;
    rect.source_modulus = n;
    rect.rows.resize(p - 1, std::vector<int>(n));
    for (int i = 0; i < p - 1; ++i) {
        for (int j = 0; j < n; ++j) {
            rect.rows[i][j] =
                static_cast<int>((static_cast<long long>(i + 1) * j) % n);
        }
    }
    return verified(std::move(rect));
}

namespace {

// Shared shape of the two four-row even constructions: rows 0 and 1 are
// given on columns 1..m (1-indexed) and reflected onto columns m+1..N via
// A[i][j] = (N+1) - A[i][N+1-j]; rows 2 and 3 are the column-reversals of
// rows 1 and 0. first_half(i, j) supplies A[i][j] for i in {0,1}, 1 <= j <= m.
template <typename FirstHalf>
FlorentineRect four_row_even(int n, Construction tag, FirstHalf first_half) {
    const int m = n / 2;
    std::vector<std::vector<int>> one_indexed(4, std::vector<int>(n + 1, 0));
    for (int i = 0; i < 2; ++i) {
        for (int j = 1; j <= m; ++j) one_indexed[i][j] = first_half(i, j);
        for (int j = m + 1; j <= n; ++j) {
            one_indexed[i][j] = (n + 1) - one_indexed[i][n + 1 - j];
        }
    }
    for (int i = 2; i <= 3; ++i) {
        for (int j = 1; j <= n; ++j) one_indexed[i][j] = one_indexed[3 - i][n + 1 - j];
    }
    FlorentineRect rect;
    rect.n = n;
    rect.construction = tag;
    rect.source_modulus = n + 1;
    rect.rows.resize(4, std::vector<int>(n));
    for (int i = 0; i < 4; ++i) {
        for (int j = 1; j <= n; ++j) rect.rows[i][j - 1] = one_indexed[i][j] - 1;
    }
    return verified(std::move(rect));
}

}  // namespace

FlorentineRect florentine_even_a(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("florentine_even_a: need even n >= 4");
    }
    const int m = n / 2;
    if (m % 3 == 1) {
        throw std::invalid_argument(
            "florentine_even_a: requires n/2 != 1 (mod 3), got n = " + std::to_string(n));
    }
    return four_row_even(n, Construction::Thm2EvenA, [&](int i, int j) {
        return (i == 0 ? j : 2 * j) % (n + 1);
    });
}

FlorentineRect florentine_even_b(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("florentine_even_b: need even n >= 4");
    }
    const int m = n / 2;
    if (m % 3 == 0) {
        throw std::invalid_argument(
            "florentine_even_b: requires n/2 != 0 (mod 3), got n = " + std::to_string(n));
    }
    return four_row_even(n, Construction::Thm3EvenB, [&](int i, int j) {
        return i == 0 ? j : 1 + (2 * (j - 1) + m - 1) % n;
    });
}

FlorentineRect florentine_odd(int n) {
    if (n < 5 || n % 2 == 0) {
        throw std::invalid_argument("florentine_odd: need odd n >= 5");
    }
    const int even_n = n - 1;
    FlorentineRect base = (even_n / 2) % 3 != 1 ? florentine_even_a(even_n)
                                                : florentine_even_b(even_n);
    FlorentineRect rect;
    rect.n = n;
    rect.construction = Construction::Cor1Odd;
    rect.source_modulus = n;
    rect.rows = std::move(base.rows);
    for (auto& row : rect.rows) row.push_back(n - 1);
    return verified(std::move(rect));
}

FlorentineRect strip_and_shift(const FlorentineRect& rect) {
    const int r = rect.row_count();
    if (r == 0 || rect.n < 2) {
        throw std::invalid_argument("strip_and_shift: empty rectangle");
    }
    int zero_col = -1;
    for (int j = 0; j < rect.n && zero_col < 0; ++j) {
        bool all_zero = true;
        for (int i = 0; i < r; ++i) all_zero = all_zero && rect.rows[i][j] == 0;
        if (all_zero) zero_col = j;
    }
    if (zero_col < 0) {
        throw std::invalid_argument("strip_and_shift: rectangle has no all-zero column");
    }
    FlorentineRect out;
    out.n = rect.n - 1;
    out.construction = rect.construction;
    out.source_modulus = rect.source_modulus;
    out.rows.resize(r);
    for (int i = 0; i < r; ++i) {
        out.rows[i].reserve(out.n);
        for (int j = 0; j < rect.n; ++j) {
            if (j != zero_col) out.rows[i].push_back(rect.rows[i][j] - 1);
        }
    }
    return verified(std::move(out));
}

std::string PairUniquenessWitness::describe() const {
    return "rows " + std::to_string(k1) + " and " + std::to_string(k2) +
           " at shift " + std::to_string(tau) + " agree at positions " +
           std::to_string(j1) + " and " + std::to_string(j2);
}

std::optional<PairUniquenessWitness> pair_uniqueness_violation(
    int n, const std::vector<std::vector<int>>& perms) {
    const int f = static_cast<int>(perms.size());
    std::vector<int> pos(n);
    for (int k1 = 0; k1 < f; ++k1) {
        for (int k2 = 0; k2 < f; ++k2) {
            if (k1 == k2) continue;
            // perms[k1](j) == perms[k2](j + tau) groups j by
            // tau = pos_{k2}(symbol) - j; two j in one group violate.
            for (int j = 0; j < n; ++j) pos[perms[k2][j]] = j;
            std::vector<int> first_j(2 * n, -1);
            for (int j = 0; j < n; ++j) {
                const int tau = pos[perms[k1][j]] - j;
                if (tau < 0) continue;  // needs 0 <= j + tau < n
                if (first_j[tau] >= 0) {
                    return PairUniquenessWitness{k1, k2, tau, first_j[tau], j};
                }
                first_j[tau] = j;
            }
        }
    }
    return std::nullopt;
}

PermutationFamily PermutationFamily::from_rows(int n,
                                               std::vector<std::vector<int>> rows) {
    if (n < 1) throw std::invalid_argument("permutation family: need n >= 1");
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw std::invalid_argument("permutation family: row " + std::to_string(i) +
                                        " has wrong length");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int v : rows[i]) {
            if (v < 0 || v >= n || seen[v]) {
                throw std::invalid_argument("permutation family: row " +
                                            std::to_string(i) + " is not a bijection");
            }
            seen[v] = 1;
        }
    }
    if (auto w = pair_uniqueness_violation(n, rows)) {
        throw std::invalid_argument("permutation family: pair uniqueness fails: " +
                                    w->describe());
    }
    PermutationFamily family;
    family.n = n;
    family.perms = std::move(rows);
    return family;
}

ConstructionPlan plan_best_florentine(int n) {
    if (n < 2) throw std::invalid_argument("best_florentine: need n >= 2");
    if (n == 2) return {2, 2, 0, Construction::Handmade, 2};
    if (is_prime(n + 1)) return {n, n, 1, Construction::LemmaPrimeTable, n + 1};
    if (is_prime(n)) return {n, n - 1, 2, Construction::LemmaPrimeTable, n};
    const int p0 = smallest_prime_factor(n);
    const int e0 = smallest_prime_factor(n + 1);
    if (std::max(p0, e0) >= 5) {
        // Ties cannot happen: n and n+1 are coprime.
        if (p0 > e0) return {n, p0 - 1, 3, Construction::Thm1MultTable, n};
        return {n, e0 - 1, 3, Construction::Thm1MultTable, n + 1};
    }
    if (n % 2 == 0) {
        const Construction tag =
            (n / 2) % 3 != 1 ? Construction::Thm2EvenA : Construction::Thm3EvenB;
        return {n, 4, 4, tag, n + 1};
    }
    return {n, 4, 4, Construction::Cor1Odd, n};
}

BestFlorentine best_florentine(int n) {
    const ConstructionPlan plan = plan_best_florentine(n);
    FlorentineRect rect;
    switch (plan.rule) {
        case 0:
            rect.n = 2;
            rect.rows = {{0, 1}, {1, 0}};
            rect.construction = Construction::Handmade;
            rect.source_modulus = 2;
            rect = verified(std::move(rect));
            break;
        case 1:
            rect = vatican_from_prime(n + 1);
            break;
        case 2:
            // Prime-table square over n with its zero column restored: row i
            // is ((i+1)*j mod n), so symbols stay a permutation of Z_n.
            rect = florentine_mult_table(n);
            rect.construction = Construction::LemmaPrimeTable;
            break;
        case 3:
            rect = plan.source_modulus == n
                       ? florentine_mult_table(n)
                       : strip_and_shift(florentine_mult_table(n + 1));
            break;
        default:
            if (n % 2 == 0) {
                rect = plan.construction == Construction::Thm2EvenA
                           ? florentine_even_a(n)
                           : florentine_even_b(n);
            } else {
                rect = florentine_odd(n);
            }
            break;
    }
    if (rect.n != n || rect.row_count() != plan.f) {
        throw std::runtime_error("internal construction error: plan mismatch for n = " +
                                 std::to_string(n));
    }
    BestFlorentine out;
    out.family = PermutationFamily::from_rows(n, rect.rows);
    out.rect = std::move(rect);
    out.plan = plan;
    return out;
}

namespace {

// Backtracking state for max_florentine_search. Symmetry is broken by fixing
// the first row to the identity (symbol relabeling) and requiring rows to be
// lexicographically increasing (row order), so exhaustion proves maximality.
// Each recursion depth owns its row buffer and symbol-occupancy mask.
struct Searcher {
    int n;
    int row_limit;
    std::uint64_t budget;  // 0 = unlimited
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    std::vector<std::vector<char>> used;  // used[d-1][a*n+b]
    std::vector<std::vector<int>> rows;   // completed rows
    std::vector<std::vector<int>> cur;    // cur[depth] = row under construction
    std::vector<std::vector<char>> occ;   // occ[depth][sym]
    std::vector<std::vector<int>> best;

    Searcher(int n, int row_limit, std::uint64_t budget)
        : n(n), row_limit(row_limit), budget(budget),
          used(n - 1, std::vector<char>(n * n, 0)),
          cur(row_limit, std::vector<int>(n)),
          occ(row_limit, std::vector<char>(n, 0)) {}

    void mark(const std::vector<int>& row, char v) {
        for (int d = 1; d < n; ++d) {
            for (int j = d; j < n; ++j) used[d - 1][row[j - d] * n + row[j]] = v;
        }
    }

    bool placeable(const std::vector<int>& row, int pos, int sym) const {
        for (int d = 1; d <= pos; ++d) {
            if (used[d - 1][row[pos - d] * n + sym]) return false;
        }
        return true;
    }

    bool spend() {
        ++nodes;
        if (budget != 0 && nodes > budget) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // Places position pos of row `depth`; tight tracks whether its prefix
    // still equals the previous row. Prefixes of length >= 2 can never stay
    // equal (the shared adjacent pair is pruned), so tight dies at pos 1.
    void extend(int depth, int pos, bool tight) {
        if (out_of_budget) return;
        auto& row = cur[depth];
        if (pos == n) {
            rows.push_back(row);
            if (rows.size() > best.size()) best = rows;
            if (static_cast<int>(rows.size()) < row_limit) {
                mark(row, 1);
                start_row(depth + 1);
                mark(row, 0);
            }
            rows.pop_back();
            return;
        }
        const int lo = tight ? rows[depth - 1][pos] + 1 : 0;
        for (int sym = lo; sym < n; ++sym) {
            if (occ[depth][sym] || !placeable(row, pos, sym)) continue;
            if (!spend()) return;
            row[pos] = sym;
            occ[depth][sym] = 1;
            extend(depth, pos + 1, false);
            occ[depth][sym] = 0;
            if (out_of_budget) return;
        }
    }

    void start_row(int depth) {
        // First symbol ranges over everything >= the previous row's first;
        // an equal first symbol forces a strictly larger second symbol.
        const int prev_first = rows[depth - 1][0];
        for (int sym = prev_first; sym < n; ++sym) {
            if (!spend()) return;
            cur[depth][0] = sym;
            occ[depth][sym] = 1;
            extend(depth, 1, sym == prev_first);
            occ[depth][sym] = 0;
            if (out_of_budget) return;
        }
    }

    void run() {
        std::vector<int> identity(n);
        for (int j = 0; j < n; ++j) identity[j] = j;
        rows.push_back(identity);
        best = rows;
        if (row_limit > 1) {
            mark(identity, 1);
            start_row(1);
        }
    }
};

}  // namespace

SearchResult max_florentine_search(int n, int row_limit, std::uint64_t node_budget,
                                   int n_cap) {
    if (n < 2) throw std::invalid_argument("max_florentine_search: need n >= 2");
    if (n > n_cap) {
        throw std::invalid_argument("max_florentine_search: n = " + std::to_string(n) +
                                    " exceeds the search cap " + std::to_string(n_cap));
    }
    if (row_limit <= 0 || row_limit > n) row_limit = n;

    Searcher s(n, row_limit, node_budget);
    s.run();

    SearchResult result;
    result.best_rows = static_cast<int>(s.best.size());
    result.rect.n = n;
    result.rect.rows = s.best;
    result.rect.construction = Construction::Handmade;
    result.rect.source_modulus = n;
    result.status = s.out_of_budget ? SearchStatus::BudgetExhausted
                                    : SearchStatus::ProvenMaximum;
    result.nodes = s.nodes;
    if (auto check = is_tuscan_k(result.rect, n - 1); !check.ok) {
        throw std::runtime_error("internal search error: " + check.witness->describe());
    }
    return result;
}

}  // namespace florcc
