#pragma once

// Florentine / Tuscan-k rectangle constructions over Z_n and the exact
// combinatorial checks that validate them.
//
// A Tuscan-k rectangle has rows that are permutations of {0..n-1} such that
// for every displacement 1 <= d <= k, each ordered symbol pair (a, b) with b
// exactly d steps to the right of a appears in at most one (row, position).
// Tuscan-(n-1) rectangles are called Florentine; square ones that are also
// Latin are called Vatican.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace florcc {

// Which systematic route produced a rectangle.
enum class Construction {
    LemmaPrimeTable,  // multiplication table of Z_p without the zero border
    Thm1MultTable,    // rows 1..p-1 of the multiplication table of Z_n
    Thm2EvenA,        // four-row construction for even n, n/2 != 1 (mod 3)
    Thm3EvenB,        // four-row construction for even n, n/2 != 0 (mod 3)
    Cor1Odd,          // even construction on n-1 plus a constant column
    Handmade,
};

const char* to_string(Construction c);
std::optional<Construction> construction_from_string(const std::string& name);

struct FlorentineRect {
    int n = 0;  // number of symbols == number of columns
    std::vector<std::vector<int>> rows;
    Construction construction = Construction::Handmade;
    int source_modulus = 0;  // modulus the construction ran over (n or n+1)

    int row_count() const { return static_cast<int>(rows.size()); }
};

// Failure evidence for the Tuscan check. displacement == 0 flags a C1
// failure (some row is not a permutation); otherwise the ordered pair
// (symbol_a, symbol_b) occurs at the given displacement starting at both
// (row_a, col_a) and (row_b, col_b).
struct TuscanWitness {
    int displacement = 0;
    int symbol_a = 0;
    int symbol_b = 0;
    int row_a = 0;
    int col_a = 0;
    int row_b = 0;
    int col_b = 0;

    std::string describe() const;
};

struct TuscanCheck {
    bool ok = false;
    std::optional<TuscanWitness> witness;

    explicit operator bool() const { return ok; }
};

// Checks C1 (rows are permutations) and C2 (displaced-pair uniqueness up to
// displacement k). On failure the witness is the lexicographically smallest
// violation ordered by (displacement, row_a, row_b, col_a).
TuscanCheck is_tuscan_k(const FlorentineRect& rect, int k);

bool is_latin(const FlorentineRect& rect);
bool is_vatican(const FlorentineRect& rect);

// (p-1) x (p-1) Vatican square from the multiplication table of Z_p without
// the zero row/column, entries shifted down to symbols {0..p-2}. Requires an
// odd prime.
FlorentineRect vatican_from_prime(int p);

// (p-1) x n rectangle whose row i is ((i+1)*j mod n), p the smallest prime
// factor of n. Column 0 is all zeros.
FlorentineRect florentine_mult_table(int n);

// Four-row rectangles for even n >= 4. Route A requires n/2 != 1 (mod 3),
// route B requires n/2 != 0 (mod 3). Symbols are {0..n-1}.
FlorentineRect florentine_even_a(int n);
FlorentineRect florentine_even_b(int n);

// Four-row rectangle for odd n >= 5: the even construction on n-1 with a
// trailing column holding the new largest symbol n-1.
FlorentineRect florentine_odd(int n);

// Removes the all-zero column and relabels symbols down by one. Requires the
// rectangle to contain an all-zero column; preserves the Tuscan property.
FlorentineRect strip_and_shift(const FlorentineRect& rect);

// A family of row permutations with the pair-uniqueness property needed by
// the sequence constructions: for k1 != k2 and every shift 0 <= tau < n,
// perm[k1](j) == perm[k2](j + tau) has at most one solution j.
struct PermutationFamily {
    int n = 0;
    std::vector<std::vector<int>> perms;

    int f_value() const { return static_cast<int>(perms.size()); }

    // Validates bijectivity and pair-uniqueness; throws std::invalid_argument
    // with a description of the first violation.
    static PermutationFamily from_rows(int n, std::vector<std::vector<int>> rows);
};

struct PairUniquenessWitness {
    int k1 = 0, k2 = 0, tau = 0, j1 = 0, j2 = 0;
    std::string describe() const;
};

// Direct enumeration of the pair-uniqueness property over all row pairs and
// shifts; nullopt when the family satisfies it.
std::optional<PairUniquenessWitness> pair_uniqueness_violation(int n,
    const std::vector<std::vector<int>>& perms);

// How best_florentine(n) will build its rectangle, decided from the prime
// structure of n and n+1 alone. f is the resulting row count F(n).
struct ConstructionPlan {
    int n = 0;
    int f = 0;
    int rule = 0;  // selection rule 1..4 (0 for the handmade n=2 case)
    Construction construction = Construction::Handmade;
    int source_modulus = 0;
};

ConstructionPlan plan_best_florentine(int n);

struct BestFlorentine {
    FlorentineRect rect;
    PermutationFamily family;
    ConstructionPlan plan;
};

// Largest systematically constructible rectangle for n >= 2:
//   1. n+1 prime: prime-table square over n+1, F = n
//   2. n prime:   prime-table square over n with a leading zero column, F = n-1
//   3. n and n+1 composite with max(spf(n), spf(n+1)) >= 5: multiplication
//      table over the winner (stripping the zero column when built over n+1),
//      F = max(spf) - 1
//   4. otherwise: a four-row construction, F = 4
// The returned rectangle is re-verified by is_tuscan_k and its rows are
// exposed as a validated PermutationFamily; any internal inconsistency throws.
BestFlorentine best_florentine(int n);

enum class SearchStatus { ProvenMaximum, BudgetExhausted };

struct SearchResult {
    int best_rows = 0;
    FlorentineRect rect;
    SearchStatus status = SearchStatus::ProvenMaximum;
    std::uint64_t nodes = 0;
};

// Exhaustive backtracking search for the tallest Florentine rectangle on n
// symbols, with displaced-pair pruning and first-row/row-order symmetry
// breaking. node_budget == 0 means unlimited; row_limit == 0 means n. The
// ProvenMaximum status asserts exhaustion only within the given row_limit.
// Guarded by a small size cap since the search space grows superexponentially.
SearchResult max_florentine_search(int n, int row_limit = 0,
    std::uint64_t node_budget = 0, int n_cap = 8);

}  // namespace florcc
