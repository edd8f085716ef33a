#include <doctest.h>

#include <stdexcept>

#include "florcc/seqgen.hpp"
#include "golden_data.hpp"

using namespace florcc;

namespace {

std::string digits(const std::vector<int>& row) {
    std::string out;
    for (int v : row) out += static_cast<char>('0' + v);
    return out;
}

PermutationFamily family10() { return best_florentine(10).family; }

}  // namespace

TEST_CASE("phase_row matches the published digit strings") {
    const std::vector<int> pi2(golden::kPerms10[2].begin(), golden::kPerms10[2].end());
    CHECK(digits(phase_row(pi2, 0, 0)) == "0000000000");
    CHECK(digits(phase_row(pi2, 0, 1)) == "2580369147");
    CHECK(digits(phase_row(pi2, 0, 2)) == "4060628284");
}

TEST_CASE("phase_row input validation") {
    CHECK_THROWS_AS(phase_row({0, 1, 1}, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(phase_row({0, 1, 5}, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(phase_row({0, 1, 2}, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(phase_row({0, 1, 2}, 0, -1), std::invalid_argument);
}

TEST_CASE("build_ccc smallest case") {
    const auto family = PermutationFamily::from_rows(2, {{0, 1}, {1, 0}});
    const auto ccc = build_ccc(family, 0);
    REQUIRE(ccc.sets.size() == 2);
    CHECK(ccc.sets[0].exponents == std::vector<std::vector<int>>{{0, 0}, {0, 1}});
    CHECK(ccc.sets[0].k == 0);
    CHECK(ccc.sets[0].m == 0);
    CHECK(ccc.sets[1].m == 1);

    CHECK_THROWS_AS(build_ccc(family, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_ccc(family, -1), std::invalid_argument);
}

TEST_CASE("build_ccc reproduces reference sets for k = 2") {
    const auto ccc = build_ccc(family10(), 2);
    for (int m = 0; m < 10; ++m) {
        for (int s = 0; s < 10; ++s) {
            CAPTURE(m);
            CAPTURE(s);
            CHECK(digits(ccc.sets[m].exponents[s]) == golden::kCcc10K2[m][s]);
        }
    }
}

TEST_CASE("first row of every m = 0 set is all zero") {
    for (int n : {2, 3, 5, 6, 10}) {
        CAPTURE(n);
        const auto family = best_florentine(n).family;
        for (int k = 0; k < family.f_value(); ++k) {
            const auto ccc = build_ccc(family, k);
            CHECK(ccc.sets[0].exponents[0] == std::vector<int>(n, 0));
        }
    }
}

TEST_CASE("rows across m differ by the additive ramp") {
    const auto family = best_florentine(6).family;
    const auto ccc = build_ccc(family, 1);
    for (int m = 0; m < 6; ++m) {
        for (int s = 0; s < 6; ++s) {
            for (int t = 0; t < 6; ++t) {
                const int base = ccc.sets[0].exponents[s][t];
                CHECK(ccc.sets[m].exponents[s][t] == (base + m * t) % 6);
            }
        }
    }
}

TEST_CASE("build_qcss layout and determinism") {
    const auto family = best_florentine(6).family;
    const auto q1 = build_qcss(family);
    const auto q2 = build_qcss(family);
    CHECK(q1.set_count() == 36);
    CHECK(q1.k_count == 6);
    for (int k = 0; k < 6; ++k) {
        for (int m = 0; m < 6; ++m) {
            const auto& set = q1.sets[k * 6 + m];
            CHECK(set.k == k);
            CHECK(set.m == m);
            for (const auto& row : set.exponents) {
                for (int v : row) {
                    CHECK(v >= 0);
                    CHECK(v < 6);
                }
            }
        }
    }
    for (int i = 0; i < q1.set_count(); ++i) {
        CHECK(q1.sets[i].exponents == q2.sets[i].exponents);
    }
}
