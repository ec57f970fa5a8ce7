#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "vsqc/equivalence.hpp"
#include "vsqc/girth.hpp"

using namespace vsqc;

namespace {

ExponentMatrix outer(const std::vector<std::int64_t>& shifts, const std::vector<std::int64_t>& betas) {
    std::vector<std::vector<std::int64_t>> rows(shifts.size(), std::vector<std::int64_t>(betas.size()));
    for (std::size_t i = 0; i < shifts.size(); ++i)
        for (std::size_t r = 0; r < betas.size(); ++r) rows[i][r] = shifts[i] * betas[r];
    return ExponentMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("odd symmetric product reduces to the [0,a,-a] form") {
    const std::vector<std::int64_t> betas{4, 7, 9};
    CHECK(to_vs_odd({0, 1, 2}, betas) == outer({0, 1, -1}, betas));

    const auto m = to_vs_odd({0, 1, 2, 3, 4}, {0, 1, 2});
    CHECK(m == ExponentMatrix::from_rows(
                   {{0, 0, 0}, {0, 1, 2}, {0, 2, 4}, {0, -1, -2}, {0, -2, -4}}));
    CHECK(m.tag() == StructureTag::vs_odd);
}

TEST_CASE("odd reduction rejects broken symmetry and even J") {
    CHECK_THROWS_AS(to_vs_odd({0, 1, 3}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(to_vs_odd({0, 1, 2, 3}, {0, 1}), std::invalid_argument);
}

TEST_CASE("even symmetric product reduces to the [a,-a] form") {
    const auto m = to_vs_even({0, 1, 3, 4}, {0, 1});
    CHECK(m == ExponentMatrix::from_rows({{0, 1}, {0, 2}, {0, -1}, {0, -2}}));
    CHECK(m.tag() == StructureTag::vs_even);

    // common sum 6, centre 3, a = [1,3]
    CHECK(to_vs_even({0, 2, 4, 6}, {0, 1}) ==
          ExponentMatrix::from_rows({{0, 1}, {0, 3}, {0, -1}, {0, -3}}));
}

TEST_CASE("even reduction rejects unequal or odd pair sums") {
    CHECK_THROWS_AS(to_vs_even({0, 1, 2, 4}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(to_vs_even({0, 1, 2, 3}, {0, 1}), std::invalid_argument);  // sum 3 is odd
    CHECK_THROWS_AS(to_vs_even({0, 1, 2}, {0, 1}), std::invalid_argument);
}

TEST_CASE("J=4 column transform reproduces the worked matrices") {
    SUBCASE("all-even column sums at P=38") {
        const std::vector<std::int64_t> r1{7, 10, 20, 11, 29, 2, 35, 12};
        const std::vector<std::int64_t> r2{1, 10, 22, 3, 15, 16, 19, 28};
        const auto m = to_vs_j4(r1, r2, 38);
        const auto expected = ExponentMatrix::from_rows({
            {34, 28, 17, 31, 16, 29, 11, 18},
            {3, 0, 37, 4, 7, 31, 8, 30},
            {-34, -28, -17, -31, -16, -29, -11, -18},
            {-3, 0, -37, -4, -7, -31, -8, -30},
        });
        CHECK(m.congruent(expected, 38));
        CHECK(m.tag() == StructureTag::vs_even);
        // first column literally [-4, 3, 4, -3] ~ [34, 3, -34, -3] mod 38
        CHECK(mod_p(m(0, 0), 38) == 34);
        CHECK(mod_p(m(2, 0), 38) == 4);
    }
    SUBCASE("odd column sums allowed for odd P=131") {
        const std::vector<std::int64_t> d1{0, 31, 37, 55, 56, 83, 97, 99};
        const std::vector<std::int64_t> d2{0, 12, 17, 21, 47, 50, 57, 70};
        const auto m = to_vs_j4(d1, d2, 131);
        CHECK(mod_p(m(0, 1), 131) == 44);
        CHECK(mod_p(m(1, 1), 131) == 75);
        const auto expected = ExponentMatrix::from_rows({
            {0, 44, 104, 93, 14, 130, 54, 112},
            {0, 75, 10, 17, 70, 82, 20, 80},
            {0, -44, -104, -93, -14, -130, -54, -112},
            {0, -75, -10, -17, -70, -82, -20, -80},
        });
        CHECK(m.congruent(expected, 131));
    }
    SUBCASE("odd column sum with even P is rejected") {
        CHECK_THROWS_AS(to_vs_j4({1}, {2}, 4), std::invalid_argument);
    }
}

TEST_CASE("reductions preserve girth on random admissible inputs") {
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_int_distribution<std::int64_t> val(-30, 30);
    std::uniform_int_distribution<int> len(2, 6);
    std::uniform_int_distribution<std::int64_t> pdist(7, 97);

    for (int trial = 0; trial < 25; ++trial) {
        const int L = len(rng) + 1;
        std::vector<std::int64_t> betas(L);
        for (auto& b : betas) b = val(rng);

        // odd J with symmetric shifts
        const int h = len(rng) / 2 + 1;
        std::vector<std::int64_t> alphas(2 * h + 1);
        const std::int64_t centre = val(rng);
        alphas[h] = centre;
        for (int i = 0; i < h; ++i) {
            const std::int64_t d = val(rng);
            alphas[h + 1 + i] = centre + d;
            alphas[h - 1 - i] = centre - d;
        }
        const auto input = outer(alphas, betas);
        const auto reduced = to_vs_odd(alphas, betas);
        for (int t = 0; t < 4; ++t) {
            const std::int64_t P = pdist(rng);
            const auto a = girth_from_equations(input, P);
            const auto b = girth_from_equations(reduced, P);
            CHECK(a.girth == b.girth);
            CHECK(a.exact == b.exact);
        }

        // even J with constant even pair sums
        std::vector<std::int64_t> ev(2 * h);
        const std::int64_t x = val(rng);
        for (int i = 0; i < h; ++i) {
            const std::int64_t d = val(rng);
            ev[2 * h - 1 - i] = x + d;
            ev[i] = x - d;
        }
        const auto einput = outer(ev, betas);
        const auto ereduced = to_vs_even(ev, betas);
        for (int t = 0; t < 4; ++t) {
            const std::int64_t P = pdist(rng);
            const auto a = girth_from_equations(einput, P);
            const auto b = girth_from_equations(ereduced, P);
            CHECK(a.girth == b.girth);
            CHECK(a.exact == b.exact);
        }

        // J=4 zero/sum structure at one odd P
        const std::int64_t P = pdist(rng) | 1;
        std::vector<std::int64_t> r1(L), r2(L), r3(L);
        for (int r = 0; r < L; ++r) {
            r1[r] = val(rng);
            r2[r] = val(rng);
            r3[r] = r1[r] + r2[r];
        }
        const auto source =
            ExponentMatrix::from_rows({std::vector<std::int64_t>(L, 0), r1, r2, r3});
        const auto vs = to_vs_j4(r1, r2, P);
        const auto a = girth_from_equations(source, P);
        const auto b = girth_from_equations(vs, P);
        CHECK(a.girth == b.girth);
        CHECK(a.exact == b.exact);
    }
}
