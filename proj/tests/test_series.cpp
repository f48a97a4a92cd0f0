#include "doctest.h"

#include <random>

#include "crossfree/series.hpp"
#include "oracles.hpp"

using namespace crossfree;

namespace {

BiSeries random_series(std::mt19937& rng, int order, bool unit) {
    std::uniform_int_distribution<int> coef(-4, 4);
    BiSeries f(order);
    for (int a = 0; a <= order; ++a)
        for (int b = 0; b <= a; ++b) f.set(a, b, coef(rng));
    if (unit) f.set(0, 0, 1);
    return f;
}

}  // namespace

TEST_CASE("basic algebra") {
    const int N = 3;
    CHECK(BiSeries::x(N) * BiSeries::x(N) == BiSeries::monomial(N, 2, 0));
    const BiSeries s = BiSeries::one(N) + BiSeries::xy(N);
    BiSeries want(N);
    want.set(0, 0, 1);
    want.set(1, 1, 2);
    want.set(2, 2, 1);
    CHECK(pow(s, 2) == want);
    CHECK(s + BiSeries::zero(N) == s);
    CHECK(pow(s, 0) == BiSeries::one(N));
    CHECK(BiSeries::monomial(N, 4, 1) == BiSeries::zero(N));
    CHECK_THROWS_AS(BiSeries::x(3) + BiSeries::x(4), std::invalid_argument);
    CHECK_THROWS_AS(BiSeries::x(3) * BiSeries::x(4), std::invalid_argument);
    CHECK_THROWS_AS(BiSeries::monomial(3, 1, 2), std::invalid_argument);
    CHECK(s.to_string() == "1 + xy + O(x^4)");
}

TEST_CASE("inv_unit") {
    const int N = 6;
    BiSeries geometric(N);
    for (int a = 0; a <= N; ++a) geometric.set(a, a, 1);
    CHECK(inv_unit(BiSeries::one(N) - BiSeries::xy(N)) == geometric);
    CHECK(inv_unit(BiSeries::one(N)) == BiSeries::one(N));
    const BiSeries one = BiSeries::one(N);
    const BiSeries f = one - (one + BiSeries::xy(N)) * BiSeries::xy(N);
    CHECK(f * inv_unit(f) == one);
    CHECK_THROWS_AS(inv_unit(BiSeries::constant(N, 2)), std::invalid_argument);
    CHECK_THROWS_AS(inv_unit(BiSeries::x(N)), std::invalid_argument);
}

TEST_CASE("coeff") {
    const BiSeries f = rhs_series(8);
    CHECK(f.coeff(1, 0) == 1);
    CHECK(f.coeff(8, 5) == 377);
    CHECK(f.coeff(3, 4) == 0);
    CHECK(f.coeff(0, 0) == 0);
    CHECK_THROWS_AS(f.coeff(9, 0), std::out_of_range);
}

TEST_CASE("rhs_series small orders") {
    BiSeries want(2);
    want.set(1, 0, 1);
    want.set(2, 0, 1);
    want.set(2, 1, 1);
    CHECK(rhs_series(2) == want);
    CHECK(rhs_series(3).coeff(3, 1) == 3);
    CHECK(rhs_series(4).coeff(4, 2) == 6);
    CHECK(rhs_series(4).row_sum(4) == 14);
    CHECK_THROWS_AS(rhs_series(0), std::invalid_argument);
}

TEST_CASE("rhs_series matches the frozen triangle") {
    const BiSeries f = rhs_series(8);
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < n; ++k)
            CHECK(f.coeff(n, k) == oracle::kTriangle[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)]);
}

TEST_CASE("truncation consistency and non-negativity to order 10") {
    const BiSeries big = rhs_series(10);
    for (int order = 1; order <= 10; ++order) {
        const BiSeries small = rhs_series(order);
        for (int a = 0; a <= order; ++a)
            for (int b = 0; b <= a; ++b) REQUIRE(small.coeff(a, b) == big.coeff(a, b));
    }
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a; ++b) REQUIRE(big.coeff(a, b) >= 0);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20240611);
    const int N = 6;
    for (int trial = 0; trial < 30; ++trial) {
        const BiSeries f = random_series(rng, N, false);
        const BiSeries g = random_series(rng, N, false);
        const BiSeries h = random_series(rng, N, false);
        REQUIRE(f + g == g + f);
        REQUIRE(f * g == g * f);
        REQUIRE((f + g) + h == f + (g + h));
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE(pow(f, 3) == f * f * f);
        const BiSeries u = random_series(rng, N, true);
        REQUIRE(u * inv_unit(u) == BiSeries::one(N));
    }
}
