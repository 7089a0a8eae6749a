#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <ncolor/enumerate.hpp>
#include <ncolor/series.hpp>

using ncolor::BigInt;
using ncolor::TruncatedSeries;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
    std::uniform_int_distribution<long long> dist(-50, 50);
    std::vector<BigInt> c(order + 1);
    for (auto& x : c) x = dist(rng);
    return {order, std::move(c)};
}

std::vector<long long> as_ll(const TruncatedSeries& s) {
    std::vector<long long> out;
    for (const auto& c : s.coeffs()) out.push_back(c.convert_to<long long>());
    return out;
}

} // namespace

TEST(Series, AddCancelsAndHasZeroIdentity) {
    const TruncatedSeries a(2, {1, 1}), b(2, {1, -1});
    EXPECT_EQ(as_ll(a + b), (std::vector<long long>{2, 0, 0}));
    EXPECT_EQ(a + TruncatedSeries(2), a);
}

TEST(Series, AddDoublesPlCoefficient) {
    const auto pl = ncolor::colored_product(1, 6);
    EXPECT_EQ((pl + pl)[4], 26);
}

TEST(Series, MismatchedOrdersAreUsageErrors) {
    const TruncatedSeries a(3), b(4);
    EXPECT_THROW(ncolor::add(a, b), ncolor::usage_error);
    EXPECT_THROW(ncolor::mul(a, b), ncolor::usage_error);
    EXPECT_THROW(ncolor::sub(a, b), ncolor::usage_error);
}

TEST(Series, ConstructorRejectsTooManyCoefficients) {
    EXPECT_THROW(TruncatedSeries(1, {1, 2, 3}), ncolor::usage_error);
    EXPECT_EQ(TruncatedSeries(3, {1}).coeffs().size(), 4u);
}

TEST(Series, GeometricTimesOneMinusQIsOne) {
    const auto geo = ncolor::inv_one_minus_pow(1, 1, 5);
    const TruncatedSeries one_minus_q(5, {1, -1});
    EXPECT_EQ(geo * one_minus_q, TruncatedSeries::one(5));
}

TEST(Series, MonomialMultiplicationShifts) {
    const TruncatedSeries a(6, {1, 2, 3, 4, 5, 6, 7});
    EXPECT_EQ(TruncatedSeries::monomial(6, 2) * a, ncolor::shift(a, 2));
    EXPECT_EQ(as_ll(ncolor::shift(a, 2)), (std::vector<long long>{0, 0, 1, 2, 3, 4, 5}));
}

TEST(Series, FourFactorProductGivesPl4) {
    auto acc = TruncatedSeries::one(4);
    for (std::size_t m = 1; m <= 4; ++m) acc = acc * ncolor::inv_one_minus_pow(m, m, 4);
    EXPECT_EQ(acc[4], 13);
}

TEST(Series, ShiftExamples) {
    EXPECT_EQ(ncolor::shift(TruncatedSeries::one(5), 3), TruncatedSeries::monomial(5, 3));
    const TruncatedSeries h(5, {7, 1, 2, 3});
    EXPECT_EQ(ncolor::shift(h, 0), h);
    // shift(sum h(m) q^m, k) has coefficient h(m-k) at q^m
    const auto s = ncolor::shift(h, 2);
    for (std::size_t m = 2; m <= 5; ++m) EXPECT_EQ(s[m], h[m - 2]);
    EXPECT_TRUE(ncolor::shift(h, 6).is_zero());
}

TEST(Series, InvOneMinusPowExamples) {
    EXPECT_EQ(as_ll(ncolor::inv_one_minus_pow(2, 2, 6)), (std::vector<long long>{1, 0, 2, 0, 3, 0, 4}));
    EXPECT_EQ(as_ll(ncolor::inv_one_minus_pow(1, 1, 3)), (std::vector<long long>{1, 1, 1, 1}));
    EXPECT_EQ(ncolor::inv_one_minus_pow(3, 0, 5), TruncatedSeries::one(5));
    EXPECT_THROW(ncolor::inv_one_minus_pow(0, 1, 5), ncolor::usage_error);
}

TEST(Series, InvOneMinusPowInvertsPolynomial) {
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t e = 0; e <= 6; ++e)
            for (std::size_t n : {0u, 1u, 7u, 20u})
                EXPECT_EQ(ncolor::inv_one_minus_pow(k, e, n) * ncolor::one_minus_pow(k, e, n), TruncatedSeries::one(n))
                    << "k=" << k << " e=" << e << " N=" << n;
}

TEST(Series, BinomialMatchesPascal) {
    std::vector<std::vector<BigInt>> pascal(41);
    for (std::size_t n = 0; n <= 40; ++n) {
        pascal[n].assign(n + 1, 1);
        for (std::size_t k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (std::size_t n = 0; n <= 40; ++n) {
        for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(ncolor::binomial(n, k), pascal[n][k]);
        EXPECT_EQ(ncolor::binomial(n, n + 1), 0);
    }
}

TEST(Series, ColoredProductExamples) {
    EXPECT_EQ(as_ll(ncolor::colored_product(1, 8)), (std::vector<long long>{1, 1, 3, 6, 13, 24, 48, 86, 160}));
    EXPECT_EQ(ncolor::colored_product(9, 8), TruncatedSeries::one(8));
    EXPECT_EQ(ncolor::colored_product(3, 5)[3], 3);
    EXPECT_THROW(ncolor::colored_product(0, 5), ncolor::usage_error);
}

TEST(Series, LambertTermExamples) {
    EXPECT_EQ(as_ll(ncolor::lambert_term(2, 7)), (std::vector<long long>{0, 0, 1, 0, 1, 0, 1, 0}));
    EXPECT_EQ(as_ll(ncolor::lambert_term(1, 3)), (std::vector<long long>{0, 1, 1, 1}));
    EXPECT_THROW(ncolor::lambert_term(0, 3), ncolor::usage_error);
}

TEST(Series, LambertTimesColoredProductCountsTObjects) {
    const std::size_t n = 11;
    for (std::size_t k = 1; k <= 5; ++k)
        for (std::size_t r = 1; r <= 5; ++r) {
            const auto gf = ncolor::lambert_term(k, n) * ncolor::colored_product(r, n);
            for (unsigned m = 0; m <= n; ++m)
                EXPECT_EQ(gf[m], ncolor::oracle::t_oracle(k, r, m)) << "k=" << k << " r=" << r << " m=" << m;
        }
}

TEST(SeriesProperty, RingAxioms) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> order_dist(0, 30);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = order_dist(rng);
        const auto a = random_series(rng, n), b = random_series(rng, n), c = random_series(rng, n);
        ASSERT_EQ(a * (b * c), (a * b) * c) << "trial " << trial;
        ASSERT_EQ(a * b, b * a) << "trial " << trial;
        ASSERT_EQ(a * (b + c), a * b + a * c) << "trial " << trial;
        ASSERT_EQ(a + b, b + a) << "trial " << trial;
        ASSERT_EQ(a * TruncatedSeries::one(n), a) << "trial " << trial;
        ASSERT_TRUE((a - a).is_zero()) << "trial " << trial;
    }
}

TEST(SeriesProperty, ColoredProductPositivity) {
    const std::size_t n = 30;
    for (std::size_t r = 1; r <= 8; ++r) {
        const auto g = ncolor::colored_product(r, n);
        EXPECT_EQ(g[0], 1);
        for (std::size_t m = 1; m <= n; ++m) {
            // a partition into parts >= r exists iff m >= r
            if (m >= r) EXPECT_GT(g[m], 0) << "r=" << r << " m=" << m;
            else EXPECT_EQ(g[m], 0) << "r=" << r << " m=" << m;
        }
    }
}

TEST(SeriesProperty, ColoredProductMatchesEnumeration) {
    const std::size_t n = 16;
    const auto g = ncolor::colored_product(1, n);
    for (unsigned m = 0; m <= n; ++m) EXPECT_EQ(g[m], ncolor::oracle::count_ncolor(m, 1)) << "m=" << m;
}

TEST(Series, LargeCoefficientsStayExact) {
    // PL(200) has more digits than any machine integer holds
    const auto pl = ncolor::colored_product(1, 200);
    EXPECT_GT(pl[200], BigInt(std::numeric_limits<std::uint64_t>::max()));
    // recheck with the ordinary recurrence m PL(m) = sum_{k=1}^m sigma_2(k) PL(m-k)
    auto sigma2 = [](std::size_t k) {
        BigInt s = 0;
        for (std::size_t d = 1; d <= k; ++d)
            if (k % d == 0) s += BigInt(d) * d;
        return s;
    };
    std::vector<BigInt> rec(201);
    rec[0] = 1;
    for (std::size_t m = 1; m <= 200; ++m) {
        BigInt acc = 0;
        for (std::size_t k = 1; k <= m; ++k) acc += sigma2(k) * rec[m - k];
        rec[m] = acc / m;
    }
    for (std::size_t m = 0; m <= 200; ++m) ASSERT_EQ(pl[m], rec[m]) << "m=" << m;
}
