#include <cstdint>
#include <numeric>

#include <gtest/gtest.h>

#include <ncolor/arith.hpp>

using ncolor::ArithmeticFunctionSpec;
using ncolor::BigInt;
using ncolor::LogCombination;

namespace {

// Definitions by brute force over 1..m, independent of factorize().
int mobius_naive(std::uint64_t m) {
    int sign = 1;
    for (std::uint64_t p = 2; p <= m; ++p) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime || m % p != 0) continue;
        if ((m / p) % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t totient_naive(std::uint64_t m) {
    std::uint64_t c = 0;
    for (std::uint64_t j = 1; j <= m; ++j)
        if (std::gcd(j, m) == 1) ++c;
    return c;
}

LogCombination combo(std::initializer_list<std::pair<std::uint64_t, long long>> terms) {
    LogCombination out;
    for (const auto& [p, c] : terms) out.add_term(p, c);
    return out;
}

} // namespace

TEST(Arith, Mobius) {
    EXPECT_EQ(ncolor::mobius(1), 1);
    EXPECT_EQ(ncolor::mobius(12), 0);
    EXPECT_EQ(ncolor::mobius(30), -1);
    for (std::uint64_t m = 1; m <= 300; ++m) EXPECT_EQ(ncolor::mobius(m), mobius_naive(m)) << m;
    EXPECT_THROW(ncolor::mobius(0), ncolor::usage_error);
}

TEST(Arith, Liouville) {
    EXPECT_EQ(ncolor::liouville(1), 1);
    EXPECT_EQ(ncolor::liouville(8), -1);
    EXPECT_EQ(ncolor::liouville(36), 1);
    EXPECT_THROW(ncolor::liouville(0), ncolor::usage_error);
}

TEST(Arith, Totient) {
    EXPECT_EQ(ncolor::totient(1), 1u);
    EXPECT_EQ(ncolor::totient(8), 4u);
    EXPECT_EQ(ncolor::totient(11), 10u);
    for (std::uint64_t m = 1; m <= 300; ++m) EXPECT_EQ(ncolor::totient(m), totient_naive(m)) << m;
    EXPECT_THROW(ncolor::totient(0), ncolor::usage_error);
}

TEST(Arith, TauAndSigma) {
    EXPECT_EQ(ncolor::tau(12), 6u);
    EXPECT_EQ(ncolor::sigma(1, 6), 12);
    for (std::uint64_t m = 1; m <= 100; ++m) EXPECT_EQ(ncolor::sigma(0, m), ncolor::tau(m)) << m;
    EXPECT_EQ(ncolor::sigma(2, 10), 1 + 4 + 25 + 100);
    EXPECT_THROW(ncolor::tau(0), ncolor::usage_error);
    EXPECT_THROW(ncolor::sigma(1, 0), ncolor::usage_error);
}

TEST(Arith, PrimePowerDecompose) {
    const auto eight = ncolor::prime_power_decompose(8);
    ASSERT_TRUE(eight);
    EXPECT_EQ(eight->prime, 2u);
    EXPECT_EQ(eight->exponent, 3u);
    EXPECT_FALSE(ncolor::prime_power_decompose(1));
    EXPECT_FALSE(ncolor::prime_power_decompose(12));
    EXPECT_EQ(ncolor::prime_power_decompose(11)->prime, 11u);
    EXPECT_THROW(ncolor::prime_power_decompose(0), ncolor::usage_error);
}

TEST(Arith, DivisorSumExamples) {
    EXPECT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::mobius(), 6), 0);
    EXPECT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::mobius(), 1), 1);
    EXPECT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::one(), 12), 6);
    EXPECT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::liouville(), 9), 1);
    EXPECT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::liouville(), 8), 0);
    EXPECT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::power(2), 10), ncolor::sigma(2, 10));
    EXPECT_THROW(ncolor::divisor_sum(ArithmeticFunctionSpec::von_mangoldt(), 6), ncolor::usage_error);
}

TEST(Arith, DivisorSumAcceptsCallback) {
    auto square = [](std::uint64_t d) { return BigInt(d * d); };
    for (std::uint64_t m = 1; m <= 50; ++m) EXPECT_EQ(ncolor::divisor_sum(square, m), ncolor::sigma(2, m));
}

TEST(Arith, UnitFloorDivisorSumIsOne) {
    for (std::uint64_t m = 1; m <= 100; ++m)
        EXPECT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::unit_floor(), m), 1) << m;
}

TEST(Arith, LogExpand) {
    EXPECT_EQ(ncolor::log_expand(12), combo({{2, 2}, {3, 1}}));
    EXPECT_TRUE(ncolor::log_expand(1).empty());
    EXPECT_EQ(ncolor::log_expand(11), combo({{11, 1}}));
    EXPECT_THROW(ncolor::log_expand(0), ncolor::usage_error);
}

TEST(Arith, LogCombinationKeepsOnlyNonzeroPrimes) {
    auto c = combo({{2, 3}, {5, 1}});
    c += combo({{2, -3}});
    EXPECT_EQ(c, combo({{5, 1}}));
    EXPECT_EQ(c.terms().count(2), 0u);
    EXPECT_THROW(c.add_term(4, 1), ncolor::usage_error);
    EXPECT_EQ(combo({{2, 497}, {3, 190}}).to_string(), "497*log(2) + 190*log(3)");
    EXPECT_EQ(c.scaled(0), LogCombination{});
}

TEST(ArithProperty, MobiusSumsToUnitFloor) {
    for (std::uint64_t m = 1; m <= 500; ++m)
        ASSERT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::mobius(), m), m == 1 ? 1 : 0) << m;
}

TEST(ArithProperty, TotientDivisorSumIsIdentity) {
    for (std::uint64_t m = 1; m <= 500; ++m)
        ASSERT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::totient(), m), m) << m;
}

TEST(ArithProperty, LogExpandIsMultiplicative) {
    for (std::uint64_t a = 1; a <= 100; ++a)
        for (std::uint64_t b = 1; b <= 100; ++b)
            ASSERT_EQ(ncolor::log_expand(a * b), ncolor::log_expand(a) + ncolor::log_expand(b)) << a << "*" << b;
}

TEST(ArithProperty, LiouvilleDivisorSumDetectsSquares) {
    for (std::uint64_t m = 1; m <= 500; ++m) {
        std::uint64_t r = 0;
        while ((r + 1) * (r + 1) <= m) ++r;
        ASSERT_EQ(ncolor::divisor_sum(ArithmeticFunctionSpec::liouville(), m), r * r == m ? 1 : 0) << m;
    }
}
