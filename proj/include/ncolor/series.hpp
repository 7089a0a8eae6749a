#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ncolor {

using BigInt = boost::multiprecision::cpp_int;

/// Exact power series a_0 + a_1 q + ... + a_N q^N, everything above q^N
/// discarded. Values are immutable once built; all arithmetic returns a
/// new series of the same order.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    /// Takes ownership of `coeffs`; shorter vectors are zero-padded up to
    /// `order`, longer ones are rejected.
    TruncatedSeries(std::size_t order, std::vector<BigInt> coeffs)
        : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > order + 1) {
            throw usage_error("TruncatedSeries: " + std::to_string(coeffs_.size()) +
                              " coefficients exceed order " + std::to_string(order));
        }
        coeffs_.resize(order + 1);
    }

    TruncatedSeries(std::size_t order, std::initializer_list<long long> coeffs)
        : TruncatedSeries(order, std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

    static TruncatedSeries one(std::size_t order) { return monomial(order, 0); }

    /// c * q^exponent; the zero series when exponent > order.
    static TruncatedSeries monomial(std::size_t order, std::size_t exponent, BigInt c = 1) {
        TruncatedSeries s(order);
        if (exponent <= order) s.coeffs_[exponent] = std::move(c);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }

    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

namespace detail {

inline void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        throw usage_error(std::string(op) + ": mismatched truncation orders " +
                          std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
}

} // namespace detail

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_order(a, b, "add");
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return {a.order(), std::move(c)};
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_order(a, b, "sub");
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return {a.order(), std::move(c)};
}

inline TruncatedSeries scale(const TruncatedSeries& a, const BigInt& factor) {
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= factor;
    return {a.order(), std::move(c)};
}

/// Cauchy product truncated at the common order. Zero coefficients of
/// either factor are skipped, so sparse factors such as 1/(1-q^k)^e cost
/// O(N^2/k) rather than O(N^2).
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    detail::require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    std::vector<std::size_t> support_b;
    for (std::size_t j = 0; j <= n; ++j)
        if (b[j] != 0) support_b.push_back(j);

    std::vector<BigInt> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j : support_b) {
            if (i + j > n) break;
            c[i + j] += a[i] * b[j];
        }
    }
    return {n, std::move(c)};
}

/// Multiplication by q^k. Shifting past the order yields the zero series.
inline TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
    const std::size_t n = a.order();
    std::vector<BigInt> c(n + 1);
    for (std::size_t i = k; i <= n; ++i) c[i] = a[i - k];
    return {n, std::move(c)};
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// C(n, k) by the running product c <- c * (n - i) / (i + 1); every
/// intermediate is itself a binomial coefficient, so each division is exact.
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1;
    }
    return c;
}

/// 1/(1-q^k)^e: coefficient of q^{jk} is C(e-1+j, j), everything else 0.
inline TruncatedSeries inv_one_minus_pow(std::size_t k, std::size_t e, std::size_t order) {
    if (k == 0) throw usage_error("inv_one_minus_pow: k must be positive");
    if (e == 0) return TruncatedSeries::one(order);
    std::vector<BigInt> c(order + 1);
    for (std::size_t j = 0; j * k <= order; ++j) c[j * k] = binomial(e - 1 + j, j);
    return {order, std::move(c)};
}

/// The polynomial (1-q^k)^e, truncated.
inline TruncatedSeries one_minus_pow(std::size_t k, std::size_t e, std::size_t order) {
    if (k == 0) throw usage_error("one_minus_pow: k must be positive");
    std::vector<BigInt> c(order + 1);
    for (std::size_t j = 0; j <= e && j * k <= order; ++j) {
        BigInt b = binomial(e, j);
        c[j * k] = (j % 2 == 0) ? b : BigInt(-b);
    }
    return {order, std::move(c)};
}

/// prod_{m >= r} 1/(1-q^m)^m: generating function of n-color partitions
/// whose parts are all at least r. Factors with m > order are 1.
inline TruncatedSeries colored_product(std::size_t r, std::size_t order) {
    if (r == 0) throw usage_error("colored_product: r must be positive");
    auto acc = TruncatedSeries::one(order);
    for (std::size_t m = r; m <= order; ++m) acc = mul(acc, inv_one_minus_pow(m, m, order));
    return acc;
}

/// prod_{m >= r} 1/(1-q^m): ordinary partitions with parts at least r.
inline TruncatedSeries plain_product(std::size_t r, std::size_t order) {
    if (r == 0) throw usage_error("plain_product: r must be positive");
    auto acc = TruncatedSeries::one(order);
    for (std::size_t m = r; m <= order; ++m) acc = mul(acc, inv_one_minus_pow(m, 1, order));
    return acc;
}

/// q^k/(1-q^k) = q^k + q^{2k} + ...
inline TruncatedSeries lambert_term(std::size_t k, std::size_t order) {
    if (k == 0) throw usage_error("lambert_term: k must be positive");
    std::vector<BigInt> c(order + 1);
    for (std::size_t j = k; j <= order; j += k) c[j] = 1;
    return {order, std::move(c)};
}

} // namespace ncolor
