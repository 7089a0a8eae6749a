#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace ncolor {

/// Named integer sequence v_0..v_N, read off a single truncated series.
struct SequenceTable {
    std::string name;
    std::vector<std::pair<std::string, long long>> params; // in display order
    std::vector<BigInt> values;                          // values.size() == order + 1

    std::size_t order() const noexcept { return values.size() - 1; }

    /// Zero-extended lookup: indices below 0 read as 0. Indices above the
    /// order are a usage error, never silently 0.
    BigInt at(long long index) const {
        if (index < 0) return 0;
        if (static_cast<std::size_t>(index) > order())
            throw usage_error(name + ": index " + std::to_string(index) + " beyond table order " +
                              std::to_string(order()));
        return values[static_cast<std::size_t>(index)];
    }

    static SequenceTable from_series(std::string name, std::vector<std::pair<std::string, long long>> params,
                                     const TruncatedSeries& s) {
        return {std::move(name), std::move(params), {s.coeffs().begin(), s.coeffs().end()}};
    }

    friend bool operator==(const SequenceTable&, const SequenceTable&) = default;
};

namespace detail {

inline long long as_param(std::size_t v) { return static_cast<long long>(v); }

// Divides every coefficient by k; a nonzero remainder means the series was
// not k times an integer sequence.
inline TruncatedSeries exact_divide(const TruncatedSeries& s, std::size_t k, const std::string& what) {
    std::vector<BigInt> c(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] % k != 0)
            throw invariant_error(what + ": coefficient " + c[i].str() + " at q^" + std::to_string(i) +
                                  " not divisible by " + std::to_string(k));
        c[i] /= k;
    }
    return {s.order(), std::move(c)};
}

} // namespace detail

/// PL(0..N), the number of n-color partitions.
inline SequenceTable pl_table(std::size_t order) {
    return SequenceTable::from_series("pl", {}, colored_product(1, order));
}

/// p(0..N), the ordinary partition function.
inline SequenceTable partition_table(std::size_t order) {
    return SequenceTable::from_series("p", {}, plain_product(1, order));
}

/// T_k^r(0..N) as q^k/(1-q^k) * prod_{m>=r} 1/(1-q^m)^m, given that product.
inline SequenceTable t_table_from(std::size_t k, std::size_t r, const TruncatedSeries& colored_from_r) {
    const std::size_t order = colored_from_r.order();
    if (k == 0) throw usage_error("t_table: k must be positive");
    if (r == 0) throw usage_error("t_table: r must be positive");
    if (k > order)
        throw usage_error("t_table: k = " + std::to_string(k) + " exceeds order " + std::to_string(order));
    return SequenceTable::from_series("t", {{"k", detail::as_param(k)}, {"r", detail::as_param(r)}},
                                      mul(lambert_term(k, order), colored_from_r));
}

inline SequenceTable t_table(std::size_t k, std::size_t r, std::size_t order) {
    if (r == 0) throw usage_error("t_table: r must be positive");
    return t_table_from(k, r, colored_product(r, order));
}

/// All of T_1^r .. T_N^r sharing one colored product. Index 0 is unused
/// (an all-zero placeholder) so that family[k] is T_k^r.
inline std::vector<SequenceTable> t_family(std::size_t r, std::size_t order) {
    const auto colored = colored_product(r, order);
    std::vector<SequenceTable> family;
    family.reserve(order + 1);
    family.push_back(SequenceTable::from_series("t", {{"k", 0}, {"r", detail::as_param(r)}}, TruncatedSeries(order)));
    for (std::size_t k = 1; k <= order; ++k) family.push_back(t_table_from(k, r, colored));
    return family;
}

/// l_r(0..N) by the binomial recursion
///   l_r(m) = sum_{k=0}^{floor(m/r)} C(r+k-1, k) l_{r-1}(m-kr),
/// starting from l_1 = 1 (and l_0 = delta_0).
inline SequenceTable ell_table_recursive(std::size_t r, std::size_t order) {
    std::vector<BigInt> ell(order + 1, 0);
    if (r == 0) {
        ell[0] = 1;
    } else {
        std::fill(ell.begin(), ell.end(), BigInt(1));
        for (std::size_t level = 2; level <= r; ++level) {
            std::vector<BigInt> next(order + 1, 0);
            for (std::size_t m = 0; m <= order; ++m)
                for (std::size_t k = 0; k * level <= m; ++k)
                    next[m] += binomial(level + k - 1, k) * ell[m - k * level];
            ell = std::move(next);
        }
    }
    return {"ell", {{"r", detail::as_param(r)}}, std::move(ell)};
}

/// l_r(0..N) as the coefficients of prod_{m=1}^{r} 1/(1-q^m)^m.
inline SequenceTable ell_table_gf(std::size_t r, std::size_t order) {
    auto acc = TruncatedSeries::one(order);
    for (std::size_t m = 1; m <= r; ++m) acc = mul(acc, inv_one_minus_pow(m, m, order));
    return SequenceTable::from_series("ell", {{"r", detail::as_param(r)}}, acc);
}

/// S_k(0..N): appearances of the part k over all partitions of n.
inline SequenceTable s_table(std::size_t k, std::size_t order) {
    if (k == 0) throw usage_error("s_table: k must be positive");
    return SequenceTable::from_series("s", {{"k", detail::as_param(k)}},
                                      mul(lambert_term(k, order), plain_product(1, order)));
}

/// S_{s(k)}(0..N) from
///   (q^{s+k}/(1-q^k) - q^{2s+2k}/(1-q^{2k})) / prod (1-q^n).
inline SequenceTable s_cong_table(std::size_t s, std::size_t k, std::size_t order) {
    if (k == 0 || s >= k) throw usage_error("s_cong_table: need 0 <= s < k");
    const auto once = sub(shift(lambert_term(k, order), s), shift(lambert_term(2 * k, order), 2 * s));
    return SequenceTable::from_series("s-cong", {{"s", detail::as_param(s)}, {"k", detail::as_param(k)}},
                                      mul(once, plain_product(1, order)));
}

namespace detail {

// sum_{j>=1} w(j) q^a (1 - q^a), a = kj+s, truncated. Each term generates
// "the designated colored part a appears exactly once" after multiplying
// by the full colored product.
template <class Weight>
TruncatedSeries unique_part_numerator(std::size_t s, std::size_t k, std::size_t order, Weight weight) {
    std::vector<BigInt> c(order + 1, 0);
    for (std::size_t j = 1; k * j + s <= order; ++j) {
        const std::size_t a = k * j + s;
        const BigInt w = weight(j, a);
        c[a] += w;
        if (2 * a <= order) c[2 * a] -= w;
    }
    return {order, std::move(c)};
}

} // namespace detail

/// T_{|k}(0..N). The raw count sum_j kj q^{kj}(1-q^{kj}) / prod(1-q^n)^n
/// is divided exactly by k.
inline SequenceTable t_div_table(std::size_t k, std::size_t order) {
    if (k == 0) throw usage_error("t_div_table: k must be positive");
    const auto numerator =
        detail::unique_part_numerator(0, k, order, [](std::size_t, std::size_t a) { return BigInt(a); });
    const auto raw = mul(numerator, colored_product(1, order));
    return SequenceTable::from_series("t-div", {{"k", detail::as_param(k)}},
                                      detail::exact_divide(raw, k, "t_div_table"));
}

/// T_{s(k)}(0..N) = sum_j (kj+s) q^{kj+s}(1-q^{kj+s}) / prod(1-q^n)^n.
inline SequenceTable t_cong_table(std::size_t s, std::size_t k, std::size_t order) {
    if (k == 0 || s >= k) throw usage_error("t_cong_table: need 0 <= s < k");
    const auto numerator =
        detail::unique_part_numerator(s, k, order, [](std::size_t, std::size_t a) { return BigInt(a); });
    return SequenceTable::from_series("t-cong", {{"s", detail::as_param(s)}, {"k", detail::as_param(k)}},
                                      mul(numerator, colored_product(1, order)));
}

} // namespace ncolor
