#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arith.hpp"
#include "counting.hpp"
#include "errors.hpp"

namespace ncolor {

enum class IdentityId {
    main_theorem,
    corollary_unit,
    corollary_mobius,
    corollary_tau,
    corollary_liouville,
    corollary_sigma,
    corollary_vonmangoldt,
    r1_special_case,
    phi_theorem,
    andrews_deutsch,
    s_cong_theorem,
    t_div_theorem,
    t_cong_theorem,
};

inline std::string to_string(IdentityId id) {
    switch (id) {
    case IdentityId::main_theorem: return "main_theorem";
    case IdentityId::corollary_unit: return "corollary_unit";
    case IdentityId::corollary_mobius: return "corollary_mobius";
    case IdentityId::corollary_tau: return "corollary_tau";
    case IdentityId::corollary_liouville: return "corollary_liouville";
    case IdentityId::corollary_sigma: return "corollary_sigma";
    case IdentityId::corollary_vonmangoldt: return "corollary_vonmangoldt";
    case IdentityId::r1_special_case: return "r1_special_case";
    case IdentityId::phi_theorem: return "phi_theorem";
    case IdentityId::andrews_deutsch: return "andrews_deutsch";
    case IdentityId::s_cong_theorem: return "s_cong_theorem";
    case IdentityId::t_div_theorem: return "t_div_theorem";
    case IdentityId::t_cong_theorem: return "t_cong_theorem";
    }
    return "?";
}

using Value = std::variant<BigInt, LogCombination>;

inline std::string to_string(const Value& v) {
    if (const auto* b = std::get_if<BigInt>(&v)) return b->str();
    return std::get<LogCombination>(v).to_string();
}

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct Counterexample {
    std::vector<std::pair<std::string, long long>> at; // e.g. {{"n", 5}, {"k", 2}, {"s", 1}}
    Value lhs;
    Value rhs;
    std::string note; // empty unless the failure is not a plain lhs != rhs
};

/// Outcome of one identity check over a parameter range. The status is
/// derived: a report passes iff it carries no counterexample.
struct VerificationReport {
    IdentityId id;
    ParamList params;
    std::uint64_t range = 0; // largest m or n checked
    std::string convention;
    std::optional<Counterexample> counterexample;

    bool passed() const noexcept { return !counterexample.has_value(); }
};

inline constexpr const char* kZeroExtension = "sequence values at negative indices are taken as 0";

namespace detail {

// Records the first failure only; checks run in canonical order so the
// first failure is the smallest one.
class FailureSink {
public:
    bool done() const noexcept { return first_.has_value(); }

    void check(std::vector<std::pair<std::string, long long>> at, Value lhs, Value rhs, std::string note = {}) {
        if (done()) return;
        if (lhs != rhs || !note.empty()) first_ = Counterexample{std::move(at), std::move(lhs), std::move(rhs), std::move(note)};
    }

    std::optional<Counterexample> take() { return std::move(first_); }

private:
    std::optional<Counterexample> first_;
};

inline long long ll(std::size_t v) { return static_cast<long long>(v); }

// sum_{k=1}^{m} sum_{j=0}^{m-k} A(k) T_k^r(m-j) l_{r-1}(j)
template <class Weight>
BigInt t_ell_double_sum(const Weight& a, const std::vector<SequenceTable>& t_by_k, const SequenceTable& ell,
                        std::size_t m) {
    BigInt total = 0;
    for (std::size_t k = 1; k <= m; ++k) {
        const BigInt ak = a(k);
        if (ak == 0) continue;
        BigInt inner = 0;
        for (std::size_t j = 0; j + k <= m; ++j) inner += t_by_k[k].values[m - j] * ell.values[j];
        total += ak * inner;
    }
    return total;
}

// sum_{k=1}^{m} PL(m-k) B(k)
template <class DivisorSum>
BigInt pl_convolution(const SequenceTable& pl, const DivisorSum& b, std::size_t m) {
    BigInt total = 0;
    for (std::size_t k = 1; k <= m; ++k) total += pl.values[m - k] * b(k);
    return total;
}

template <class Fn>
VerificationReport verify_main_impl(IdentityId id, const Fn& a, ParamList params, std::size_t r, std::size_t max_m) {
    if (r == 0) throw usage_error("verify_main: r must be positive");
    VerificationReport report{id, std::move(params), max_m, {}, std::nullopt};
    if (max_m < r) return report;
    const auto pl = pl_table(max_m);
    const auto t = t_family(r, max_m);
    const auto ell = ell_table_recursive(r - 1, max_m);
    FailureSink sink;
    for (std::size_t m = r; m <= max_m && !sink.done(); ++m) {
        auto lhs = pl_convolution(pl, [&](std::size_t k) { return divisor_sum(a, k); }, m);
        auto rhs = t_ell_double_sum(a, t, ell, m);
        sink.check({{"m", ll(m)}}, std::move(lhs), std::move(rhs));
    }
    report.counterexample = sink.take();
    return report;
}

} // namespace detail

/// sum_k PL(m-k) B(k) == sum_k sum_j A(k) T_k^r(m-j) l_{r-1}(j) for r <= m <= max_m,
/// with B(m) = sum_{d|m} A(d). Left side is a PL convolution of the divisor
/// sum; right side is built from T and l tables.
inline VerificationReport verify_main(const ArithmeticFunctionSpec& a, std::size_t r, std::size_t max_m) {
    if (a.kind == ArithKind::von_mangoldt)
        throw usage_error("verify_main: von Mangoldt takes logarithmic values; use verify_vonmangoldt");
    return detail::verify_main_impl(IdentityId::main_theorem, a,
                                    {{"A", a.name()}, {"r", std::to_string(r)}}, r, max_m);
}

/// Same identity for a caller-supplied integer-valued A.
inline VerificationReport verify_main(const std::function<BigInt(std::uint64_t)>& a, const std::string& name,
                                      std::size_t r, std::size_t max_m) {
    return detail::verify_main_impl(IdentityId::main_theorem, a, {{"A", name}, {"r", std::to_string(r)}}, r,
                                    max_m);
}

/// r = 1: sum_k PL(m-k) B(k) == sum_k A(k) T_k^1(m), 1 <= m <= max_m.
inline VerificationReport verify_r1_special(const ArithmeticFunctionSpec& a, std::size_t max_m) {
    if (a.kind == ArithKind::von_mangoldt)
        throw usage_error("verify_r1_special: von Mangoldt takes logarithmic values; use verify_vonmangoldt");
    VerificationReport report{IdentityId::r1_special_case, {{"A", a.name()}}, max_m, {}, std::nullopt};
    if (max_m == 0) return report;
    const auto pl = pl_table(max_m);
    const auto t = t_family(1, max_m);
    detail::FailureSink sink;
    for (std::size_t m = 1; m <= max_m && !sink.done(); ++m) {
        auto lhs = detail::pl_convolution(pl, [&](std::size_t k) { return divisor_sum(a, k); }, m);
        BigInt rhs = 0;
        for (std::size_t k = 1; k <= m; ++k) rhs += a(k) * t[k].values[m];
        sink.check({{"m", detail::ll(m)}}, std::move(lhs), std::move(rhs));
    }
    report.counterexample = sink.take();
    return report;
}

/// Each corollary with its left side written the way it is stated
/// (PL(m-1), the square-indexed sum, tau, sigma_alpha), independent of the
/// generic divisor-sum path used by verify_main.
inline std::vector<VerificationReport> verify_corollaries(std::size_t max_m, std::size_t r_max,
                                                          unsigned alpha_max) {
    std::vector<VerificationReport> reports;
    const auto pl = pl_table(max_m);

    {
        VerificationReport rep{IdentityId::corollary_unit, {{"r", "1"}}, max_m, {}, std::nullopt};
        if (max_m >= 1) {
            const auto t11 = t_table(1, 1, max_m);
            detail::FailureSink sink;
            for (std::size_t m = 1; m <= max_m && !sink.done(); ++m) {
                BigInt lhs = 0;
                for (std::size_t k = 1; k <= m; ++k) lhs += pl.values[m - k];
                sink.check({{"m", detail::ll(m)}}, lhs, t11.values[m]);
            }
            rep.counterexample = sink.take();
        }
        reports.push_back(std::move(rep));
    }

    for (std::size_t r = 1; r <= r_max; ++r) {
        if (max_m < r) break;
        const auto t = t_family(r, max_m);
        const auto ell = ell_table_recursive(r - 1, max_m);
        const auto rs = std::to_string(r);

        auto run = [&](IdentityId id, ParamList params, const auto& lhs_of, const auto& a) {
            VerificationReport rep{id, std::move(params), max_m, {}, std::nullopt};
            detail::FailureSink sink;
            for (std::size_t m = r; m <= max_m && !sink.done(); ++m)
                sink.check({{"m", detail::ll(m)}}, lhs_of(m), detail::t_ell_double_sum(a, t, ell, m));
            rep.counterexample = sink.take();
            reports.push_back(std::move(rep));
        };

        run(IdentityId::corollary_mobius, {{"r", rs}}, [&](std::size_t m) { return pl.values[m - 1]; },
            [](std::size_t k) { return BigInt(mobius(k)); });

        run(IdentityId::corollary_tau, {{"r", rs}},
            [&](std::size_t m) { return detail::pl_convolution(pl, [](std::size_t k) { return BigInt(tau(k)); }, m); },
            [](std::size_t) { return BigInt(1); });

        run(IdentityId::corollary_liouville, {{"r", rs}},
            [&](std::size_t m) {
                BigInt s = 0;
                for (std::size_t k = 1; k * k <= m; ++k) s += pl.values[m - k * k];
                return s;
            },
            [](std::size_t k) { return BigInt(liouville(k)); });

        for (unsigned alpha = 1; alpha <= alpha_max; ++alpha) {
            run(IdentityId::corollary_sigma, {{"r", rs}, {"alpha", std::to_string(alpha)}},
                [&](std::size_t m) {
                    return detail::pl_convolution(pl, [alpha](std::size_t k) { return sigma(alpha, k); }, m);
                },
                [alpha](std::size_t k) { return int_pow(k, alpha); });
        }
    }
    return reports;
}

/// sum_{k<=m} PL(m-k) log k == sum over prime powers k = p^c <= m of
/// (sum_j T_k^r(m-j) l_{r-1}(j)) log p, compared as exact LogCombinations.
inline VerificationReport verify_vonmangoldt(std::size_t r, std::size_t max_m) {
    if (r == 0) throw usage_error("verify_vonmangoldt: r must be positive");
    VerificationReport report{IdentityId::corollary_vonmangoldt, {{"r", std::to_string(r)}}, max_m, {}, std::nullopt};
    if (max_m < r) return report;
    const auto pl = pl_table(max_m);
    const auto t = t_family(r, max_m);
    const auto ell = ell_table_recursive(r - 1, max_m);
    detail::FailureSink sink;
    for (std::size_t m = r; m <= max_m && !sink.done(); ++m) {
        LogCombination lhs;
        for (std::size_t k = 2; k <= m; ++k) lhs += log_expand(k).scaled(pl.values[m - k]);
        LogCombination rhs;
        for (std::size_t k = 2; k <= m; ++k) {
            const auto pp = prime_power_decompose(k);
            if (!pp) continue;
            BigInt w = 0;
            for (std::size_t j = 0; j + k <= m; ++j) w += t[k].values[m - j] * ell.values[j];
            rhs.add_term(pp->prime, w);
        }
        sink.check({{"m", detail::ll(m)}}, std::move(lhs), std::move(rhs));
    }
    report.counterexample = sink.take();
    return report;
}

/// Coefficient of log p on the right side of the von Mangoldt corollary at
/// a single (m, r): sum over c of sum_j T_{p^c}^r(m-j) l_{r-1}(j).
inline BigInt vonmangoldt_rhs_coefficient(std::uint64_t p, std::size_t r, std::size_t m) {
    if (!is_prime(p)) throw usage_error("vonmangoldt_rhs_coefficient: p must be prime");
    const auto colored = colored_product(r, m);
    const auto ell = ell_table_recursive(r - 1, m);
    BigInt w = 0;
    for (std::uint64_t k = p; k <= m; k *= p) {
        const auto t = t_table_from(k, r, colored);
        for (std::size_t j = 0; j + k <= m; ++j) w += t.values[m - j] * ell.values[j];
    }
    return w;
}

/// PL(m+2) - PL(m) == (1/2) sum_{k=3}^{m+5} phi(k) T_k^3(m+5), 0 <= m <= max_m.
/// The unhalved sum must be even; an odd sum is reported as a failure.
inline VerificationReport verify_phi(std::size_t max_m) {
    VerificationReport report{IdentityId::phi_theorem, {}, max_m, {}, std::nullopt};
    const std::size_t order = max_m + 5;
    const auto pl = pl_table(order);
    const auto t = t_family(3, order);
    detail::FailureSink sink;
    for (std::size_t m = 0; m <= max_m && !sink.done(); ++m) {
        BigInt lhs = pl.values[m + 2] - pl.values[m];
        BigInt doubled = 0;
        for (std::size_t k = 3; k <= m + 5; ++k) doubled += BigInt(totient(k)) * t[k].values[m + 5];
        if (doubled % 2 != 0) {
            sink.check({{"m", detail::ll(m)}}, lhs, doubled, "right-hand sum is odd before halving");
        } else {
            sink.check({{"m", detail::ll(m)}}, lhs, BigInt(doubled / 2));
        }
    }
    report.counterexample = sink.take();
    return report;
}

namespace detail {

inline SequenceTable t_table_or_zero(std::size_t k, std::size_t r, std::size_t order) {
    if (k > order) return {"t", {{"k", ll(k)}, {"r", ll(r)}}, std::vector<BigInt>(order + 1, 0)};
    return t_table(k, r, order);
}

} // namespace detail

/// S_{|k}(n) == S_{2k}(n+k) for 1 <= k <= k_max, 1 <= n <= max_n.
inline VerificationReport verify_andrews_deutsch(std::size_t k_max, std::size_t max_n) {
    VerificationReport report{IdentityId::andrews_deutsch, {{"k_max", std::to_string(k_max)}}, max_n,
                              kZeroExtension, std::nullopt};
    std::vector<SequenceTable> lhs_tab, rhs_tab;
    for (std::size_t k = 1; k <= k_max; ++k) {
        lhs_tab.push_back(s_cong_table(0, k, max_n));
        rhs_tab.push_back(s_table(2 * k, max_n + k));
    }
    detail::FailureSink sink;
    for (std::size_t n = 1; n <= max_n && !sink.done(); ++n)
        for (std::size_t k = 1; k <= k_max && !sink.done(); ++k)
            sink.check({{"n", detail::ll(n)}, {"k", detail::ll(k)}}, lhs_tab[k - 1].values[n],
                       rhs_tab[k - 1].at(detail::ll(n + k)));
    report.counterexample = sink.take();
    return report;
}

/// S_{s(k)}(n) == S_{2k}(n+k-s) + S_{2k}(n-s) - S_{2k}(n-2s).
inline VerificationReport verify_s_cong(std::size_t k_max, std::size_t max_n) {
    VerificationReport report{IdentityId::s_cong_theorem, {{"k_max", std::to_string(k_max)}}, max_n,
                              kZeroExtension, std::nullopt};
    std::vector<std::vector<SequenceTable>> lhs_tab(k_max + 1);
    std::vector<SequenceTable> s2k;
    s2k.push_back(SequenceTable{"s", {}, {0}});
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t s = 0; s < k; ++s) lhs_tab[k].push_back(s_cong_table(s, k, max_n));
        s2k.push_back(s_table(2 * k, max_n + k));
    }
    detail::FailureSink sink;
    for (std::size_t n = 1; n <= max_n && !sink.done(); ++n) {
        for (std::size_t k = 1; k <= k_max && !sink.done(); ++k) {
            for (std::size_t s = 0; s < k && !sink.done(); ++s) {
                const auto N = detail::ll(n), K = detail::ll(k), S = detail::ll(s);
                BigInt rhs = s2k[k].at(N + K - S) + s2k[k].at(N - S) - s2k[k].at(N - 2 * S);
                sink.check({{"n", N}, {"k", K}, {"s", S}}, lhs_tab[k][s].values[n], std::move(rhs));
            }
        }
    }
    report.counterexample = sink.take();
    return report;
}

namespace detail {

// Congruence-class right side: (k+s)(T(n+k-s) - T(n-2s)) + s T(n-s)
//   + 2k sum_{l>=1} T(n+k-s-kl) - k sum_{l>=1} T(n-2s-2kl),  T = T_{2k}^1.
inline BigInt t_cong_rhs(const SequenceTable& t2k, long long n, long long k, long long s) {
    BigInt v = (k + s) * (t2k.at(n + k - s) - t2k.at(n - 2 * s)) + s * t2k.at(n - s);
    for (long long l = 1; n + k - s - k * l >= 0; ++l) v += 2 * k * t2k.at(n + k - s - k * l);
    for (long long l = 1; n - 2 * s - 2 * k * l >= 0; ++l) v -= k * t2k.at(n - 2 * s - 2 * k * l);
    return v;
}

// Divisibility right side: sum_{j>=0} T(n-(2j-1)k) + T(n-2jk) + T(n-(2j+1)k).
inline BigInt t_div_rhs(const SequenceTable& t2k, long long n, long long k) {
    BigInt v = 0;
    for (long long j = 0; n - (2 * j - 1) * k >= 0; ++j)
        v += t2k.at(n - (2 * j - 1) * k) + t2k.at(n - 2 * j * k) + t2k.at(n - (2 * j + 1) * k);
    return v;
}

} // namespace detail

/// T_{|k}(n) == sum_{j>=0} (T_{2k}^1(n-(2j-1)k) + T_{2k}^1(n-2jk) + T_{2k}^1(n-(2j+1)k)).
/// Also checks that the s = 0 case of the congruence theorem, divided by k,
/// gives the same value.
inline VerificationReport verify_t_div(std::size_t k_max, std::size_t max_n) {
    VerificationReport report{IdentityId::t_div_theorem, {{"k_max", std::to_string(k_max)}}, max_n,
                              std::string(kZeroExtension) + "; T_{2k}^1(m) = 0 for m < 2k", std::nullopt};
    std::vector<SequenceTable> lhs_tab{SequenceTable{"t-div", {}, {0}}}, t2k{SequenceTable{"t", {}, {0}}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        lhs_tab.push_back(t_div_table(k, max_n));
        t2k.push_back(detail::t_table_or_zero(2 * k, 1, max_n + k));
    }
    detail::FailureSink sink;
    for (std::size_t n = 1; n <= max_n && !sink.done(); ++n) {
        for (std::size_t k = 1; k <= k_max && !sink.done(); ++k) {
            const auto N = detail::ll(n), K = detail::ll(k);
            const BigInt lhs = lhs_tab[k].values[n];
            sink.check({{"n", N}, {"k", K}}, lhs, detail::t_div_rhs(t2k[k], N, K));
            const BigInt via_cong = detail::t_cong_rhs(t2k[k], N, K, 0);
            if (via_cong % K != 0) {
                sink.check({{"n", N}, {"k", K}}, lhs, via_cong, "s = 0 congruence form not divisible by k");
            } else {
                sink.check({{"n", N}, {"k", K}}, lhs, BigInt(via_cong / K));
            }
        }
    }
    report.counterexample = sink.take();
    return report;
}

/// T_{s(k)}(n) against the closed congruence formula in T_{2k}^1.
inline VerificationReport verify_t_cong(std::size_t k_max, std::size_t max_n) {
    VerificationReport report{IdentityId::t_cong_theorem, {{"k_max", std::to_string(k_max)}}, max_n,
                              std::string(kZeroExtension) + "; T_{2k}^1(m) = 0 for m < 2k", std::nullopt};
    std::vector<std::vector<SequenceTable>> lhs_tab(k_max + 1);
    std::vector<SequenceTable> t2k{SequenceTable{"t", {}, {0}}};
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t s = 0; s < k; ++s) lhs_tab[k].push_back(t_cong_table(s, k, max_n));
        t2k.push_back(detail::t_table_or_zero(2 * k, 1, max_n + k));
    }
    detail::FailureSink sink;
    for (std::size_t n = 1; n <= max_n && !sink.done(); ++n)
        for (std::size_t k = 1; k <= k_max && !sink.done(); ++k)
            for (std::size_t s = 0; s < k && !sink.done(); ++s) {
                const auto N = detail::ll(n), K = detail::ll(k), S = detail::ll(s);
                sink.check({{"n", N}, {"k", K}, {"s", S}}, lhs_tab[k][s].values[n],
                           detail::t_cong_rhs(t2k[k], N, K, S));
            }
    report.counterexample = sink.take();
    return report;
}

struct SuiteBounds {
    std::size_t max = 40;
    std::size_t r_max = 4;
    unsigned alpha_max = 2;
    std::size_t s_k_max = 4;
    std::size_t t_k_max = 3;
};

/// Every identity over its default parameter grid.
inline std::vector<VerificationReport> verify_all(const SuiteBounds& b) {
    std::vector<VerificationReport> out;
    const std::vector<ArithmeticFunctionSpec> kinds{
        ArithmeticFunctionSpec::unit_floor(), ArithmeticFunctionSpec::mobius(),   ArithmeticFunctionSpec::one(),
        ArithmeticFunctionSpec::liouville(),  ArithmeticFunctionSpec::power(1),   ArithmeticFunctionSpec::power(2),
        ArithmeticFunctionSpec::totient()};
    for (const auto& a : kinds)
        for (std::size_t r = 1; r <= b.r_max; ++r) out.push_back(verify_main(a, r, b.max));
    for (const auto& a : kinds) out.push_back(verify_r1_special(a, b.max));
    for (auto& rep : verify_corollaries(b.max, b.r_max, b.alpha_max)) out.push_back(std::move(rep));
    for (std::size_t r = 1; r <= b.r_max; ++r) out.push_back(verify_vonmangoldt(r, b.max));
    out.push_back(verify_phi(b.max));
    out.push_back(verify_andrews_deutsch(b.s_k_max, b.max));
    out.push_back(verify_s_cong(b.s_k_max, b.max));
    out.push_back(verify_t_div(b.t_k_max, b.max));
    out.push_back(verify_t_cong(b.t_k_max, b.max));
    return out;
}

} // namespace ncolor
