#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "series.hpp"

namespace ncolor {

namespace detail {

inline void require_positive(std::uint64_t m, const char* fn) {
    if (m == 0) throw usage_error(std::string(fn) + ": argument must be >= 1");
}

} // namespace detail

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
inline std::vector<PrimePower> factorize(std::uint64_t m) {
    detail::require_positive(m, "factorize");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) return false;
    return true;
}

/// Divisors of m in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t m) {
    detail::require_positive(m, "divisors");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        low.push_back(d);
        if (d != m / d) high.push_back(m / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

inline int mobius(std::uint64_t m) {
    detail::require_positive(m, "mobius");
    int sign = 1;
    for (const auto& [p, e] : factorize(m)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline int liouville(std::uint64_t m) {
    detail::require_positive(m, "liouville");
    unsigned omega = 0;
    for (const auto& pp : factorize(m)) omega += pp.exponent;
    return omega % 2 == 0 ? 1 : -1;
}

inline std::uint64_t totient(std::uint64_t m) {
    detail::require_positive(m, "totient");
    std::uint64_t phi = m;
    for (const auto& pp : factorize(m)) phi = phi / pp.prime * (pp.prime - 1);
    return phi;
}

inline std::uint64_t tau(std::uint64_t m) {
    detail::require_positive(m, "tau");
    std::uint64_t t = 1;
    for (const auto& pp : factorize(m)) t *= pp.exponent + 1;
    return t;
}

inline BigInt int_pow(std::uint64_t base, unsigned exponent) {
    BigInt r = 1;
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

/// sigma_alpha(m) = sum of d^alpha over divisors d of m.
inline BigInt sigma(unsigned alpha, std::uint64_t m) {
    detail::require_positive(m, "sigma");
    BigInt s = 0;
    for (auto d : divisors(m)) s += int_pow(d, alpha);
    return s;
}

/// (p, c) with m = p^c, c >= 1; nullopt for 1 and for non-prime-powers.
inline std::optional<PrimePower> prime_power_decompose(std::uint64_t m) {
    detail::require_positive(m, "prime_power_decompose");
    auto f = factorize(m);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

inline bool is_perfect_square(std::uint64_t m) {
    std::uint64_t r = 0;
    while ((r + 1) * (r + 1) <= m) ++r;
    return r * r == m;
}

enum class ArithKind { unit_floor, mobius, one, liouville, power, von_mangoldt, totient };

/// Closed set of arithmetic functions A(m) the verification layer knows by name.
struct ArithmeticFunctionSpec {
    ArithKind kind = ArithKind::one;
    unsigned alpha = 0; // only meaningful for power

    static ArithmeticFunctionSpec unit_floor() { return {ArithKind::unit_floor}; }
    static ArithmeticFunctionSpec mobius() { return {ArithKind::mobius}; }
    static ArithmeticFunctionSpec one() { return {ArithKind::one}; }
    static ArithmeticFunctionSpec liouville() { return {ArithKind::liouville}; }
    static ArithmeticFunctionSpec power(unsigned a) { return {ArithKind::power, a}; }
    static ArithmeticFunctionSpec von_mangoldt() { return {ArithKind::von_mangoldt}; }
    static ArithmeticFunctionSpec totient() { return {ArithKind::totient}; }

    std::string name() const {
        switch (kind) {
        case ArithKind::unit_floor: return "unit-floor";
        case ArithKind::mobius: return "mobius";
        case ArithKind::one: return "one";
        case ArithKind::liouville: return "liouville";
        case ArithKind::power: return "power(" + std::to_string(alpha) + ")";
        case ArithKind::von_mangoldt: return "von-mangoldt";
        case ArithKind::totient: return "totient";
        }
        return "?";
    }

    /// A(m) as an exact integer. Von Mangoldt has no integer value.
    BigInt operator()(std::uint64_t m) const {
        detail::require_positive(m, "ArithmeticFunctionSpec");
        switch (kind) {
        case ArithKind::unit_floor: return m == 1 ? 1 : 0;
        case ArithKind::mobius: return ncolor::mobius(m);
        case ArithKind::one: return 1;
        case ArithKind::liouville: return ncolor::liouville(m);
        case ArithKind::power: return int_pow(m, alpha);
        case ArithKind::totient: return ncolor::totient(m);
        case ArithKind::von_mangoldt:
            throw usage_error("von Mangoldt has no integer value; use log_expand / LogCombination");
        }
        throw usage_error("unknown arithmetic function kind");
    }

    friend bool operator==(const ArithmeticFunctionSpec&, const ArithmeticFunctionSpec&) = default;
};

/// B(m) = sum_{d | m} A(d) for a caller-supplied A.
template <class Fn>
    requires std::invocable<const Fn&, std::uint64_t>
BigInt divisor_sum(const Fn& a, std::uint64_t m) {
    BigInt b = 0;
    for (auto d : divisors(m)) b += BigInt(a(d));
    return b;
}

inline BigInt divisor_sum(const ArithmeticFunctionSpec& a, std::uint64_t m) {
    if (a.kind == ArithKind::von_mangoldt)
        throw usage_error("divisor_sum: the divisor sum of von Mangoldt is log m; use log_expand");
    return divisor_sum([&a](std::uint64_t d) { return a(d); }, m);
}

/// Formal integer combination sum c_p log p over primes p. Equality is
/// exact map equality, which decides equality of the real numbers since
/// the logs of distinct primes are linearly independent over Q.
class LogCombination {
public:
    LogCombination() = default;

    void add_term(std::uint64_t prime, const BigInt& coeff) {
        if (!is_prime(prime)) throw usage_error("LogCombination: " + std::to_string(prime) + " is not prime");
        if (coeff == 0) return;
        auto& slot = terms_[prime];
        slot += coeff;
        if (slot == 0) terms_.erase(prime);
    }

    BigInt coefficient(std::uint64_t prime) const {
        auto it = terms_.find(prime);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const std::map<std::uint64_t, BigInt>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    LogCombination& operator+=(const LogCombination& other) {
        for (const auto& [p, c] : other.terms_) add_term(p, c);
        return *this;
    }

    friend LogCombination operator+(LogCombination a, const LogCombination& b) { return a += b; }

    LogCombination scaled(const BigInt& factor) const {
        LogCombination out;
        if (factor == 0) return out;
        for (const auto& [p, c] : terms_) out.terms_[p] = c * factor;
        return out;
    }

    /// "497*log(2) + 190*log(3)"; "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*log(" + std::to_string(p) + ")";
        }
        return s;
    }

    friend bool operator==(const LogCombination&, const LogCombination&) = default;

private:
    std::map<std::uint64_t, BigInt> terms_;
};

/// log m = sum_p v_p(m) log p.
inline LogCombination log_expand(std::uint64_t m) {
    detail::require_positive(m, "log_expand");
    LogCombination out;
    for (const auto& [p, e] : factorize(m)) out.add_term(p, e);
    return out;
}

} // namespace ncolor
