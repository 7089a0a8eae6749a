#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

// Brute-force enumeration of ordinary and n-color partitions, and every
// counting statistic computed by literally counting. Slow on purpose: this
// is the ground truth the generating-function code is checked against.
namespace ncolor::oracle {

/// Part of size `size` in color `color`, 1 <= color <= size. Ordered as
/// 1_1 < 2_1 < 2_2 < 3_1 < ...
struct ColoredPart {
    unsigned size;
    unsigned color;
    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

struct Partition {
    std::vector<unsigned> parts; // non-increasing

    unsigned weight() const {
        unsigned w = 0;
        for (auto p : parts) w += p;
        return w;
    }

    /// "3+1"; the empty partition renders as "".
    std::string to_string() const {
        std::string s;
        for (auto p : parts) {
            if (!s.empty()) s += '+';
            s += std::to_string(p);
        }
        return s;
    }
};

struct NColorPartition {
    std::vector<ColoredPart> parts; // non-increasing in (size, color)

    unsigned weight() const {
        unsigned w = 0;
        for (const auto& p : parts) w += p.size;
        return w;
    }

    /// "3_2+2_1+1_1"
    std::string to_string() const {
        std::string s;
        for (const auto& p : parts) {
            if (!s.empty()) s += '+';
            s += std::to_string(p.size) + '_' + std::to_string(p.color);
        }
        return s;
    }
};

/// Colored parts >= r plus `plain_count` copies of a single uncolored part
/// `plain_part` < r. These are the objects counted by T_k^r when r > k.
struct HybridPartition {
    NColorPartition colored;
    unsigned plain_part = 0;
    unsigned plain_count = 0;

    unsigned weight() const { return colored.weight() + plain_part * plain_count; }

    /// "3_1+2": uncolored parts carry no subscript.
    std::string to_string() const {
        std::string s = colored.to_string();
        for (unsigned i = 0; i < plain_count; ++i) {
            if (!s.empty()) s += '+';
            s += std::to_string(plain_part);
        }
        return s;
    }
};

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                           const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition{cur});
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, visit);
        cur.pop_back();
    }
}

// Parts are emitted in non-increasing (size, color) order; each multiset
// therefore appears exactly once.
inline void ncolor_rec(unsigned remaining, unsigned min_part, ColoredPart bound, std::vector<ColoredPart>& cur,
                       const std::function<void(const NColorPartition&)>& visit) {
    if (remaining == 0) {
        visit(NColorPartition{cur});
        return;
    }
    const unsigned top = std::min(remaining, bound.size);
    for (unsigned size = top; size >= min_part && size >= 1; --size) {
        const unsigned max_color = (size == bound.size) ? bound.color : size;
        for (unsigned color = 1; color <= max_color; ++color) {
            ColoredPart part{size, color};
            cur.push_back(part);
            ncolor_rec(remaining - size, min_part, part, cur, visit);
            cur.pop_back();
        }
    }
}

} // namespace detail

/// Calls `visit` on every partition of n, largest first part first.
inline void for_each_partition(unsigned n, const std::function<void(const Partition&)>& visit) {
    std::vector<unsigned> cur;
    detail::partitions_rec(n, n, cur, visit);
}

inline std::vector<Partition> enumerate_partitions(unsigned n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// Calls `visit` on every n-color partition of m whose parts are all >= min_part.
inline void for_each_ncolor(unsigned m, unsigned min_part, const std::function<void(const NColorPartition&)>& visit) {
    if (min_part == 0) throw usage_error("enumerate_ncolor: min_part must be positive");
    std::vector<ColoredPart> cur;
    detail::ncolor_rec(m, min_part, ColoredPart{m, m}, cur, visit);
}

inline std::vector<NColorPartition> enumerate_ncolor(unsigned m, unsigned min_part = 1) {
    std::vector<NColorPartition> out;
    for_each_ncolor(m, min_part, [&](const NColorPartition& p) { out.push_back(p); });
    return out;
}

/// Hybrid objects of total weight w: colored parts >= r, plus any number of
/// uncolored copies of plain_part (< r).
inline void for_each_hybrid(unsigned w, unsigned plain_part, unsigned r,
                            const std::function<void(const HybridPartition&)>& visit) {
    if (plain_part == 0 || plain_part >= r)
        throw usage_error("enumerate_hybrid: need 1 <= plain_part < r");
    for (unsigned c = 0; c * plain_part <= w; ++c) {
        for_each_ncolor(w - c * plain_part, r, [&](const NColorPartition& p) {
            visit(HybridPartition{p, plain_part, c});
        });
    }
}

inline std::vector<HybridPartition> enumerate_hybrid(unsigned w, unsigned plain_part, unsigned r) {
    std::vector<HybridPartition> out;
    for_each_hybrid(w, plain_part, r, [&](const HybridPartition& h) { out.push_back(h); });
    return out;
}

inline std::uint64_t count_ncolor(unsigned m, unsigned min_part = 1) {
    std::uint64_t n = 0;
    for_each_ncolor(m, min_part, [&](const NColorPartition&) { ++n; });
    return n;
}

/// T_k^r(m) by direct counting of its defining objects.
inline std::uint64_t t_oracle(unsigned k, unsigned r, unsigned m) {
    if (k == 0 || r == 0) throw usage_error("t_oracle: k and r must be positive");
    if (m < k) return 0;
    if (r <= k) {
        std::uint64_t ks = 0;
        for_each_ncolor(m, r, [&](const NColorPartition& p) {
            for (const auto& part : p.parts)
                if (part.size == k) ++ks;
        });
        if (ks % k != 0)
            throw invariant_error("t_oracle: count of parts " + std::to_string(k) + " (" + std::to_string(ks) +
                                  ") not divisible by " + std::to_string(k));
        return ks / k;
    }
    std::uint64_t n = 0;
    for_each_hybrid(m - k, k, r, [&](const HybridPartition&) { ++n; });
    return n;
}

/// S_k(n): total number of parts equal to k over all partitions of n.
inline std::uint64_t s_oracle(unsigned k, unsigned n) {
    if (k == 0) throw usage_error("s_oracle: k must be positive");
    std::uint64_t total = 0;
    for_each_partition(n, [&](const Partition& p) {
        for (auto part : p.parts)
            if (part == k) ++total;
    });
    return total;
}

/// S_{s(k)}(n): over all partitions of n, the number of distinct sizes
/// kj+s (j >= 1) occurring exactly once.
inline std::uint64_t s_cong_oracle(unsigned s, unsigned k, unsigned n) {
    if (k == 0 || s >= k) throw usage_error("s_cong_oracle: need 0 <= s < k");
    std::uint64_t total = 0;
    for_each_partition(n, [&](const Partition& p) {
        std::map<unsigned, unsigned> mult;
        for (auto part : p.parts) ++mult[part];
        for (const auto& [size, count] : mult)
            if (count == 1 && size >= k + s && size % k == s) ++total;
    });
    return total;
}

/// S_{|k}(n): uniquely appearing parts divisible by k.
inline std::uint64_t s_div_oracle(unsigned k, unsigned n) { return s_cong_oracle(0, k, n); }

namespace detail {

// Number of (size, color) pairs occurring exactly once in an n-color
// partition of n, over all such partitions, restricted to sizes >= k+s
// with size = s (mod k).
inline std::uint64_t unique_colored_pairs(unsigned s, unsigned k, unsigned n) {
    std::uint64_t total = 0;
    for_each_ncolor(n, 1, [&](const NColorPartition& p) {
        std::map<ColoredPart, unsigned> mult;
        for (const auto& part : p.parts) ++mult[part];
        for (const auto& [part, count] : mult)
            if (count == 1 && part.size >= k + s && part.size % k == s) ++total;
    });
    return total;
}

} // namespace detail

/// T_{s(k)}(n)
inline std::uint64_t t_cong_oracle(unsigned s, unsigned k, unsigned n) {
    if (k == 0 || s >= k) throw usage_error("t_cong_oracle: need 0 <= s < k");
    return detail::unique_colored_pairs(s, k, n);
}

/// T_{|k}(n) = (1/k) * (uniquely appearing colored parts with k | size).
inline std::uint64_t t_div_oracle(unsigned k, unsigned n) {
    if (k == 0) throw usage_error("t_div_oracle: k must be positive");
    const auto raw = detail::unique_colored_pairs(0, k, n);
    if (raw % k != 0)
        throw invariant_error("t_div_oracle: unique-part count " + std::to_string(raw) + " not divisible by " +
                              std::to_string(k));
    return raw / k;
}

} // namespace ncolor::oracle
