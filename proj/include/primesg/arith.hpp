// arith.hpp
// Exact integer helpers: 128-bit saturating powers, integer square root,
// signed floor/ceil division, and a small exact rational type that is
// compared by cross-multiplication (never by floating point).

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace primesg {

using u128 = unsigned __int128;
using i128 = __int128;

// base^exp, saturating at the u128 maximum. Every quantity these powers are
// compared against fits far below 2^128 (p^7 < 2^114 for p <= 76,148), so a
// saturated result still compares exactly.
inline u128 pow_saturating(std::uint64_t base, unsigned exp) {
    const u128 kMax = ~u128{0};
    u128 result = 1;
    u128 b = base;
    while (exp > 0) {
        if (exp & 1u) {
            if (b != 0 && result > kMax / b) return kMax;
            result *= b;
        }
        exp >>= 1u;
        if (exp > 0) {
            if (b > 1 && b > kMax / b) return kMax;
            b *= b;
        }
    }
    return result;
}

// floor(sqrt(x)), exact.
inline std::uint64_t isqrt(std::uint64_t x) {
    if (x == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

// Floor/ceil division for signed numerators; divisor must be positive.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b) != 0 && a > 0) ++q;
    return q;
}

// Exact rational num/den, kept reduced with den > 0.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::domain_error("Ratio: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        if (const std::int64_t g = std::gcd(num < 0 ? -num : num, den); g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        const i128 lhs = static_cast<i128>(a.num) * b.den;
        const i128 rhs = static_cast<i128>(b.num) * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }
};

} // namespace primesg
