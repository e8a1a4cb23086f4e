// goldbach.hpp
// Windowed three-prime representations of odd integers: exact rational
// windows |N/3 - q| <= N/t, exception scans over N-ranges, representation
// counts r(N), and the sqrt-window variant [N/3 - sqrt(N), N/3 + sqrt(N)].
//
// All window comparisons are exact: |3q - N| * t_num <= 3 N t_den for the
// rational windows and (3q - N)^2 <= 9N for the sqrt windows. r(N) counts
// unordered multisets q1 <= q2 <= q3; ordered counts are exposed alongside.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primesg/arith.hpp"
#include "primesg/parallel.hpp"
#include "primesg/primes.hpp"

namespace primesg {

struct WindowSpec {
    std::int64_t t_num = 6;
    std::int64_t t_den = 1;
    bool closed = true; // endpoint inclusion: <= N/t rather than < N/t

    WindowSpec() = default;
    WindowSpec(std::int64_t num, std::int64_t den, bool closed_endpoints = true)
        : t_num(num), t_den(den), closed(closed_endpoints) {
        if (t_num < 1 || t_den < 1 || t_num > 1000000 || t_den > 1000000)
            throw std::domain_error("WindowSpec: t must be a positive rational with parts <= 10^6");
        if (!(t_num > 3 * t_den)) throw std::domain_error("WindowSpec: t must be > 3");
    }

    // "7" or "27/4"
    static WindowSpec parse(std::string_view text, bool closed_endpoints = true) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return WindowSpec(std::stoll(std::string(text)), 1, closed_endpoints);
            return WindowSpec(std::stoll(std::string(text.substr(0, slash))),
                              std::stoll(std::string(text.substr(slash + 1))), closed_endpoints);
        } catch (const std::invalid_argument&) {
            throw std::domain_error("WindowSpec: cannot parse t from '" + std::string(text) + "'");
        }
    }

    std::string str() const {
        if (t_den == 1) return std::to_string(t_num);
        return std::to_string(t_num) + "/" + std::to_string(t_den);
    }
};

struct Representation {
    std::int64_t q1 = 0, q2 = 0, q3 = 0;
    std::int64_t N = 0;
    friend bool operator==(const Representation&, const Representation&) = default;
};

// Exact window membership |N/3 - q| <= N/t (strict when the window is open).
inline bool in_window(std::int64_t N, const WindowSpec& w, std::int64_t q) {
    const std::int64_t dev = 3 * q - N;
    const std::int64_t lhs = (dev < 0 ? -dev : dev) * w.t_num;
    const std::int64_t rhs = 3 * N * w.t_den;
    return w.closed ? lhs <= rhs : lhs < rhs;
}

// Integer endpoints [qlo, qhi] of the window, qlo clamped to 2.
inline std::pair<std::int64_t, std::int64_t> window_bounds(std::int64_t N, const WindowSpec& w) {
    const std::int64_t lo_num = N * (w.t_num - 3 * w.t_den);
    const std::int64_t hi_num = N * (w.t_num + 3 * w.t_den);
    const std::int64_t den = 3 * w.t_num;
    std::int64_t qlo, qhi;
    if (w.closed) {
        qlo = ceil_div(lo_num, den);
        qhi = floor_div(hi_num, den);
    } else {
        qlo = floor_div(lo_num, den) + 1;
        qhi = ceil_div(hi_num, den) - 1;
    }
    return {std::max<std::int64_t>(qlo, 2), qhi};
}

inline void require_odd_target(std::int64_t N, const PrimeTable& table, const char* who) {
    if (N < 7 || N % 2 == 0)
        throw std::domain_error(std::string(who) + ": N must be odd and >= 7, got " +
                                std::to_string(N));
    if (N > table.limit())
        throw std::out_of_range(std::string(who) + ": N=" + std::to_string(N) +
                                " exceeds sieve limit " + std::to_string(table.limit()));
}

namespace rep_detail {

inline std::vector<Representation> enumerate(std::int64_t N, std::int64_t qlo, std::int64_t qhi,
                                             const PrimeTable& table) {
    std::vector<Representation> out;
    if (qlo > qhi) return out;
    const auto wp = table.prime_span(qlo, std::min(qhi, N));
    for (std::size_t i = 0; i < wp.size(); ++i) {
        const std::int64_t q1 = wp[i];
        if (3 * q1 > N) break;
        for (std::size_t j = i; j < wp.size(); ++j) {
            const std::int64_t q2 = wp[j];
            const std::int64_t q3 = N - q1 - q2;
            if (q3 < q2) break;
            if (q3 <= qhi && table.is_prime(q3)) out.push_back({q1, q2, q3, N});
        }
    }
    return out;
}

} // namespace rep_detail

// All unordered representations N = q1 + q2 + q3 with window primes.
inline std::vector<Representation> window_reps(std::int64_t N, const WindowSpec& w,
                                               const PrimeTable& table) {
    require_odd_target(N, table, "window_reps");
    const auto [qlo, qhi] = window_bounds(N, w);
    return rep_detail::enumerate(N, qlo, qhi, table);
}

// Reversed prime bits: pairs every word of the sieve with its mirror so
// "q and E - q both prime" scans run 64 candidates per AND.
class PrimeReflection {
public:
    explicit PrimeReflection(const PrimeTable& table)
        : table_(&table),
          top_(static_cast<std::size_t>(table.limit())),
          rev_(table.bits().reversed(top_)) {}

    // #{w in [lo, hi] : w prime and E - w prime}
    std::int64_t count_pairs(std::int64_t E, std::int64_t lo, std::int64_t hi) const {
        if (lo < 2) lo = 2;
        if (hi > E - 2) hi = E - 2;
        if (lo > hi || E < 4 || E > table_->limit()) return 0;
        return static_cast<std::int64_t>(table_->bits().count_pair_offset(
            rev_, top_ - static_cast<std::size_t>(E), static_cast<std::size_t>(lo),
            static_cast<std::size_t>(hi)));
    }

    bool any_pair(std::int64_t E, std::int64_t lo, std::int64_t hi) const {
        if (lo < 2) lo = 2;
        if (hi > E - 2) hi = E - 2;
        if (lo > hi || E < 4 || E > table_->limit()) return false;
        return table_->bits().any_pair_offset(rev_, top_ - static_cast<std::size_t>(E),
                                              static_cast<std::size_t>(lo),
                                              static_cast<std::size_t>(hi));
    }

private:
    const PrimeTable* table_;
    std::size_t top_;
    BitArray rev_;
};

// r(N): unordered representation count under the window.
inline std::int64_t count_window_reps(std::int64_t N, const WindowSpec& w, const PrimeTable& table,
                                      const PrimeReflection& refl) {
    require_odd_target(N, table, "count_window_reps");
    const auto [qlo, qhi] = window_bounds(N, w);
    if (qlo > qhi) return 0;
    std::int64_t r = 0;
    for (const std::int64_t q1 : table.prime_span(qlo, std::min(qhi, N / 3))) {
        const std::int64_t rest = N - q1;
        r += refl.count_pairs(rest, std::max(q1, rest - qhi), rest / 2);
    }
    return r;
}

inline bool has_window_rep(std::int64_t N, const WindowSpec& w, const PrimeTable& table,
                           const PrimeReflection& refl) {
    require_odd_target(N, table, "has_window_rep");
    const auto [qlo, qhi] = window_bounds(N, w);
    if (qlo > qhi) return false;
    for (const std::int64_t q1 : table.prime_span(qlo, std::min(qhi, N / 3))) {
        const std::int64_t rest = N - q1;
        if (refl.any_pair(rest, std::max(q1, rest - qhi), rest / 2)) return true;
    }
    return false;
}

// Ordered tuple count: every (q1, q2, q3) permutation counted separately.
inline std::int64_t count_window_reps_ordered(std::int64_t N, const WindowSpec& w,
                                              const PrimeTable& table,
                                              const PrimeReflection& refl) {
    require_odd_target(N, table, "count_window_reps_ordered");
    const auto [qlo, qhi] = window_bounds(N, w);
    if (qlo > qhi) return 0;
    std::int64_t r = 0;
    for (const std::int64_t q1 : table.prime_span(qlo, std::min(qhi, N - 4))) {
        const std::int64_t rest = N - q1;
        r += refl.count_pairs(rest, std::max(qlo, rest - qhi), std::min(qhi, rest - qlo));
    }
    return r;
}

// Ascending odd N in [K, limit] without a window representation.
inline std::vector<std::int64_t> h_exceptions(std::int64_t K, const WindowSpec& w,
                                              std::int64_t limit, const PrimeTable& table,
                                              unsigned jobs = 1) {
    if (K < 7 || K % 2 == 0)
        throw std::domain_error("h_exceptions: K must be odd and >= 7");
    if (limit < K || limit > table.limit())
        throw std::out_of_range("h_exceptions: limit must lie in [K, sieve limit]");
    const PrimeReflection refl(table);
    const std::int64_t count = (limit - K) / 2 + 1;
    std::vector<char> ok(static_cast<std::size_t>(count), 0);
    parallel_for_index(count, jobs, [&](std::int64_t i) {
        ok[static_cast<std::size_t>(i)] = has_window_rep(K + 2 * i, w, table, refl) ? 1 : 0;
    });
    std::vector<std::int64_t> exceptions;
    for (std::int64_t i = 0; i < count; ++i)
        if (!ok[static_cast<std::size_t>(i)]) exceptions.push_back(K + 2 * i);
    return exceptions;
}

// r(N) over every odd N of a range, under one window.
struct RepSeries {
    std::int64_t n_lo = 0, n_hi = 0;
    WindowSpec window;
    std::vector<std::int64_t> counts;  // index (N - n_lo) / 2
    std::vector<std::uint8_t> n_prime; // 1 where N itself is prime

    std::size_t size() const { return counts.size(); }
    std::int64_t n_at(std::size_t i) const { return n_lo + 2 * static_cast<std::int64_t>(i); }

    std::int64_t r(std::int64_t N) const {
        if (N < n_lo || N > n_hi || (N - n_lo) % 2 != 0)
            throw std::out_of_range("RepSeries::r: N=" + std::to_string(N) +
                                    " not an odd member of [" + std::to_string(n_lo) + "," +
                                    std::to_string(n_hi) + "]");
        return counts[static_cast<std::size_t>((N - n_lo) / 2)];
    }
};

inline RepSeries rep_count_series(std::int64_t n_lo, std::int64_t n_hi, const WindowSpec& w,
                                  const PrimeTable& table, unsigned jobs = 1,
                                  bool ordered = false) {
    if (n_lo < 7 || n_lo % 2 == 0 || n_hi % 2 == 0 || n_lo > n_hi)
        throw std::domain_error("rep_count_series: range must be odd and 7 <= n_lo <= n_hi");
    if (n_hi > table.limit())
        throw std::out_of_range("rep_count_series: n_hi exceeds sieve limit");
    const PrimeReflection refl(table);
    RepSeries series;
    series.n_lo = n_lo;
    series.n_hi = n_hi;
    series.window = w;
    const std::int64_t count = (n_hi - n_lo) / 2 + 1;
    series.counts.assign(static_cast<std::size_t>(count), 0);
    series.n_prime.assign(static_cast<std::size_t>(count), 0);
    parallel_for_index(count, jobs, [&](std::int64_t i) {
        const std::int64_t N = n_lo + 2 * i;
        series.counts[static_cast<std::size_t>(i)] =
            ordered ? count_window_reps_ordered(N, w, table, refl)
                    : count_window_reps(N, w, table, refl);
        series.n_prime[static_cast<std::size_t>(i)] = table.is_prime(N) ? 1 : 0;
    });
    return series;
}

// Integer endpoints of [N/3 - sqrt(N), N/3 + sqrt(N)]: |3q - N| <= sqrt(9N)
// for integers is |3q - N| <= isqrt(9N).
inline std::pair<std::int64_t, std::int64_t> sqrt_window_bounds(std::int64_t N) {
    const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(9 * N)));
    return {std::max<std::int64_t>(ceil_div(N - s, 3), 2), floor_div(N + s, 3)};
}

// Representations with every summand in [N/3 - sqrt(N), N/3 + sqrt(N)].
inline std::vector<Representation> sqrt_window_check(std::int64_t N, const PrimeTable& table) {
    require_odd_target(N, table, "sqrt_window_check");
    const auto [qlo, qhi] = sqrt_window_bounds(N);
    return rep_detail::enumerate(N, qlo, qhi, table);
}

// Odd N in [n_lo, n_hi] whose sqrt window admits no representation.
inline std::vector<std::int64_t> sqrt_window_exceptions(std::int64_t n_lo, std::int64_t n_hi,
                                                        const PrimeTable& table,
                                                        unsigned jobs = 1) {
    if (n_lo < 7 || n_lo % 2 == 0 || n_hi % 2 == 0 || n_lo > n_hi)
        throw std::domain_error("sqrt_window_exceptions: range must be odd and 7 <= n_lo <= n_hi");
    if (n_hi > table.limit())
        throw std::out_of_range("sqrt_window_exceptions: n_hi exceeds sieve limit");
    const PrimeReflection refl(table);
    const std::int64_t count = (n_hi - n_lo) / 2 + 1;
    std::vector<char> ok(static_cast<std::size_t>(count), 0);
    parallel_for_index(count, jobs, [&](std::int64_t i) {
        const std::int64_t N = n_lo + 2 * i;
        const auto [qlo, qhi] = sqrt_window_bounds(N);
        bool found = false;
        for (const std::int64_t q1 : table.prime_span(qlo, std::min(qhi, N / 3))) {
            const std::int64_t rest = N - q1;
            if (refl.any_pair(rest, std::max(q1, rest - qhi), rest / 2)) {
                found = true;
                break;
            }
        }
        ok[static_cast<std::size_t>(i)] = found ? 1 : 0;
    });
    std::vector<std::int64_t> exceptions;
    for (std::int64_t i = 0; i < count; ++i)
        if (!ok[static_cast<std::size_t>(i)]) exceptions.push_back(n_lo + 2 * i);
    return exceptions;
}

} // namespace primesg
