// invariants.hpp
// Per-n invariant records, the exact assertion program over n-ranges, the
// analytic helper functions lambda and delta, ratio extremes, and the
// corollary threshold checks. All inequality checks are exact integer or
// rational comparisons; floating point appears only in lambda and delta.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primesg/arith.hpp"
#include "primesg/parallel.hpp"
#include "primesg/semigroup.hpp"

namespace primesg {

struct InvariantRecord {
    std::int64_t n = 0, p = 0, f = 0, g = 0, e = 0, u = 0, s = 0;
    std::int64_t m = 0; // multiplicity, carried for the sanity check
    Ratio u_p, f_p, g_p, s_p, e_n;
};

inline InvariantRecord to_record(const SemigroupInstance& inst) {
    InvariantRecord r;
    r.n = inst.n;
    r.p = inst.p;
    r.f = inst.frobenius;
    r.g = inst.genus;
    r.e = inst.embedding_dim;
    r.u = inst.largest_atom;
    r.s = inst.sporadic;
    r.m = inst.multiplicity;
    r.u_p = Ratio(r.u, r.p);
    r.f_p = Ratio(r.f, r.p);
    r.g_p = Ratio(r.g, r.p);
    r.s_p = Ratio(r.s, r.p);
    r.e_n = Ratio(r.e, r.n);
    return r;
}

inline InvariantRecord record(std::int64_t n, const PrimeTable& table) {
    return to_record(build(n, table));
}

inline std::vector<InvariantRecord> record_range(std::int64_t n_lo, std::int64_t n_hi,
                                                 const PrimeTable& table, unsigned jobs = 1,
                                                 const ProgressFn& tick = {}) {
    if (n_lo < 1 || n_lo > n_hi) throw std::domain_error("record_range: need 1 <= n_lo <= n_hi");
    std::vector<InvariantRecord> out(static_cast<std::size_t>(n_hi - n_lo + 1));
    parallel_for_index(
        n_hi - n_lo + 1, jobs,
        [&](std::int64_t i) { out[static_cast<std::size_t>(i)] = record(n_lo + i, table); }, tick);
    return out;
}

struct AssertionWitness {
    std::int64_t n = 0;
    std::string detail;
};

struct AssertionResult {
    int id = 0;
    std::string description;
    bool pass = true;
    std::vector<AssertionWitness> failures;
    std::vector<std::int64_t> equality_ns; // n where an allowed equality branch fired
};

struct AssertionReport {
    std::int64_t n_lo = 0, n_hi = 0;
    std::vector<AssertionResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

// The eleven per-n assertions plus the multiplicity and window sanity
// checks, evaluated with exact integer arithmetic. Failures are collected as
// witnesses, never thrown.
inline AssertionReport run_assertions(std::span<const InvariantRecord> records,
                                      std::int64_t n_lo, std::int64_t n_hi) {
    AssertionReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.results = {
        {1, "u > 2p (n >= 2)", true, {}, {}},
        {2, "s > n - 1", true, {}, {}},
        {3, "e > n", true, {}, {}},
        {4, "5n < 4e, equality only at n = 8", true, {}, {}},
        {5, "47u < 163p, equality only at n = 15", true, {}, {}},
        {6, "19f < 63p, equality only at n = 8", true, {}, {}},
        {7, "19s < 24p, equality only at n = 8", true, {}, {}},
        {8, "(u - 3p)^10 < p^7 (n > 46)", true, {}, {}},
        {9, "f - 3p < n, equality only at n = 30", true, {}, {}},
        {10, "(f - 3p)^10 < p^7 (n > 30)", true, {}, {}},
        {11, "8u >= 23p (n > 13)", true, {}, {}},
        {12, "multiplicity equals p", true, {}, {}},
        {13, "f < 4p (window sanity)", true, {}, {}},
    };

    auto fail = [&](int id, std::int64_t n, std::string detail) {
        auto& res = report.results[static_cast<std::size_t>(id - 1)];
        res.pass = false;
        res.failures.push_back({n, std::move(detail)});
    };
    auto equality = [&](int id, std::int64_t n) {
        report.results[static_cast<std::size_t>(id - 1)].equality_ns.push_back(n);
    };

    for (const auto& r : records) {
        const std::int64_t n = r.n, p = r.p, f = r.f, e = r.e, u = r.u, s = r.s;

        if (!(n < 2 || u > 2 * p)) fail(1, n, "u=" + std::to_string(u));
        if (!(s > n - 1)) fail(2, n, "s=" + std::to_string(s));
        if (!(e > n)) fail(3, n, "e=" + std::to_string(e));

        if (5 * n == 4 * e) equality(4, n);
        if (!((n == 8 && 5 * n == 4 * e) || (5 * n < 4 * e)))
            fail(4, n, "5n=" + std::to_string(5 * n) + " 4e=" + std::to_string(4 * e));

        if (47 * u == 163 * p) equality(5, n);
        if (!((n == 15 && 47 * u == 163 * p) || (n != 15 && 47 * u < 163 * p)))
            fail(5, n, "47u=" + std::to_string(47 * u) + " 163p=" + std::to_string(163 * p));

        if (19 * f == 63 * p) equality(6, n);
        if (!((n == 8 && 19 * f == 63 * p) || (n != 8 && 19 * f < 63 * p)))
            fail(6, n, "19f=" + std::to_string(19 * f) + " 63p=" + std::to_string(63 * p));

        if (19 * s == 24 * p) equality(7, n);
        if (!((n == 8 && 19 * s == 24 * p) || (n != 8 && 19 * s < 24 * p)))
            fail(7, n, "19s=" + std::to_string(19 * s) + " 24p=" + std::to_string(24 * p));

        const std::int64_t du = u - 3 * p;
        const std::int64_t df = f - 3 * p;
        const u128 p7 = pow_saturating(static_cast<std::uint64_t>(p), 7);
        if (!(n <= 46 ||
              pow_saturating(static_cast<std::uint64_t>(du < 0 ? -du : du), 10) < p7))
            fail(8, n, "u-3p=" + std::to_string(du));

        if (df == n) equality(9, n);
        if (!((n == 30 && df == n) || (df < n))) fail(9, n, "f-3p=" + std::to_string(df));

        if (!(n <= 30 ||
              pow_saturating(static_cast<std::uint64_t>(df < 0 ? -df : df), 10) < p7))
            fail(10, n, "f-3p=" + std::to_string(df));

        if (!(n <= 13 || 8 * u >= 23 * p))
            fail(11, n, "8u=" + std::to_string(8 * u) + " 23p=" + std::to_string(23 * p));

        if (r.m != p) fail(12, n, "multiplicity=" + std::to_string(r.m));
        if (!(f < 4 * p)) fail(13, n, "f=" + std::to_string(f));
    }
    return report;
}

inline AssertionReport run_assertions(std::int64_t n_lo, std::int64_t n_hi,
                                      const PrimeTable& table, unsigned jobs = 1,
                                      const ProgressFn& tick = {}) {
    const auto records = record_range(n_lo, n_hi, table, jobs, tick);
    return run_assertions(records, n_lo, n_hi);
}

// lambda(x) = 3(log x - 3/2) / (log 3x - 1/2), natural logarithm.
inline double lambda_fn(double x) {
    if (!(x > 1.0)) throw std::domain_error("lambda_fn: x must be > 1");
    return 3.0 * (std::log(x) - 1.5) / (std::log(3.0 * x) - 0.5);
}

// delta(p) = (8/5) sqrt(3) log(3p) / sqrt(p).
inline double delta_fn(std::int64_t p) {
    if (p < 2) throw std::domain_error("delta_fn: p must be >= 2");
    const double pd = static_cast<double>(p);
    return 1.6 * std::sqrt(3.0) * std::log(3.0 * pd) / std::sqrt(pd);
}

struct RatioExtreme {
    Ratio min;
    std::int64_t argmin = 0;
    Ratio max;
    std::int64_t argmax = 0;
};

struct ExtremesTable {
    std::int64_t n_lo = 0, n_hi = 0;
    RatioExtreme u_p, f_p, g_p, s_p, e_n;
};

inline ExtremesTable ratio_extremes(std::span<const InvariantRecord> records) {
    if (records.empty()) throw std::domain_error("ratio_extremes: empty range");
    ExtremesTable t;
    t.n_lo = records.front().n;
    t.n_hi = records.back().n;
    auto scan = [&](RatioExtreme& ex, auto pick) {
        ex.min = pick(records.front());
        ex.max = pick(records.front());
        ex.argmin = ex.argmax = records.front().n;
        for (const auto& r : records) {
            const Ratio v = pick(r);
            if (v < ex.min) { ex.min = v; ex.argmin = r.n; }
            if (v > ex.max) { ex.max = v; ex.argmax = r.n; }
        }
    };
    scan(t.u_p, [](const InvariantRecord& r) { return r.u_p; });
    scan(t.f_p, [](const InvariantRecord& r) { return r.f_p; });
    scan(t.g_p, [](const InvariantRecord& r) { return r.g_p; });
    scan(t.s_p, [](const InvariantRecord& r) { return r.s_p; });
    scan(t.e_n, [](const InvariantRecord& r) { return r.e_n; });
    return t;
}

inline ExtremesTable ratio_extremes(std::int64_t n_lo, std::int64_t n_hi, const PrimeTable& table,
                                    unsigned jobs = 1) {
    const auto records = record_range(n_lo, n_hi, table, jobs);
    return ratio_extremes(records);
}

// Smallest n with n * ln(n) > (5/17) K.
inline std::int64_t threshold_n_for_k(std::int64_t K) {
    if (K < 1) throw std::domain_error("threshold_n_for_k: K must be >= 1");
    const double target = 5.0 * static_cast<double>(K) / 17.0;
    for (std::int64_t n = 1;; ++n) {
        if (static_cast<double>(n) * std::log(static_cast<double>(n)) > target) return n;
    }
}

struct CorollaryChecks {
    std::int64_t n_lo = 0, n_hi = 0;
    std::int64_t large_p_checked = 0; // count of n with p >= 670,294 in range
    std::vector<AssertionWitness> large_p_failures; // 16598 u > 49791 p violated there
    std::vector<AssertionWitness> ratio_floor_failures; // 8u >= 23p violated for n > 13
    std::vector<AssertionWitness> six_p_failures;       // u < 6p violated
    bool ratio_order_ok = false;                        // 163/47 > 17/5
    std::optional<std::int64_t> K;
    std::int64_t threshold_n = 0; // smallest n with n ln n > (5/17) K, when K given

    bool ok() const {
        return large_p_failures.empty() && ratio_floor_failures.empty() && six_p_failures.empty() &&
               ratio_order_ok;
    }
};

inline CorollaryChecks corollary_thresholds(std::span<const InvariantRecord> records,
                                            std::optional<std::int64_t> K = std::nullopt) {
    if (records.empty()) throw std::domain_error("corollary_thresholds: empty range");
    CorollaryChecks c;
    c.n_lo = records.front().n;
    c.n_hi = records.back().n;
    for (const auto& r : records) {
        if (r.p >= 670294) {
            ++c.large_p_checked;
            // u/p > 3 - 3/16598 = 49791/16598, exact
            if (!(16598 * r.u > 49791 * r.p))
                c.large_p_failures.push_back({r.n, "u=" + std::to_string(r.u)});
        }
        if (r.n > 13 && !(8 * r.u >= 23 * r.p))
            c.ratio_floor_failures.push_back({r.n, "u=" + std::to_string(r.u)});
        if (!(r.u < 6 * r.p)) c.six_p_failures.push_back({r.n, "u=" + std::to_string(r.u)});
    }
    c.ratio_order_ok = Ratio(163, 47) > Ratio(17, 5);
    if (K) {
        c.K = K;
        c.threshold_n = threshold_n_for_k(*K);
    }
    return c;
}

inline CorollaryChecks corollary_thresholds(std::int64_t n_lo, std::int64_t n_hi,
                                            const PrimeTable& table,
                                            std::optional<std::int64_t> K = std::nullopt,
                                            unsigned jobs = 1) {
    const auto records = record_range(n_lo, n_hi, table, jobs);
    return corollary_thresholds(records, K);
}

struct LargePSpotCheck {
    std::int64_t n = 0, p = 0, u = 0;
    bool premise = false; // p >= 670,294
    bool holds = false;   // 16598 u > 49791 p
};

// Spot check of the effective lower bound u/p > 3 - 3/16598 at a single n,
// using the three-prime fast path for u instead of the full DP.
inline LargePSpotCheck spot_check_large_p(std::int64_t n, const PrimeTable& table) {
    LargePSpotCheck s;
    s.n = n;
    s.p = table.nth_prime(n);
    s.u = largest_atom_fast(n, table);
    s.premise = s.p >= 670294;
    s.holds = 16598 * s.u > 49791 * s.p;
    return s;
}

} // namespace primesg
