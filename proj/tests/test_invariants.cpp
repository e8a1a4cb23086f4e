#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "primesg/invariants.hpp"

using namespace primesg;

namespace {

const PrimeTable& shared_table() {
    static const PrimeTable t = sieve(sieve_limit_for_n(600));
    return t;
}

} // namespace

TEST_CASE("record anchors", "[invariants]") {
    const auto r1 = record(1, shared_table());
    REQUIRE(r1.n == 1);
    REQUIRE(r1.p == 2);
    REQUIRE(r1.f == 1);
    REQUIRE(r1.g == 1);
    REQUIRE(r1.e == 2);
    REQUIRE(r1.u == 3);
    REQUIRE(r1.s == 1);

    const auto r8 = record(8, shared_table());
    REQUIRE(r8.p == 19);
    REQUIRE(r8.f == 63);
    REQUIRE(r8.e == 10);
    REQUIRE(r8.s == 24);
    REQUIRE(r8.g == r8.f + 1 - r8.s);

    const auto r15 = record(15, shared_table());
    REQUIRE(r15.p == 47);
    REQUIRE(r15.u == 163);
    REQUIRE(r15.u_p == Ratio(163, 47));

    const auto r30 = record(30, shared_table());
    REQUIRE(r30.f - 3 * r30.p == 30);
}

TEST_CASE("ratio fields are exact", "[invariants]") {
    const auto r = record(8, shared_table());
    REQUIRE(r.f_p == Ratio(63, 19));
    REQUIRE(r.s_p == Ratio(24, 19));
    REQUIRE(r.e_n == Ratio(5, 4)); // 10/8 reduced
    REQUIRE(Ratio(10, 8) == Ratio(5, 4));
    REQUIRE(Ratio(163, 47) > Ratio(17, 5));
}

TEST_CASE("assertion sweep is clean on [1, 100]", "[invariants]") {
    const auto report = run_assertions(1, 100, shared_table(), 2);
    REQUIRE(report.results.size() == 13);
    for (const auto& res : report.results) {
        INFO("assertion " << res.id << ": " << res.description);
        REQUIRE(res.pass);
        REQUIRE(res.failures.empty());
    }
    REQUIRE(report.all_pass());
}

TEST_CASE("equality branches fire exactly where allowed", "[invariants]") {
    const auto records = record_range(1, 200, shared_table(), 2);
    const auto report = run_assertions(records, 1, 200);
    auto equalities = [&](int id) { return report.results[static_cast<std::size_t>(id - 1)].equality_ns; };
    REQUIRE(equalities(4) == std::vector<std::int64_t>{8});
    REQUIRE(equalities(5) == std::vector<std::int64_t>{15});
    REQUIRE(equalities(6) == std::vector<std::int64_t>{8});
    REQUIRE(equalities(7) == std::vector<std::int64_t>{8});
    REQUIRE(equalities(9) == std::vector<std::int64_t>{30});

    SECTION("strict inequality everywhere else") {
        for (const auto& r : records) {
            if (r.n == 15) continue;
            REQUIRE(47 * r.u < 163 * r.p);
        }
    }
}

TEST_CASE("assertion failures are reported as data", "[invariants]") {
    // a fabricated record violating several lines must produce witnesses
    auto records = record_range(1, 10, shared_table());
    records[4].u = records[4].p; // u = p < 2p at n = 5
    const auto report = run_assertions(records, 1, 10);
    REQUIRE_FALSE(report.all_pass());
    const auto& a1 = report.results[0];
    REQUIRE_FALSE(a1.pass);
    REQUIRE(a1.failures.size() == 1);
    REQUIRE(a1.failures[0].n == 5);
}

TEST_CASE("lambda function", "[invariants]") {
    REQUIRE(lambda_fn(76129.0) > 2.46);
    REQUIRE(lambda_fn(76129.0) < 2.47);
    REQUIRE(std::abs(lambda_fn(std::exp(1.5))) < 1e-12);
    REQUIRE_THROWS_AS(lambda_fn(1.0), std::domain_error);
    REQUIRE_THROWS_AS(lambda_fn(0.5), std::domain_error);

    SECTION("monotonically increasing on a geometric grid") {
        // 120 points spanning [2, 10^7]
        const double lo = 2.0, hi = 1e7;
        double prev = lambda_fn(lo);
        for (int i = 1; i <= 120; ++i) {
            const double x = lo * std::pow(hi / lo, static_cast<double>(i) / 120.0);
            const double cur = lambda_fn(x);
            REQUIRE(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("delta function", "[invariants]") {
    REQUIRE(delta_fn(76147) < 0.124);
    REQUIRE(delta_fn(76147) > 0.123);
    REQUIRE(delta_fn(3) > delta_fn(1000000));
    REQUIRE_THROWS_AS(delta_fn(1), std::domain_error);

    SECTION("monotonically decreasing from p(5) = 11 on a geometric grid") {
        const double lo = 11.0, hi = 1e7;
        double prev = delta_fn(11);
        for (int i = 1; i <= 120; ++i) {
            const auto p = static_cast<std::int64_t>(lo * std::pow(hi / lo, i / 120.0));
            const double cur = delta_fn(p);
            REQUIRE(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("ratio extremes on [1, 200]", "[invariants]") {
    const auto t = ratio_extremes(1, 200, shared_table(), 2);
    REQUIRE(t.u_p.min == Ratio(3, 2));
    REQUIRE(t.u_p.argmin == 1);
    REQUIRE(t.u_p.max == Ratio(163, 47));
    REQUIRE(t.u_p.argmax == 15);
    REQUIRE(t.f_p.min == Ratio(1, 2));
    REQUIRE(t.f_p.argmin == 1);
    REQUIRE(t.g_p.min == Ratio(1, 2));
    REQUIRE(t.g_p.argmin == 1);
    REQUIRE(t.s_p.min == Ratio(1, 2));
    REQUIRE(t.f_p.max == Ratio(63, 19));
    REQUIRE(t.f_p.argmax == 8);
    REQUIRE(t.s_p.max == Ratio(24, 19));
    REQUIRE(t.s_p.argmax == 8);
    REQUIRE(t.e_n.min == Ratio(5, 4));
    REQUIRE(t.e_n.argmin == 8);
    // g/p has no asserted extreme; it is reported only
    REQUIRE(t.g_p.max < Ratio(5, 2));
}

TEST_CASE("frobenius number stays within [3p - 6, 4p)", "[invariants][property]") {
    for (const auto& r : record_range(1, 200, shared_table(), 2)) {
        INFO("n=" << r.n);
        REQUIRE(r.f >= 3 * r.p - 6);
        REQUIRE(r.f < 4 * r.p);
    }
}

TEST_CASE("prime counting clears the 2.4n threshold at the first n past the sweep",
          "[invariants]") {
    // chain used beyond n = 7495: with q = p(7495) = 76129, lambda(q)(n-1)
    // exceeds 2.46(n-1) > 2.4n, and pi(3q) must beat that count
    const auto t = sieve(3 * 76129);
    const double bound = lambda_fn(76129.0) * 7495.0;
    REQUIRE(bound > 2.46 * 7495.0);
    REQUIRE(2.46 * 7495.0 > 2.4 * 7496.0);
    REQUIRE(static_cast<double>(t.prime_pi(3 * 76129)) > bound);
    // atoms of S(7496) at least the primes in [p(7496), 3 * 76129]
    const std::int64_t atom_floor = t.prime_pi(3 * 76129) - t.prime_pi(76147) + 1;
    REQUIRE(atom_floor == 12796);
    REQUIRE(4 * atom_floor > 5 * 7496); // e/n > 5/4 continues past the sweep
}

TEST_CASE("corollary threshold checks on [1, 300]", "[invariants]") {
    const auto c = corollary_thresholds(1, 300, shared_table(), 387, 2);
    REQUIRE(c.ratio_floor_failures.empty());
    REQUIRE(c.six_p_failures.empty());
    REQUIRE(c.large_p_checked == 0); // p(300) is far below 670,294
    REQUIRE(c.ratio_order_ok);
    REQUIRE(c.K == 387);
    REQUIRE(c.threshold_n == 33); // smallest n with n ln n > (5/17) * 387
    REQUIRE(c.ok());

    SECTION("threshold definition holds") {
        const auto n = c.threshold_n;
        REQUIRE(static_cast<double>(n) * std::log(static_cast<double>(n)) > 5.0 * 387 / 17.0);
        REQUIRE_FALSE(static_cast<double>(n - 1) * std::log(static_cast<double>(n - 1)) >
                      5.0 * 387 / 17.0);
    }
}

TEST_CASE("large-p spot check machinery", "[invariants]") {
    // far below the 670,294 premise, but the exact comparison still runs
    const auto s = spot_check_large_p(300, shared_table());
    REQUIRE(s.p == shared_table().nth_prime(300));
    REQUIRE_FALSE(s.premise);
    REQUIRE(s.u == largest_atom_fast(300, shared_table()));
}
