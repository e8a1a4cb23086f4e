// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// The default run covers the n ranges a laptop finishes in seconds; pass
// --extended to also sweep the assertion program over n in [1, 7495]
// (several minutes, uses all cores).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "primesg/invariants.hpp"
#include "primesg/report.hpp"

using namespace primesg;

namespace {

int failures = 0;
std::vector<std::string> notes;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        notes.push_back(what);
        std::cout << "    FAILED: " << what << "\n";
    }
}

class Criterion {
public:
    Criterion(int id, std::string title, double budget_seconds = 0.0)
        : id_(id), title_(std::move(title)), budget_(budget_seconds),
          start_(std::chrono::steady_clock::now()), failures_before_(failures) {}

    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        bool ok = failures == failures_before_;
        if (budget_ > 0.0 && secs > budget_) {
            ok = false;
            ++failures;
            std::cout << "    FAILED: runtime " << secs << " s exceeds budget " << budget_
                      << " s\n";
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f s", secs);
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id_ << ": " << title_ << " ("
                  << buf << ")\n";
    }

private:
    int id_;
    std::string title_;
    double budget_;
    std::chrono::steady_clock::time_point start_;
    int failures_before_;
};

} // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--extended") == 0) extended = true;

    const unsigned jobs = resolve_jobs(0);
    std::filesystem::create_directories("acceptance_out");

    const PrimeTable table_n = sieve(sieve_limit_for_n(1000));
    const PrimeTable table_N = sieve(100000);

    // ---------------------------------------------------------------- 1
    {
        Criterion c(1, "small-n golden records match the brute-force oracle", 1.0);
        const auto s1 = build(1, table_n);
        const auto s2 = build(2, table_n);
        check(s1.frobenius == 1 && s1.genus == 1 && s1.embedding_dim == 2 &&
                  s1.largest_atom == 3 && s1.sporadic == 1,
              "record(1) != (f,g,e,u,s) = (1,1,2,3,1)");
        check(s2.frobenius == 4 && s2.genus == 3 && s2.embedding_dim == 3 &&
                  s2.largest_atom == 7 && s2.sporadic == 2,
              "record(2) != (f,g,e,u,s) = (4,3,3,7,2)");
        for (std::int64_t m = 0; m <= 120; ++m) {
            if (is_member(s1, m) != oracle_membership(m, 2)) check(false, "oracle mismatch S(1)");
            if (is_member(s2, m) != oracle_membership(m, 3)) check(false, "oracle mismatch S(2)");
        }
    }

    // ---------------------------------------------------------------- 2
    {
        Criterion c(2, "exact equalities at n = 8, 15, 30", 5.0);
        const auto r8 = record(8, table_n);
        check(r8.p == 19 && r8.f == 63 && r8.e == 10 && r8.s == 24,
              "record(8) != (p,f,e,s) = (19,63,10,24)");
        check(19 * r8.f == 63 * r8.p && 5 * 8 == 4 * r8.e && 19 * r8.s == 24 * r8.p,
              "n=8 equalities 19f=63p, 5n=4e, 19s=24p");
        const auto r15 = record(15, table_n);
        check(r15.p == 47 && r15.u == 163 && 47 * r15.u == 163 * r15.p, "record(15) u != 163");
        const auto r30 = record(30, table_n);
        check(r30.f - 3 * r30.p == 30, "record(30) f - 3p != 30");
    }

    // ---------------------------------------------------------------- 3
    std::vector<InvariantRecord> records;
    {
        Criterion c(3, std::string("assertion program clean on n in [1, 1000]") +
                           (extended ? " and on [1, 7495]" : " (full range via --extended)"),
                    60.0 * (extended ? 60.0 : 1.0));
        records = record_range(1, 1000, table_n, jobs);
        const auto report = run_assertions(records, 1, 1000);
        check(report.results.size() == 13, "expected 13 assertion rows");
        for (const auto& res : report.results)
            check(res.pass, "assertion " + std::to_string(res.id) + " (" + res.description +
                                ") failed at n=" +
                                (res.failures.empty() ? std::string("?")
                                                      : std::to_string(res.failures[0].n)));
        if (extended) {
            const PrimeTable big = sieve(sieve_limit_for_n(7495));
            const auto full = run_assertions(1, 7495, big, jobs);
            for (const auto& res : full.results)
                check(res.pass, "extended assertion " + std::to_string(res.id) + " failed");
        }
    }

    // ---------------------------------------------------------------- 4
    {
        Criterion c(4, "ratio extremes at the expected n");
        const auto t = ratio_extremes(records);
        check(t.u_p.min == Ratio(3, 2) && t.u_p.argmin == 1, "min u/p != 3/2 at n=1");
        check(t.e_n.min == Ratio(5, 4) && t.e_n.argmin == 8, "min e/n != 5/4 at n=8");
        check(t.u_p.max == Ratio(163, 47) && t.u_p.argmax == 15, "max u/p != 163/47 at n=15");
        check(t.f_p.max == Ratio(63, 19) && t.f_p.argmax == 8, "max f/p != 63/19 at n=8");
        check(t.s_p.max == Ratio(24, 19) && t.s_p.argmax == 8, "max s/p != 24/19 at n=8");
    }

    // ---------------------------------------------------------------- 5
    {
        Criterion c(5, "window exception scans: {23, 27} at t=7, none at t=6", 300.0);
        const auto ex7 = h_exceptions(7, WindowSpec(7, 1), 9999, table_N, jobs);
        check(ex7 == std::vector<std::int64_t>{23, 27}, "t=7 exceptions below 10^4 != {23, 27}");
        const auto ex6 = h_exceptions(7, WindowSpec(6, 1), 99999, table_N, jobs);
        check(ex6.empty(), "t=6 scan to 99,999 found exceptions");
        check(!window_reps(27, WindowSpec(27, 4), table_N).empty(), "27 unrepresentable at t=27/4");
        for (const auto& w :
             {WindowSpec(6751, 1000), WindowSpec(34, 5), WindowSpec(7, 1), WindowSpec(26, 1)})
            check(window_reps(27, w, table_N).empty(),
                  "27 gained a representation at t=" + w.str() + " > 27/4");
    }

    // ---------------------------------------------------------------- 6
    {
        Criterion c(6, "sqrt-window representation exists for every odd N up to 99,999", 300.0);
        const auto exc = sqrt_window_exceptions(7, 99999, table_N, jobs);
        check(exc.empty(), "sqrt-window scan found " + std::to_string(exc.size()) + " exceptions");
    }

    // ---------------------------------------------------------------- 7
    {
        Criterion c(7, "analytic thresholds and exact ratio floors");
        check(lambda_fn(76129.0) > 2.46, "lambda(76129) <= 2.46");
        check(delta_fn(76147) < 0.124, "delta at p=76147 >= 0.124");
        const auto cor = corollary_thresholds(records);
        check(cor.ratio_floor_failures.empty(), "8u >= 23p violated for some n > 13");
        check(cor.six_p_failures.empty(), "u < 6p violated");
        check(cor.ratio_order_ok, "163/47 > 17/5 failed");
    }

    // ---------------------------------------------------------------- 8
    {
        Criterion c(8, "oracle equivalence and ordered/unordered count consistency");
        for (std::int64_t n = 1; n <= 5; ++n) {
            const auto s = build(n, table_n);
            for (std::int64_t m = 0; m <= 200; ++m)
                if (is_member(s, m) != oracle_membership(m, s.p)) {
                    check(false, "membership oracle mismatch at n=" + std::to_string(n) +
                                     " m=" + std::to_string(m));
                    break;
                }
        }
        const WindowSpec w6(6, 1);
        const PrimeReflection refl(table_N);
        for (std::int64_t N = 7; N <= 2001; N += 2) {
            const auto reps = window_reps(N, w6, table_N);
            std::int64_t expected_ordered = 0;
            for (const auto& rep : reps) {
                if (rep.q1 == rep.q2 && rep.q2 == rep.q3) expected_ordered += 1;
                else if (rep.q1 == rep.q2 || rep.q2 == rep.q3) expected_ordered += 3;
                else expected_ordered += 6;
            }
            const auto unordered = count_window_reps(N, w6, table_N, refl);
            const auto ordered = count_window_reps_ordered(N, w6, table_N, refl);
            if (unordered != static_cast<std::int64_t>(reps.size()) ||
                ordered != expected_ordered) {
                check(false, "count mismatch at N=" + std::to_string(N));
                break;
            }
        }
    }

    // ---------------------------------------------------------------- 9
    {
        Criterion c(9, "power gap bounds for large n, plus trend report");
        for (const auto& r : records) {
            const auto p7 = pow_saturating(static_cast<std::uint64_t>(r.p), 7);
            const std::int64_t du = r.u - 3 * r.p, df = r.f - 3 * r.p;
            if (r.n > 46)
                check(pow_saturating(static_cast<std::uint64_t>(du < 0 ? -du : du), 10) < p7,
                      "(u-3p)^10 >= p^7 at n=" + std::to_string(r.n));
            if (r.n > 30)
                check(pow_saturating(static_cast<std::uint64_t>(df < 0 ? -df : df), 10) < p7,
                      "(f-3p)^10 >= p^7 at n=" + std::to_string(r.n));
        }
        std::cout << "    trend (report only):  n      g/p        u/p\n";
        for (const std::int64_t n : {100, 250, 500, 750, 1000}) {
            const auto& r = records[static_cast<std::size_t>(n - 1)];
            char buf[96];
            std::snprintf(buf, sizeof(buf), "    %24lld  %s = %.4f  %s = %.4f\n",
                          static_cast<long long>(n), r.g_p.str().c_str(), r.g_p.value(),
                          r.u_p.str().c_str(), r.u_p.value());
            std::cout << buf;
        }
    }

    // ---------------------------------------------------------------- 10
    {
        Criterion c(10, "figure reproduction: deterministic SVG, exact synthetic fit", 600.0);
        const auto fig1 = rep_count_series(7, 99999, WindowSpec(6, 1), table_N, jobs);
        bool all_positive = true;
        for (const auto r : fig1.counts) all_positive = all_positive && r >= 1;
        check(all_positive, "some r(N) = 0 in 7..99,999 at t=6");

        // figure 1: linear scatter over the full range
        const auto svg1 = render_chart(fig1, ChartMode::linear, nullptr);
        check(svg1 == render_chart(fig1, ChartMode::linear, nullptr),
              "figure 1 SVG not deterministic");
        write_file(svg1, "acceptance_out/figure1.svg");

        // figure 2: log-log over 999..49,999 with the OLS line
        RepSeries fig2;
        fig2.n_lo = 999;
        fig2.n_hi = 49999;
        fig2.window = fig1.window;
        const std::size_t first = static_cast<std::size_t>((999 - fig1.n_lo) / 2);
        const std::size_t last = static_cast<std::size_t>((49999 - fig1.n_lo) / 2);
        fig2.counts.assign(fig1.counts.begin() + first, fig1.counts.begin() + last + 1);
        fig2.n_prime.assign(fig1.n_prime.begin() + first, fig1.n_prime.begin() + last + 1);

        const auto fit = fit_loglog(fig2, 999, 49999);
        check(fit.excluded.empty(), "log-log fit had zero-count points in range");
        check(fit.prime_mean_residual > 0.0, "prime-N points do not sit above the fit line");
        const auto svg2 = render_chart(fig2, ChartMode::loglog, &fit);
        check(svg2 == render_chart(fig2, ChartMode::loglog, &fit),
              "figure 2 SVG not deterministic");
        check(svg2.find("class=\"fit\"") != std::string::npos, "figure 2 lacks the fit line");
        check(svg2.find("class=\"p\"") != std::string::npos, "figure 2 lacks prime markers");
        write_file(svg2, "acceptance_out/figure2.svg");

        // synthetic power law recovered to 1e-10 relative error
        const double a = 2.5136, b = -3.75;
        std::vector<double> xs, ys;
        for (int i = 0; i < 500; ++i) {
            xs.push_back(7.0 + 0.005 * i);
            ys.push_back(a * xs.back() + b);
        }
        const auto synth = fit_points(xs, ys);
        check(std::abs(synth.slope - a) / a < 1e-10 && std::abs((synth.intercept - b) / b) < 1e-10,
              "synthetic power-law recovery beyond 1e-10");
        std::cout << "    fig2 fit: slope=" << fit.slope << " intercept=" << fit.intercept
                  << " prime_mean_residual=" << fit.prime_mean_residual << "\n";
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " failure(s)\n";
    return 1;
}
