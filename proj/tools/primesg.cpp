// primesg — command line frontend for the prime-semigroup invariant sweeps
// and the windowed three-prime representation checks.
//
// Exit codes: 0 = all checks passed / output written, 1 = a verification
// check produced findings (witnesses printed), 2 = usage or I/O error.

#include <cstdint>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "primesg/invariants.hpp"
#include "primesg/report.hpp"
#include "primesg/version.hpp"

namespace {

using namespace primesg;

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::domain_error("range '" + text + "' must look like a:b");
    Range r;
    try {
        r.lo = std::stoll(text.substr(0, colon));
        r.hi = std::stoll(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::domain_error("range '" + text + "' must look like a:b");
    }
    if (r.lo > r.hi) throw std::domain_error("range '" + text + "' is empty");
    return r;
}

// N-ranges cover odd integers; even endpoints are moved inward.
Range odd_range(Range r) {
    if (r.lo % 2 == 0) ++r.lo;
    if (r.hi % 2 == 0) --r.hi;
    if (r.lo > r.hi) throw std::domain_error("range contains no odd integers");
    return r;
}

ProgressFn stderr_progress(bool enabled) {
    if (!enabled) return {};
    auto mutex = std::make_shared<std::mutex>();
    auto last = std::make_shared<std::int64_t>(0);
    return [mutex, last](std::int64_t done, std::int64_t total) {
        std::lock_guard<std::mutex> guard(*mutex);
        if (done - *last >= std::max<std::int64_t>(total / 50, 1) || done == total) {
            *last = done;
            std::cerr << "progress: " << done << "/" << total << "\n";
        }
    };
}

PrimeTable table_for_limit(std::int64_t needed, std::int64_t override_limit) {
    const std::int64_t limit =
        override_limit > 0 ? override_limit : std::max<std::int64_t>(needed, 128);
    return sieve(limit);
}

void write_or_print(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    write_file(content, out_path);
    std::cerr << "wrote " << out_path << "\n";
}

int cmd_invariants(const Range& nr, const std::string& format, const std::string& out,
                   std::int64_t sieve_override, unsigned jobs) {
    const auto table = table_for_limit(sieve_limit_for_n(nr.hi), sieve_override);
    const auto records = record_range(nr.lo, nr.hi, table, jobs);
    write_or_print(format == "json" ? render_json(records) : render_csv(records), out);
    return 0;
}

int cmd_assert(const Range& nr, std::int64_t sieve_override, unsigned jobs, bool progress) {
    const auto table = table_for_limit(sieve_limit_for_n(nr.hi), sieve_override);
    const auto report = run_assertions(nr.lo, nr.hi, table, jobs, stderr_progress(progress));
    std::ostringstream out;
    out << "assertions over n in [" << report.n_lo << ", " << report.n_hi << "]\n";
    for (const auto& res : report.results) {
        out << (res.pass ? "[ ok ] " : "[FAIL] ") << res.id << "  " << res.description;
        if (!res.equality_ns.empty()) {
            out << "  (equality at n =";
            for (const auto n : res.equality_ns) out << " " << n;
            out << ")";
        }
        out << "\n";
        std::size_t shown = 0;
        for (const auto& w : res.failures) {
            if (++shown > 10) {
                out << "        ... " << res.failures.size() - 10 << " more\n";
                break;
            }
            out << "        n=" << w.n << ": " << w.detail << "\n";
        }
    }
    out << (report.all_pass() ? "all assertions hold\n" : "assertion failures found\n");
    std::cout << out.str();
    return report.all_pass() ? 0 : 1;
}

int cmd_extremes(const Range& nr, std::int64_t sieve_override, unsigned jobs) {
    const auto table = table_for_limit(sieve_limit_for_n(nr.hi), sieve_override);
    const auto t = ratio_extremes(nr.lo, nr.hi, table, jobs);
    std::ostringstream out;
    out << "ratio extremes over n in [" << t.n_lo << ", " << t.n_hi << "]\n";
    auto row = [&](const char* name, const RatioExtreme& ex) {
        out << name << "  min " << ex.min.str() << " at n=" << ex.argmin << "  max "
            << ex.max.str() << " at n=" << ex.argmax << "\n";
    };
    row("u/p", t.u_p);
    row("f/p", t.f_p);
    row("g/p", t.g_p);
    row("s/p", t.s_p);
    row("e/n", t.e_n);
    std::cout << out.str();
    return 0;
}

int cmd_goldbach_exceptions(std::int64_t K, const WindowSpec& w, std::int64_t limit,
                            std::int64_t sieve_override, unsigned jobs) {
    const auto table = table_for_limit(limit, sieve_override);
    const auto exceptions = h_exceptions(K, w, limit, table, jobs);
    if (exceptions.empty()) {
        std::cerr << "no exceptions for K=" << K << " t=" << w.str() << " up to " << limit
                  << "\n";
        return 0;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < exceptions.size(); ++i) out << (i ? " " : "") << exceptions[i];
    out << "\n";
    std::cout << out.str();
    return 1;
}

int cmd_goldbach_reps(std::int64_t N, const WindowSpec& w, bool sqrt_window, bool ordered,
                      std::int64_t sieve_override) {
    const auto table = table_for_limit(N, sieve_override);
    const auto reps = sqrt_window ? sqrt_window_check(N, table) : window_reps(N, w, table);
    std::ostringstream out;
    for (const auto& rep : reps) out << rep.q1 << " " << rep.q2 << " " << rep.q3 << "\n";
    out << "r(" << N << ") = " << reps.size();
    if (ordered && !sqrt_window) {
        const PrimeReflection refl(table);
        out << " (ordered: " << count_window_reps_ordered(N, w, table, refl) << ")";
    }
    out << "\n";
    std::cout << out.str();
    return 0;
}

int cmd_goldbach_series(const Range& Nr, const WindowSpec& w, bool ordered,
                        const std::string& format, const std::string& out_path,
                        std::int64_t sieve_override, unsigned jobs) {
    const auto table = table_for_limit(Nr.hi, sieve_override);
    const auto series = rep_count_series(Nr.lo, Nr.hi, w, table, jobs, ordered);
    write_or_print(format == "json" ? render_json(series) : render_csv(series), out_path);
    return 0;
}

int cmd_oppermann(const Range& Nr, std::int64_t sieve_override, unsigned jobs) {
    const auto table = table_for_limit(Nr.hi, sieve_override);
    const auto exceptions = sqrt_window_exceptions(Nr.lo, Nr.hi, table, jobs);
    if (exceptions.empty()) {
        std::cerr << "every odd N in [" << Nr.lo << ", " << Nr.hi
                  << "] has a sqrt-window representation\n";
        return 0;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < exceptions.size(); ++i) out << (i ? " " : "") << exceptions[i];
    out << "\n";
    std::cout << out.str();
    return 1;
}

int cmd_chart(const Range& Nr, const std::string& mode_name, const WindowSpec& w, bool no_fit,
              const std::string& fit_range, const std::string& out_path,
              std::int64_t sieve_override, unsigned jobs) {
    const auto table = table_for_limit(Nr.hi, sieve_override);
    const auto series = rep_count_series(Nr.lo, Nr.hi, w, table, jobs);
    const ChartMode mode = mode_name == "loglog" ? ChartMode::loglog : ChartMode::linear;

    std::optional<RegressionFit> fit;
    const bool want_fit = !no_fit && (mode == ChartMode::loglog || !fit_range.empty());
    if (want_fit) {
        const Range fr = fit_range.empty() ? Nr : odd_range(parse_range(fit_range));
        fit = fit_loglog(series, fr.lo, fr.hi);
        std::cerr << "fit: slope=" << fit->slope << " intercept=" << fit->intercept
                  << " points=" << fit->n_points
                  << " prime_mean_residual=" << fit->prime_mean_residual << "\n";
        if (!fit->excluded.empty())
            std::cerr << "excluded " << fit->excluded.size() << " N with r=0 from the fit\n";
    }
    emit_chart(series, mode, fit ? &*fit : nullptr, out_path);
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}

int cmd_corollaries(const Range& nr, std::optional<std::int64_t> K,
                    const std::vector<std::int64_t>& spots, std::int64_t sieve_override,
                    unsigned jobs) {
    std::int64_t needed = sieve_limit_for_n(nr.hi);
    for (const auto n : spots) needed = std::max(needed, sieve_limit_for_n(n));
    const auto table = table_for_limit(needed, sieve_override);
    const auto c = corollary_thresholds(nr.lo, nr.hi, table, K, jobs);

    std::ostringstream out;
    out << "corollary checks over n in [" << c.n_lo << ", " << c.n_hi << "]\n";
    out << "u < 6p: " << (c.six_p_failures.empty() ? "ok" : "FAIL") << "\n";
    out << "8u >= 23p for n > 13: " << (c.ratio_floor_failures.empty() ? "ok" : "FAIL") << "\n";
    out << "16598u > 49791p where p >= 670294: " << (c.large_p_failures.empty() ? "ok" : "FAIL")
        << " (" << c.large_p_checked << " n in range)\n";
    out << "163/47 > 17/5: " << (c.ratio_order_ok ? "ok" : "FAIL") << "\n";
    if (c.K) out << "K=" << *c.K << ": n log n > (5/17)K from n=" << c.threshold_n << " on\n";

    bool spot_failures = false;
    for (const auto n : spots) {
        const auto s = spot_check_large_p(n, table);
        out << "spot n=" << s.n << ": p=" << s.p << " u=" << s.u
            << " u/p=" << static_cast<double>(s.u) / static_cast<double>(s.p)
            << (s.premise ? "" : " [premise p >= 670294 not met]")
            << (s.holds ? " holds" : " VIOLATED") << "\n";
        if (s.premise && !s.holds) spot_failures = true;
    }
    std::cout << out.str();
    return (c.ok() && !spot_failures) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of the numerical semigroup generated by all primes >= p(n), "
                 "and windowed three-prime representation checks"};
    app.set_version_flag("--version", std::string(primesg::kVersion));
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    unsigned jobs = 0;
    std::int64_t sieve_override = 0;
    app.add_option("--jobs,-j", jobs, "worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--sieve-limit", sieve_override, "override the derived sieve limit")
        ->envname("PRIMESG_SIEVE_LIMIT");

    // invariants
    auto* inv = app.add_subcommand("invariants", "per-n invariant records (n,p,f,g,e,u,s)");
    std::string inv_range = "1:100";
    std::int64_t inv_n = 0;
    std::string inv_format = "csv", inv_out;
    inv->add_option("--n-range", inv_range, "n range a:b")->capture_default_str();
    inv->add_option("--n", inv_n, "single n (overrides --n-range)");
    inv->add_option("--format", inv_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    inv->add_option("--out", inv_out, "output path (default: stdout)");

    // assert
    auto* asrt = app.add_subcommand("assert", "run the per-n assertion program over a range");
    std::string asrt_range;
    bool asrt_extended = false;
    asrt->add_option("--n-range", asrt_range, "n range a:b (default 1:1000)");
    asrt->add_flag("--extended", asrt_extended, "sweep the full range 1:7495 with progress");

    // extremes
    auto* extr = app.add_subcommand("extremes", "min/max of u/p, f/p, g/p, s/p, e/n over a range");
    std::string extr_range = "1:1000";
    extr->add_option("--n-range", extr_range, "n range a:b")->capture_default_str();

    // goldbach
    auto* gb = app.add_subcommand("goldbach", "windowed three-prime representation checks");
    gb->require_subcommand(1);
    auto* gb_exc = gb->add_subcommand("exceptions", "odd N without a window representation");
    std::int64_t gb_K = 7, gb_limit = 9999;
    std::string gb_t = "6";
    bool gb_open = false;
    gb_exc->add_option("--K", gb_K, "scan start (odd)")->capture_default_str();
    gb_exc->add_option("--t", gb_t, "window parameter t > 3, integer or a/b")
        ->capture_default_str();
    gb_exc->add_option("--limit", gb_limit, "scan end (odd)")->capture_default_str();
    gb_exc->add_flag("--open", gb_open, "use the strict window < N/t");

    auto* gb_reps = gb->add_subcommand("reps", "list representations of one N");
    std::int64_t gb_N = 7;
    std::string gb_reps_t = "6";
    bool gb_sqrt = false, gb_reps_ordered = false, gb_reps_open = false;
    gb_reps->add_option("--N", gb_N, "odd N >= 7")->required();
    gb_reps->add_option("--t", gb_reps_t, "window parameter")->capture_default_str();
    gb_reps->add_flag("--sqrt-window", gb_sqrt, "use [N/3 - sqrt(N), N/3 + sqrt(N)] instead of t");
    gb_reps->add_flag("--ordered", gb_reps_ordered, "also print the ordered tuple count");
    gb_reps->add_flag("--open", gb_reps_open, "use the strict window < N/t");

    auto* gb_series = gb->add_subcommand("series", "r(N) for every odd N of a range");
    std::string gb_series_range = "7:9999", gb_series_t = "6", gb_series_format = "csv",
                gb_series_out;
    bool gb_series_ordered = false, gb_series_open = false;
    gb_series->add_option("--N-range", gb_series_range, "N range a:b")->capture_default_str();
    gb_series->add_option("--t", gb_series_t, "window parameter")->capture_default_str();
    gb_series->add_flag("--ordered", gb_series_ordered, "count ordered tuples instead");
    gb_series->add_flag("--open", gb_series_open, "use the strict window < N/t");
    gb_series->add_option("--format", gb_series_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    gb_series->add_option("--out", gb_series_out, "output path (default: stdout)");

    // oppermann
    auto* opp =
        app.add_subcommand("oppermann", "sqrt-window scan: three primes within sqrt(N) of N/3");
    std::string opp_range = "7:99999";
    opp->add_option("--N-range", opp_range, "N range a:b")->capture_default_str();

    // chart
    auto* chart = app.add_subcommand("chart", "emit an SVG scatter of r(N)");
    std::string chart_range = "7:99999", chart_mode = "linear", chart_t = "6", chart_fit_range,
                chart_out;
    bool chart_no_fit = false;
    chart->add_option("--N-range", chart_range, "N range a:b")->capture_default_str();
    chart->add_option("--mode", chart_mode, "linear or loglog")
        ->check(CLI::IsMember({"linear", "loglog"}))
        ->capture_default_str();
    chart->add_option("--t", chart_t, "window parameter")->capture_default_str();
    chart->add_option("--fit-range", chart_fit_range, "fit line over this sub-range a:b");
    chart->add_flag("--no-fit", chart_no_fit, "suppress the regression line");
    chart->add_option("--out", chart_out, "output .svg path")->required();

    // corollaries
    auto* cor = app.add_subcommand("corollaries", "threshold checks on u/p");
    std::string cor_range = "1:1000";
    std::int64_t cor_K = 0;
    std::vector<std::int64_t> cor_spots;
    cor->add_option("--n-range", cor_range, "n range a:b")->capture_default_str();
    cor->add_option("--K", cor_K, "report the n threshold for n log n > (5/17)K");
    cor->add_option("--spot", cor_spots, "spot-check u/p > 3 - 3/16598 at these n (fast path)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*inv) {
            const Range r = inv_n > 0 ? Range{inv_n, inv_n} : parse_range(inv_range);
            return cmd_invariants(r, inv_format, inv_out, sieve_override, jobs);
        }
        if (*asrt) {
            Range r{1, 1000};
            if (!asrt_range.empty()) r = parse_range(asrt_range);
            else if (asrt_extended) r = Range{1, 7495};
            return cmd_assert(r, sieve_override, jobs, asrt_extended);
        }
        if (*extr) return cmd_extremes(parse_range(extr_range), sieve_override, jobs);
        if (*gb_exc)
            return cmd_goldbach_exceptions(gb_K, WindowSpec::parse(gb_t, !gb_open), gb_limit,
                                           sieve_override, jobs);
        if (*gb_reps)
            return cmd_goldbach_reps(gb_N, WindowSpec::parse(gb_reps_t, !gb_reps_open), gb_sqrt,
                                     gb_reps_ordered, sieve_override);
        if (*gb_series)
            return cmd_goldbach_series(odd_range(parse_range(gb_series_range)),
                                       WindowSpec::parse(gb_series_t, !gb_series_open),
                                       gb_series_ordered, gb_series_format, gb_series_out,
                                       sieve_override, jobs);
        if (*opp) return cmd_oppermann(odd_range(parse_range(opp_range)), sieve_override, jobs);
        if (*chart)
            return cmd_chart(odd_range(parse_range(chart_range)), chart_mode,
                             WindowSpec::parse(chart_t), chart_no_fit, chart_fit_range, chart_out,
                             sieve_override, jobs);
        if (*cor)
            return cmd_corollaries(parse_range(cor_range),
                                   cor_K > 0 ? std::optional<std::int64_t>(cor_K) : std::nullopt,
                                   cor_spots, sieve_override, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
