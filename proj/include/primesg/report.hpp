// report.hpp
// Persistence and figures: CSV with a JSON mirror, the log-log OLS fit for
// representation counts, and deterministic self-contained SVG scatter
// charts with prime-N highlighting.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "primesg/goldbach.hpp"
#include "primesg/invariants.hpp"
#include "primesg/version.hpp"

namespace primesg {

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::int64_t n_points = 0;
    double residual_mean = 0.0;
    double residual_stddev = 0.0;
    double prime_mean_residual = 0.0;  // mean residual over the highlighted subset
    std::vector<std::int64_t> excluded; // N skipped because r(N) = 0
};

// Ordinary least squares y = slope * x + intercept, with residual summary
// and the mean residual over the highlighted subset.
inline RegressionFit fit_points(std::span<const double> xs, std::span<const double> ys,
                                std::span<const std::uint8_t> highlight = {}) {
    const std::size_t n = xs.size();
    if (n != ys.size() || (!highlight.empty() && highlight.size() != n))
        throw std::invalid_argument("fit_points: length mismatch");
    if (n < 2) throw std::runtime_error("fit_points: need at least 2 points");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::runtime_error("fit_points: degenerate x values");

    RegressionFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.n_points = static_cast<std::int64_t>(n);

    double rsum = 0.0, rsq = 0.0, psum = 0.0;
    std::size_t pcount = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double res = ys[i] - (fit.intercept + fit.slope * xs[i]);
        rsum += res;
        rsq += res * res;
        if (!highlight.empty() && highlight[i]) {
            psum += res;
            ++pcount;
        }
    }
    fit.residual_mean = rsum / static_cast<double>(n);
    const double var = rsq / static_cast<double>(n) - fit.residual_mean * fit.residual_mean;
    fit.residual_stddev = var > 0.0 ? std::sqrt(var) : 0.0;
    fit.prime_mean_residual = pcount > 0 ? psum / static_cast<double>(pcount) : 0.0;
    return fit;
}

// OLS in (ln N, ln r(N)) space over odd N in [n_lo, n_hi]; N with r = 0 are
// excluded and reported in the fit.
inline RegressionFit fit_loglog(const RepSeries& series, std::int64_t n_lo, std::int64_t n_hi) {
    if (n_lo < series.n_lo || n_hi > series.n_hi || n_lo > n_hi)
        throw std::domain_error("fit_loglog: fit range must lie inside the series range");
    std::vector<double> xs, ys;
    std::vector<std::uint8_t> hl;
    std::vector<std::int64_t> excluded;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const std::int64_t N = series.n_at(i);
        if (N < n_lo || N > n_hi) continue;
        if (series.counts[i] < 1) {
            excluded.push_back(N);
            continue;
        }
        xs.push_back(std::log(static_cast<double>(N)));
        ys.push_back(std::log(static_cast<double>(series.counts[i])));
        hl.push_back(series.n_prime[i]);
    }
    RegressionFit fit = fit_points(xs, ys, hl);
    fit.excluded = std::move(excluded);
    return fit;
}

// ------------------------------------------------------------------
// CSV
// ------------------------------------------------------------------

inline std::string render_csv(std::span<const InvariantRecord> records) {
    std::string out = "n,p,f,g,e,u,s\n";
    for (const auto& r : records) {
        out += std::to_string(r.n) + ',' + std::to_string(r.p) + ',' + std::to_string(r.f) + ',' +
               std::to_string(r.g) + ',' + std::to_string(r.e) + ',' + std::to_string(r.u) + ',' +
               std::to_string(r.s) + '\n';
    }
    return out;
}

inline std::string render_csv(const RepSeries& series) {
    std::string out = "N,r,is_prime\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += std::to_string(series.n_at(i)) + ',' + std::to_string(series.counts[i]) + ',' +
               (series.n_prime[i] ? "1\n" : "0\n");
    }
    return out;
}

inline void write_file(const std::string& content, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

inline void emit_csv(std::span<const InvariantRecord> records, const std::string& path) {
    write_file(render_csv(records), path);
}

inline void emit_csv(const RepSeries& series, const std::string& path) {
    write_file(render_csv(series), path);
}

namespace csv_detail {

inline std::vector<std::int64_t> split_int_row(const std::string& line, std::size_t expect) {
    std::vector<std::int64_t> vals;
    std::size_t start = 0;
    while (start <= line.size()) {
        const std::size_t comma = line.find(',', start);
        const std::string cell =
            line.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        vals.push_back(std::stoll(cell));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vals.size() != expect)
        throw std::runtime_error("csv row has " + std::to_string(vals.size()) + " fields, want " +
                                 std::to_string(expect));
    return vals;
}

} // namespace csv_detail

inline std::vector<InvariantRecord> parse_records_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "n,p,f,g,e,u,s")
        throw std::runtime_error("invariant csv: bad header");
    std::vector<InvariantRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto v = csv_detail::split_int_row(line, 7);
        InvariantRecord r;
        r.n = v[0]; r.p = v[1]; r.f = v[2]; r.g = v[3]; r.e = v[4]; r.u = v[5]; r.s = v[6];
        r.m = r.p;
        r.u_p = Ratio(r.u, r.p);
        r.f_p = Ratio(r.f, r.p);
        r.g_p = Ratio(r.g, r.p);
        r.s_p = Ratio(r.s, r.p);
        r.e_n = Ratio(r.e, r.n);
        out.push_back(r);
    }
    return out;
}

inline RepSeries parse_series_csv(std::string_view text, const WindowSpec& window = WindowSpec()) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "N,r,is_prime")
        throw std::runtime_error("series csv: bad header");
    RepSeries series;
    series.window = window;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto v = csv_detail::split_int_row(line, 3);
        if (series.counts.empty()) series.n_lo = v[0];
        series.n_hi = v[0];
        series.counts.push_back(v[1]);
        series.n_prime.push_back(static_cast<std::uint8_t>(v[2] != 0));
    }
    return series;
}

// ------------------------------------------------------------------
// JSON mirror: one object with "meta" and "rows"
// ------------------------------------------------------------------

inline std::string render_json(std::span<const InvariantRecord> records) {
    nlohmann::ordered_json j;
    j["meta"] = {{"kind", "invariants"},
                 {"n_lo", records.empty() ? 0 : records.front().n},
                 {"n_hi", records.empty() ? 0 : records.back().n},
                 {"version", std::string(kVersion)}};
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : records)
        rows.push_back({{"n", r.n},
                        {"p", r.p},
                        {"f", r.f},
                        {"g", r.g},
                        {"e", r.e},
                        {"u", r.u},
                        {"s", r.s}});
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

inline std::string render_json(const RepSeries& series) {
    nlohmann::ordered_json j;
    j["meta"] = {{"kind", "rep_series"},
                 {"n_lo", series.n_lo},
                 {"n_hi", series.n_hi},
                 {"window_t", series.window.str()},
                 {"window_closed", series.window.closed},
                 {"version", std::string(kVersion)}};
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < series.size(); ++i)
        rows.push_back({{"N", series.n_at(i)},
                        {"r", series.counts[i]},
                        {"is_prime", series.n_prime[i] != 0}});
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

inline void emit_json(std::span<const InvariantRecord> records, const std::string& path) {
    write_file(render_json(records), path);
}

inline void emit_json(const RepSeries& series, const std::string& path) {
    write_file(render_json(series), path);
}

// ------------------------------------------------------------------
// SVG charts
// ------------------------------------------------------------------

enum class ChartMode { linear, loglog };

namespace svg_detail {

inline std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

// Tick step of the form {1,2,5} * 10^k giving 4..9 ticks over span.
inline double nice_step(double span) {
    if (span <= 0.0) return 1.0;
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= mult * mag) return mult * mag;
    }
    return 10.0 * mag;
}

inline std::string fmt_tick(double v) {
    if (std::abs(v - std::round(v)) < 1e-9 && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(std::llround(v)));
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace svg_detail

// Scatter of (N, r(N)), prime N in red, optional regression line in green.
// Output is byte-stable for fixed inputs and library version.
inline std::string render_chart(const RepSeries& series, ChartMode mode,
                                const RegressionFit* fit = nullptr) {
    using svg_detail::fmt;
    if (series.size() == 0) throw std::domain_error("render_chart: empty series");

    constexpr double kW = 1000.0, kH = 640.0;
    constexpr double kL = 78.0, kR = 24.0, kT = 24.0, kB = 58.0;
    const double plot_w = kW - kL - kR, plot_h = kH - kT - kB;

    // data domain
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool first = true;
    std::vector<double> px, py;
    std::vector<std::uint8_t> pp;
    px.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto N = static_cast<double>(series.n_at(i));
        const auto r = static_cast<double>(series.counts[i]);
        double x, y;
        if (mode == ChartMode::loglog) {
            if (series.counts[i] < 1) continue; // log undefined; skipped like the fit does
            x = std::log(N);
            y = std::log(r);
        } else {
            x = N;
            y = r;
        }
        if (first) {
            x_min = x_max = x;
            y_min = y_max = y;
            first = false;
        }
        x_min = std::min(x_min, x); x_max = std::max(x_max, x);
        y_min = std::min(y_min, y); y_max = std::max(y_max, y);
        px.push_back(x);
        py.push_back(y);
        pp.push_back(series.n_prime[i]);
    }
    if (px.empty()) throw std::domain_error("render_chart: no drawable points");
    if (mode == ChartMode::linear) y_min = std::min(y_min, 0.0);
    if (x_max == x_min) { x_min -= 1.0; x_max += 1.0; }
    if (y_max == y_min) { y_min -= 1.0; y_max += 1.0; }

    const auto sx = [&](double x) { return kL + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto sy = [&](double y) { return kT + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

    std::string out;
    out.reserve(px.size() * 48 + 4096);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kW) + "\" height=\"" +
           fmt(kH) + "\" viewBox=\"0 0 " + fmt(kW) + " " + fmt(kH) + "\">\n";
    out += "<!-- primesg " + std::string(kVersion) + " -->\n";
    out += "<style>.c{fill:#5b6d84;}.p{fill:#d62728;}text{font:13px sans-serif;fill:#222;}"
           ".axis{stroke:#222;stroke-width:1;}.grid{stroke:#ddd;stroke-width:0.5;}"
           ".fit{stroke:#2ca02c;stroke-width:1.8;fill:none;}</style>\n";
    out += "<rect width=\"" + fmt(kW) + "\" height=\"" + fmt(kH) + "\" fill=\"#ffffff\"/>\n";

    // ticks and grid
    const std::string y_axis_x = fmt(kL), x_axis_y = fmt(kT + plot_h);
    if (mode == ChartMode::loglog) {
        for (int k = 0; k <= 18; ++k) { // decade ticks
            const double v = std::log(std::pow(10.0, k));
            if (v < x_min - 1e-9 || v > x_max + 1e-9) continue;
            out += "<line class=\"grid\" x1=\"" + fmt(sx(v)) + "\" y1=\"" + fmt(kT) + "\" x2=\"" +
                   fmt(sx(v)) + "\" y2=\"" + fmt(kT + plot_h) + "\"/>\n";
            out += "<text x=\"" + fmt(sx(v)) + "\" y=\"" + fmt(kT + plot_h + 20.0) +
                   "\" text-anchor=\"middle\">1e" + std::to_string(k) + "</text>\n";
        }
        for (int k = 0; k <= 18; ++k) {
            const double v = std::log(std::pow(10.0, k));
            if (v < y_min - 1e-9 || v > y_max + 1e-9) continue;
            out += "<line class=\"grid\" x1=\"" + fmt(kL) + "\" y1=\"" + fmt(sy(v)) + "\" x2=\"" +
                   fmt(kL + plot_w) + "\" y2=\"" + fmt(sy(v)) + "\"/>\n";
            out += "<text x=\"" + fmt(kL - 8.0) + "\" y=\"" + fmt(sy(v) + 4.0) +
                   "\" text-anchor=\"end\">1e" + std::to_string(k) + "</text>\n";
        }
    } else {
        const double xstep = svg_detail::nice_step(x_max - x_min);
        for (double v = std::ceil(x_min / xstep) * xstep; v <= x_max + 1e-9; v += xstep) {
            out += "<line class=\"grid\" x1=\"" + fmt(sx(v)) + "\" y1=\"" + fmt(kT) + "\" x2=\"" +
                   fmt(sx(v)) + "\" y2=\"" + fmt(kT + plot_h) + "\"/>\n";
            out += "<text x=\"" + fmt(sx(v)) + "\" y=\"" + fmt(kT + plot_h + 20.0) +
                   "\" text-anchor=\"middle\">" + svg_detail::fmt_tick(v) + "</text>\n";
        }
        const double ystep = svg_detail::nice_step(y_max - y_min);
        for (double v = std::ceil(y_min / ystep) * ystep; v <= y_max + 1e-9; v += ystep) {
            out += "<line class=\"grid\" x1=\"" + fmt(kL) + "\" y1=\"" + fmt(sy(v)) + "\" x2=\"" +
                   fmt(kL + plot_w) + "\" y2=\"" + fmt(sy(v)) + "\"/>\n";
            out += "<text x=\"" + fmt(kL - 8.0) + "\" y=\"" + fmt(sy(v) + 4.0) +
                   "\" text-anchor=\"end\">" + svg_detail::fmt_tick(v) + "</text>\n";
        }
    }

    // axes
    out += "<line class=\"axis\" x1=\"" + y_axis_x + "\" y1=\"" + fmt(kT) + "\" x2=\"" + y_axis_x +
           "\" y2=\"" + x_axis_y + "\"/>\n";
    out += "<line class=\"axis\" x1=\"" + y_axis_x + "\" y1=\"" + x_axis_y + "\" x2=\"" +
           fmt(kL + plot_w) + "\" y2=\"" + x_axis_y + "\"/>\n";
    out += "<text x=\"" + fmt(kL + plot_w / 2.0) + "\" y=\"" + fmt(kH - 12.0) +
           "\" text-anchor=\"middle\">N</text>\n";
    out += "<text x=\"18\" y=\"" + fmt(kT + plot_h / 2.0) + "\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 18 " + fmt(kT + plot_h / 2.0) + ")\">r(N)</text>\n";

    // points: composites first so the prime overlay stays visible
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < px.size(); ++i) {
            if (static_cast<int>(pp[i]) != pass) continue;
            out += "<circle class=\"";
            out += pp[i] ? 'p' : 'c';
            out += "\" cx=\"" + fmt(sx(px[i])) + "\" cy=\"" + fmt(sy(py[i])) + "\" r=\"1.6\"/>\n";
        }
    }

    // regression line y = intercept + slope * ln-or-linear x
    if (fit != nullptr) {
        if (mode == ChartMode::loglog) {
            const double y1 = fit->intercept + fit->slope * x_min;
            const double y2 = fit->intercept + fit->slope * x_max;
            out += "<line class=\"fit\" x1=\"" + fmt(sx(x_min)) + "\" y1=\"" + fmt(sy(y1)) +
                   "\" x2=\"" + fmt(sx(x_max)) + "\" y2=\"" + fmt(sy(y2)) + "\"/>\n";
        } else {
            // fitted power law r = exp(b) N^a sampled across the domain
            out += "<polyline class=\"fit\" points=\"";
            constexpr int kSamples = 128;
            for (int i = 0; i <= kSamples; ++i) {
                const double x = x_min + (x_max - x_min) * i / kSamples;
                if (x <= 0.0) continue;
                double y = std::exp(fit->intercept + fit->slope * std::log(x));
                y = std::min(std::max(y, y_min), y_max);
                out += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
            }
            out += "\"/>\n";
        }
    }

    out += "</svg>\n";
    return out;
}

inline void emit_chart(const RepSeries& series, ChartMode mode, const RegressionFit* fit,
                       const std::string& path) {
    write_file(render_chart(series, mode, fit), path);
}

} // namespace primesg
