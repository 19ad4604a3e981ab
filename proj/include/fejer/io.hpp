#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fejer/bessel.hpp"
#include "fejer/certify.hpp"
#include "fejer/series.hpp"
#include "fejer/spikes.hpp"

#include "json.hpp"

namespace fejer {

struct ScanResult {
    SumKind kind;
    std::int64_t n;
    std::vector<double> xs;
    std::vector<double> ys;
};

inline const char* sum_kind_name(SumKind kind) {
    switch (kind) {
    case SumKind::SineBasic: return "s";
    case SumKind::CosineBasic: return "c";
    case SumKind::CosCos: return "S1";
    case SumKind::CosSin: return "S2";
    case SumKind::SinCos: return "S3";
    case SumKind::SinSin: return "S4";
    }
    return "?";
}

/// Evaluate `kind` at `points` equally spaced abscissae over [from, to].
inline ScanResult make_scan(SumKind kind, std::int64_t n, double from, double to,
                            std::int64_t points) {
    if (points < 1)
        throw std::domain_error("make_scan: points must be >= 1");
    if (!(from < to))
        throw std::domain_error("make_scan: need from < to");
    ScanResult r{kind, n, {}, {}};
    r.xs.reserve(static_cast<std::size_t>(points));
    r.ys.reserve(static_cast<std::size_t>(points));
    for (std::int64_t i = 0; i < points; ++i) {
        const double x = (points == 1)
                             ? from
                             : from + (to - from) * static_cast<double>(i) /
                                          static_cast<double>(points - 1);
        r.xs.push_back(x);
        r.ys.push_back(eval_sum(kind, n, x));
    }
    return r;
}

enum class ExportFormat { Csv, Json };

/// CSV: header `x,value`, one %.17g,%.17g row per point, LF endings,
/// no trailing blank line. JSON: {"kind", "n", "points": [[x,y],...]}
/// with round-trip precision.
inline void export_scan(const ScanResult& result, ExportFormat format,
                        std::ostream& sink) {
    if (result.xs.size() != result.ys.size())
        throw std::invalid_argument("export_scan: malformed scan");
    if (format == ExportFormat::Csv) {
        sink << "x,value";
        char buf[80];
        for (std::size_t i = 0; i < result.xs.size(); ++i) {
            std::snprintf(buf, sizeof buf, "\n%.17g,%.17g", result.xs[i],
                          result.ys[i]);
            sink << buf;
        }
        sink << "\n";
    } else {
        nlohmann::json j;
        j["kind"] = sum_kind_name(result.kind);
        j["n"] = result.n;
        auto points = nlohmann::json::array();
        for (std::size_t i = 0; i < result.xs.size(); ++i)
            points.push_back({result.xs[i], result.ys[i]});
        j["points"] = std::move(points);
        sink << j.dump() << "\n";
    }
    if (!sink)
        throw std::runtime_error("export_scan: sink write failure");
}

namespace detail {

inline std::string sci10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10e", v);
    return buf;
}

inline std::string fix10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

} // namespace detail

/// The canonical per-stage certificate report: one record per stage with
/// m, B_m, x_m^-/pi, x_m^+/pi (10 significant digits) and the three flags.
inline nlohmann::json certificate_report(const PositivityCertificate& cert) {
    nlohmann::json j;
    auto stages = nlohmann::json::array();
    for (const auto& st : cert.stages) {
        stages.push_back({{"m", st.m},
                          {"B_m", detail::sci10(tail_bound(st.m).b)},
                          {"x_minus_over_pi", detail::sci10(st.roots.x_minus / PI)},
                          {"x_plus_over_pi", detail::fix10(st.roots.x_plus / PI)},
                          {"lemma1_ok", st.lemma1_ok},
                          {"lemma3_ok", st.lemma3_ok},
                          {"overlap_ok", st.overlap_ok}});
    }
    j["stages"] = std::move(stages);
    j["final_x_minus_over_pi"] = detail::sci10(cert.final_x_minus / PI);
    j["final_x_plus_over_pi"] = detail::fix10(cert.final_x_plus / PI);
    j["all_verified"] = cert.all_verified;
    if (cert.failed_stage != 0)
        j["failed_stage"] = cert.failed_stage;
    return j;
}

/// Human-readable reproduction of the root table: B_m and x_m^-/pi in
/// scientific notation (11 significant digits), x_m^+/pi to 10 decimals.
inline void print_root_table(std::int64_t m_max, std::ostream& sink) {
    sink << "  m   B_m                x_m^-/pi           x_m^+/pi\n";
    for (std::int64_t m = 1; m <= m_max; ++m) {
        const auto roots = solve_roots(m);
        char line[160];
        std::snprintf(line, sizeof line, "%3lld   %.10e   %.10e   %.10f\n",
                      static_cast<long long>(m), tail_bound(m).b,
                      roots.x_minus / PI, roots.x_plus / PI);
        sink << line;
    }
}

} // namespace fejer
