#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fejer/bessel.hpp"
#include "fejer/series.hpp"
#include "fejer/special.hpp"

namespace fejer {

/// Working supremum of |s_n| used throughout the certification argument.
/// The true Gibbs extreme is ~1.852 but the argument is built on 2.
inline constexpr double XI = 2.0;

namespace detail {

inline double j1_unit() {
    static const double v = bessel_unit(1).value;
    return v;
}

inline double j3_unit() {
    static const double v = bessel_unit(3).value;
    return v;
}

/// F_0(2;x) = J_1(1) sin x (1 + cos x), the lowest-curve envelope used
/// for root solving.
inline double lowest_envelope(double x) {
    return j1_unit() * std::sin(x) * (1.0 + std::cos(x));
}

/// Mirrored form near pi: with xh = pi - x, sin(xh)(1 - cos(xh)).
/// Written as 2 sin(xh) sin^2(xh/2); the naive 1 - cos(xh) loses all
/// precision (and underflows) for the tiny xh that occur at large m.
inline double lowest_envelope_mirror(double xh) {
    const double s = std::sin(0.5 * xh);
    return j1_unit() * std::sin(xh) * 2.0 * s * s;
}

/// Bisection on a guaranteed bracket, converging to ~1e-15 relative.
/// The roots range over ~30 orders of magnitude across m, so absolute
/// tolerances are useless; relative width drives the stop.
template <typename F>
double bisect(F f, double lo, double hi, double target) {
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo * fhi > 0.0)
        throw std::runtime_error("bisect: no sign change in bracket");
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fm = f(mid) - target;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-15 * lo)
            break;
    }
    return 0.5 * (lo + hi);
}

} // namespace detail

/// The roots x_m^- in (0, pi/3) and x_m^+ in (2pi/3, pi) of
/// F_0(2;x) = B_m, with the residuals of the envelope at each root.
struct RootPair {
    std::int64_t m;
    double x_minus;
    double x_plus;     // pi - x_hat_plus; saturates to double(pi) near m ~ 13
    double x_hat_plus; // pi - x_plus, kept exactly: it spans ~50 orders of magnitude
    double residual_minus;
    double residual_plus;
};

/// Solve J_1(1) sin x (1 + cos x) = B_m near both endpoints. Brackets
/// come from the asymptotic estimates x^- ~ B_m/(2 J_1(1)) and
/// pi - x^+ ~ (2 B_m/J_1(1))^(1/3) with safety factor 10 each side.
inline RootPair solve_roots(std::int64_t m) {
    if (m < 1)
        throw std::domain_error("solve_roots: m must be >= 1");
    const double b = tail_bound(m).b;
    const double j1 = detail::j1_unit();

    const double x_est = b / (2.0 * j1);
    const double x_minus = detail::bisect(detail::lowest_envelope, x_est / 10.0,
                                          std::min(10.0 * x_est, PI / 3.0), b);

    const double xh_est = std::cbrt(2.0 * b / j1);
    const double xh = detail::bisect(detail::lowest_envelope_mirror, xh_est / 10.0,
                                     std::min(10.0 * xh_est, PI / 3.0), b);
    return {m, x_minus, PI - xh, xh,
            std::abs(detail::lowest_envelope(x_minus) - b),
            std::abs(detail::lowest_envelope_mirror(xh) - b)};
}

/// Lemma-1 check: B_{m-1} < H_m/(2m+1) and J_1(1) sin(pi/(2m+1)) > 2 B_{m-1}.
inline bool verify_lemma1(std::int64_t m) {
    if (m < 2)
        throw std::domain_error("verify_lemma1: m must be >= 2");
    const double b_prev = tail_bound(m - 1).b;
    const double h = tail_bound(m).h;
    const double md = static_cast<double>(m);
    const bool first = b_prev < h / (2.0 * md + 1.0);
    const bool second = detail::j1_unit() * std::sin(PI / (2.0 * md + 1.0)) > 2.0 * b_prev;
    return first && second;
}

/// Lemma-3 check on consecutive root pairs:
/// x_m^- < x_{m-1}^- < pi/(2m+1) and 2m pi/(2m+1) < x_{m-1}^+ < x_m^+.
inline bool verify_lemma3(std::int64_t m, const RootPair& current,
                          const RootPair& previous) {
    if (m < 2)
        throw std::domain_error("verify_lemma3: m must be >= 2");
    if (current.m != m || previous.m != m - 1)
        throw std::invalid_argument("verify_lemma3: mismatched stage indices");
    const double md = static_cast<double>(m);
    const double cap = PI / (2.0 * md + 1.0);
    // right-hand chain compared in x_hat = pi - x to keep precision near pi
    return current.x_minus < previous.x_minus && previous.x_minus < cap &&
           previous.x_hat_plus < cap && current.x_hat_plus < previous.x_hat_plus;
}

/// Lemma-2 margin sqrt(3)/4 J_1(1) - xi J_3(1) (~0.151421), plus a grid
/// spot-check that F_1(n;x) > 0 on (0, pi) for n = 2..100. A grid
/// violation would numerically falsify the lemma and raises an error.
inline double verify_lemma2_bound() {
    const double j1 = detail::j1_unit();
    const double j3 = detail::j3_unit();
    const double margin = std::sqrt(3.0) / 4.0 * j1 - XI * j3;

    constexpr int points = 2000;
    constexpr std::int64_t n_max = 100;
    std::vector<double> s1(points, 0.0), s3(points, 0.0);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (int i = 0; i < points; ++i) {
            const double x = PI * (i + 1) / (points + 1);
            s1[i] += std::sin(reduce_phase(n, x)) / static_cast<double>(n);
            s3[i] += std::sin(reduce_phase(n, 3.0 * x)) / static_cast<double>(n);
            if (n >= 2 && j1 * s1[i] + j3 * s3[i] <= 0.0)
                throw std::runtime_error(
                    "verify_lemma2_bound: F_1 <= 0 at n=" + std::to_string(n) +
                    ", x=" + std::to_string(x));
        }
    }
    return margin;
}

/// First intersection (from x = 0) of s_2 and s_9, as a fraction of pi.
/// Sign-scan with step pi*1e-4 then bisection; lambda ~= 0.207685.
inline double lambda_crossing() {
    auto diff = [](double x) { return sine_sum(2, x) - sine_sum(9, x); };
    const double step = PI * 1e-4;
    double lo = step;
    double hi = 0.0;
    for (double x = 2.0 * step; x < PI / 3.0; x += step) {
        if (diff(lo) * diff(x) <= 0.0) {
            hi = x;
            break;
        }
        lo = x;
    }
    if (hi == 0.0)
        throw std::runtime_error("lambda_crossing: no bracket found in (0, pi/3)");
    const double root = detail::bisect(diff, lo, hi, 0.0);
    return root / PI;
}

struct CertificateStage {
    std::int64_t m;
    RootPair roots;
    bool lemma1_ok;
    bool lemma3_ok;
    bool overlap_ok;
};

/// Ordered certified stages; the positivity interval of S_n^(4) widens
/// monotonically towards (0, pi) as m grows.
struct PositivityCertificate {
    std::vector<CertificateStage> stages;
    double final_x_minus;
    double final_x_plus;
    bool all_verified;
    std::int64_t failed_stage; // 0 when all stages hold
};

/// Chain the interval argument: stage 1 rests on the lowest-curve
/// reduction over L_lambda = (0, pi*lambda) U (2pi/3, pi), stages m >= 2
/// on Lemma 1, Lemma 3 and overlap with the previous interval.
inline PositivityCertificate build_certificate(std::int64_t m_max) {
    if (m_max < 1 || m_max > 64)
        throw std::domain_error(
            "build_certificate: m_max must be in [1, 64]; B_m underflows beyond");
    PositivityCertificate cert{{}, 0.0, 0.0, true, 0};
    const double lambda = lambda_crossing();

    RootPair prev{0, 0.0, 0.0, 0.0, 0.0};
    for (std::int64_t m = 1; m <= m_max; ++m) {
        CertificateStage stage{m, solve_roots(m), true, true, true};
        if (m == 1) {
            // roots must land inside L_lambda and the Lemma-2 margin of
            // F_1 on the middle interval must be positive
            const bool in_l_lambda = stage.roots.x_minus < PI * lambda &&
                                     stage.roots.x_plus > 2.0 * PI / 3.0;
            const bool margin_pos =
                std::sqrt(3.0) / 4.0 * detail::j1_unit() - XI * detail::j3_unit() > 0.0;
            stage.lemma1_ok = in_l_lambda && margin_pos;
        } else {
            stage.lemma1_ok = verify_lemma1(m);
            stage.lemma3_ok = verify_lemma3(m, stage.roots, prev);
            stage.overlap_ok = stage.roots.x_minus < prev.x_minus &&
                               stage.roots.x_hat_plus < prev.x_hat_plus;
        }
        if (!(stage.lemma1_ok && stage.lemma3_ok && stage.overlap_ok) &&
            cert.failed_stage == 0) {
            cert.all_verified = false;
            cert.failed_stage = m;
        }
        prev = stage.roots;
        cert.stages.push_back(stage);
    }
    cert.final_x_minus = cert.stages.back().roots.x_minus;
    cert.final_x_plus = cert.stages.back().roots.x_plus;
    return cert;
}

} // namespace fejer
