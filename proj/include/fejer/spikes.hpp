#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fejer/bessel.hpp"
#include "fejer/series.hpp"
#include "fejer/special.hpp"

namespace fejer {

/// Closed-form/asymptotic spike prediction against a direct measurement.
struct SpikeEstimate {
    SumKind kind;
    double location;
    std::int64_t n;
    double predicted;          // digamma closed form at finite n
    double measured;           // direct summation
    double growth_coefficient; // asymptotic slope versus log n
};

/// Spike of S^(1)/S^(2) at pi/2 or of S^(3) at 2pi/3, with the asymptotic
/// growth coefficients (1+cos 1)/2 and (sin 1 - 2 sin(1/2))/3.
inline SpikeEstimate spike_height(SumKind kind, std::int64_t n) {
    if (n < 1)
        throw std::domain_error("spike_height: n must be >= 1");
    switch (kind) {
    case SumKind::CosCos:
    case SumKind::CosSin:
        return {kind, PI / 2.0, n,
                special_value(kind, n, SpecialPoint::PiOver2),
                modified_sum(kind, n, PI / 2.0),
                0.5 * (1.0 + std::cos(1.0))};
    case SumKind::SinCos:
        return {kind, 2.0 * PI / 3.0, n,
                special_value(kind, n, SpecialPoint::TwoPiOver3),
                modified_sum(kind, n, 2.0 * PI / 3.0),
                (std::sin(1.0) - 2.0 * std::sin(0.5)) / 3.0};
    default:
        throw std::invalid_argument(
            "spike_height: S^(4) has a finite jump, use measure_jump");
    }
}

/// For even n <= 16 the maximum of S_n^(1) sits at the local maxima
/// pi/2 +- pi/(2n+2) rather than at pi/2 itself.
inline std::pair<double, double> spike_location_small_even(std::int64_t n) {
    if (n < 2 || n > 16 || n % 2 != 0)
        throw std::domain_error(
            "spike_location_small_even: n must be even with 2 <= n <= 16");
    const double off = PI / static_cast<double>(2 * n + 2);
    return {PI / 2.0 - off, PI / 2.0 + off};
}

/// Predicted limiting jump of S_n^(4) near 2pi/3:
/// 2 {J_3(1) + J_9(1) + J_15(1) + ...} * 2 Si(pi) ~= 0.1449.
inline double jump_prediction() {
    const auto& J = detail::odd_bessel_table();
    CompensatedSum s;
    for (std::int64_t r = 1; r < static_cast<std::int64_t>(J.size()); r += 3) {
        s.add(J[static_cast<std::size_t>(r)]);
        if (J[static_cast<std::size_t>(r)] < 1e-18)
            break;
    }
    return 2.0 * s.value() * 2.0 * gibbs_constant();
}

/// Measured Gibbs transition of S_n^(4) across 2pi/3: minimum over the
/// left half-window vs maximum over the right half-window.
struct JumpMeasurement {
    std::int64_t n;
    double window_half_width;
    double left_level;
    double right_level;
    double jump;
};

inline JumpMeasurement measure_jump(std::int64_t n) {
    if (n < 100)
        throw std::domain_error("measure_jump: n must be >= 100");
    const double center = 2.0 * PI / 3.0;
    const double w = 10.0 * PI / static_cast<double>(n);
    constexpr int points = 400;
    double left = std::numeric_limits<double>::infinity();
    double right = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        const double x = center - w + 2.0 * w * i / (points - 1);
        const double v = modified_sum(SumKind::SinSin, n, x);
        if (x < center)
            left = std::min(left, v);
        else
            right = std::max(right, v);
    }
    return {n, w, left, right, right - left};
}

/// Least-squares slope of measured spike values against log n
/// (intercept free; the asymptotics carry unspecified O(1) offsets).
inline double growth_fit(SumKind kind, double location,
                         const std::vector<std::int64_t>& n_schedule) {
    if (n_schedule.size() < 4)
        throw std::domain_error("growth_fit: schedule needs at least 4 points");
    for (std::size_t i = 1; i < n_schedule.size(); ++i)
        if (n_schedule[i] <= n_schedule[i - 1])
            throw std::domain_error("growth_fit: schedule must be increasing");
    if (static_cast<double>(n_schedule.back()) <
        100.0 * static_cast<double>(n_schedule.front()))
        throw std::domain_error("growth_fit: schedule must span >= 2 decades");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto count = static_cast<double>(n_schedule.size());
    for (std::int64_t n : n_schedule) {
        const double lx = std::log(static_cast<double>(n));
        const double y = eval_sum(kind, n, location);
        sx += lx;
        sy += y;
        sxx += lx * lx;
        sxy += lx * y;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

/// Global maximum of s_n over (0, pi): coarse scan of the first arch
/// followed by golden-section refinement. Approaches Si(pi) as n grows.
inline double max_sine_sum(std::int64_t n) {
    const double hi = std::min(PI, 3.0 * PI / static_cast<double>(n));
    double best_x = hi / 2.0;
    double best = -std::numeric_limits<double>::infinity();
    constexpr int coarse = 400;
    for (int i = 1; i <= coarse; ++i) {
        const double x = hi * i / (coarse + 1);
        const double v = sine_sum(n, x);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    double a = best_x - hi / (coarse + 1);
    double b = best_x + hi / (coarse + 1);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = sine_sum(n, c), fd = sine_sum(n, d);
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = sine_sum(n, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = sine_sum(n, d);
        }
    }
    return std::max(fc, fd);
}

} // namespace fejer
