#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "fejer/summation.hpp"

namespace fejer {

inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008;

/// Digamma psi(x) for x > 0. Recurrence-lifts the argument to x >= 10,
/// then applies the asymptotic series log x - 1/(2x) - sum B_2k/(2k x^2k).
inline double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // signed coefficients B_2k/(2k), k = 1..7
    static constexpr double c[7] = {
        1.0 / 12.0,  -1.0 / 120.0,  1.0 / 252.0,   -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    double tail = 0.0;
    double p = inv2;
    for (int k = 0; k < 7; ++k) {
        tail += c[k] * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 * inv - tail;
}

/// Harmonic number sigma_n = H_n together with its digamma form
/// psi(n+1) + gamma; the two agree to ~1e-15 relative.
struct HarmonicValue {
    std::int64_t n;
    double sigma;
    double psi_form;
};

inline HarmonicValue harmonic(std::int64_t n) {
    if (n < 1)
        throw std::domain_error("harmonic: n must be >= 1");
    CompensatedSum s;
    for (std::int64_t k = 1; k <= n; ++k)
        s.add(1.0 / static_cast<double>(k));
    return {n, s.value(), digamma(static_cast<double>(n) + 1.0) + EULER_GAMMA};
}

/// Sine integral Si(x) = int_0^x sin(t)/t dt by the alternating Taylor
/// series; intended for moderate x (we only need Si(pi)).
inline double sine_integral(double x) {
    // sine-series term t_k = (-1)^k x^(2k+1)/(2k+1)!, contribution t_k/(2k+1)
    double t = x;
    CompensatedSum s;
    s.add(x);
    const double x2 = x * x;
    for (int k = 1; k < 60; ++k) {
        t *= -x2 / static_cast<double>(2 * k * (2 * k + 1));
        s.add(t / static_cast<double>(2 * k + 1));
        if (std::abs(t) < 1e-20)
            break;
    }
    return s.value();
}

/// Limiting Gibbs overshoot of the Fejer sine sums: Si(pi) ~= 1.8519370.
inline double gibbs_constant() { return sine_integral(3.14159265358979323846); }

} // namespace fejer
