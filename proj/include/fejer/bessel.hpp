#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fejer/series.hpp"
#include "fejer/summation.hpp"

namespace fejer {

/// Unit-argument Bessel coefficient J_nu(1) for odd nu.
struct BesselCoefficient {
    std::int64_t order;
    double value;
};

/// J_nu(1) by the ascending power series
/// sum_k (-1)^k (1/2)^(2k+nu) / (k! Gamma(k+nu+1)).
inline BesselCoefficient bessel_unit(std::int64_t order) {
    if (order < 1 || order % 2 == 0)
        throw std::domain_error("bessel_unit: order must be odd and positive");
    const double nu = static_cast<double>(order);
    // leading term (1/2)^nu / Gamma(1+nu), via log-gamma to avoid overflow
    double term = std::exp(-nu * std::log(2.0) - std::lgamma(nu + 1.0));
    CompensatedSum s;
    s.add(term);
    for (int k = 1; k < 200; ++k) {
        term *= -0.25 / (static_cast<double>(k) * (static_cast<double>(k) + nu));
        s.add(term);
        if (std::abs(term) < 1e-18 * std::abs(s.value()))
            break;
    }
    return {order, s.value()};
}

namespace detail {

/// Immutable table of J_{2r+1}(1), r = 0..count-1, built on first use.
inline const std::vector<double>& odd_bessel_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t;
        t.reserve(160);
        for (std::int64_t r = 0; r < 160; ++r)
            t.push_back(bessel_unit(2 * r + 1).value);
        return t;
    }();
    return table;
}

} // namespace detail

/// Tail bound for the Bessel expansion of S^(4):
/// B_m = 2 sinh(1/2) - sum_{k=0..m} 2^(-2k)/(2k+1)!, evaluated as the
/// equivalent tail series sum_{k>m} 2^(-2k)/(2k+1)! so that small values
/// keep full relative precision. H_m is the Lemma-1 auxiliary bound.
struct TailBound {
    std::int64_t m;
    double b;
    double h; // defined for m >= 2, NaN otherwise
};

inline TailBound tail_bound(std::int64_t m) {
    if (m < 0)
        throw std::domain_error("tail_bound: m must be >= 0");
    // t_k = 2^(-2k)/(2k+1)! starting at k = m+1
    const double k0 = static_cast<double>(m + 1);
    double term = std::exp(-2.0 * k0 * std::log(2.0) - std::lgamma(2.0 * k0 + 2.0));
    CompensatedSum s;
    s.add(term);
    for (std::int64_t k = m + 2; k < m + 60; ++k) {
        const double kk = static_cast<double>(k);
        term /= 4.0 * (2.0 * kk) * (2.0 * kk + 1.0);
        s.add(term);
        if (term < 1e-20 * s.value())
            break;
    }
    double h = std::numeric_limits<double>::quiet_NaN();
    if (m >= 2) {
        const double md = static_cast<double>(m);
        h = std::exp(-2.0 * md * std::log(2.0) - std::lgamma(2.0 * md + 1.0)) *
            16.0 * md * md / (16.0 * md * md - 1.0);
    }
    return {m, s.value(), h};
}

/// Head F_m(n;x) of the Bessel expansion of S_n^(4) together with a bound
/// on twice the tail modulus: |S_n^(4)(x) - 2 F_m(n;x)| < 2 B_m.
struct ExpansionSplit {
    std::int64_t m;
    std::int64_t n;
    double x;
    double f_value;       // F_m(n;x)
    double tail_abs_bound; // xi * sum_{k>m} J_{2k+1}(1), xi = 2
};

inline ExpansionSplit partial_expansion_sin(std::int64_t m, std::int64_t n, double x) {
    if (m < 0)
        throw std::domain_error("partial_expansion_sin: m must be >= 0");
    if (n < 1)
        throw std::domain_error("partial_expansion_sin: n must be >= 1");
    const auto& J = detail::odd_bessel_table();
    CompensatedSum f;
    for (std::int64_t k = 0; k <= m; ++k)
        f.add(J[static_cast<std::size_t>(k)] * sine_sum(n, (2.0 * k + 1.0) * x));
    // 40 extra terms: J_{2k+1}(1) decays superexponentially, the remainder
    // is far below 1e-30 by then
    CompensatedSum tail;
    for (std::int64_t k = m + 1; k <= m + 40 && k < static_cast<std::int64_t>(J.size()); ++k)
        tail.add(J[static_cast<std::size_t>(k)]);
    return {m, n, x, f.value(), 2.0 * tail.value()};
}

enum class SpikeLocation { TwoPiOver3, TwoPiOver5 };

/// Asymptotic spike slope of S_n^(3) (coefficient of sigma_n) at the
/// locations where some c_n((2r+1)x) argument aligns with 2*pi:
/// -2(J_3 - J_9 + J_15 - ...) at 2pi/3, +2(J_5 - J_15 + J_25 - ...) at 2pi/5.
inline double expansion_cos_spike_coefficients(SpikeLocation location) {
    const auto& J = detail::odd_bessel_table();
    CompensatedSum s;
    if (location == SpikeLocation::TwoPiOver3) {
        double sign = -1.0;
        for (std::int64_t r = 1; r < static_cast<std::int64_t>(J.size()); r += 3) {
            const double t = sign * J[static_cast<std::size_t>(r)];
            s.add(2.0 * t);
            sign = -sign;
            if (std::abs(t) < 1e-18)
                break;
        }
    } else if (location == SpikeLocation::TwoPiOver5) {
        double sign = 1.0;
        for (std::int64_t r = 2; r < static_cast<std::int64_t>(J.size()); r += 5) {
            const double t = sign * J[static_cast<std::size_t>(r)];
            s.add(2.0 * t);
            sign = -sign;
            if (std::abs(t) < 1e-18)
                break;
        }
    } else {
        throw std::invalid_argument("expansion_cos_spike_coefficients: unsupported location");
    }
    return s.value();
}

} // namespace fejer
