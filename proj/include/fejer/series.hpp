#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fejer/special.hpp"
#include "fejer/summation.hpp"

namespace fejer {

/// The six sum families: the basic Fejer sums s_n, c_n and the four
/// modified sums with f(g(kx))/k terms.
enum class SumKind {
    SineBasic,   // s_n:     sin(kx)/k
    CosineBasic, // c_n:     cos(kx)/k
    CosCos,      // S^(1):   cos(cos kx)/k
    CosSin,      // S^(2):   cos(sin kx)/k
    SinCos,      // S^(3):   sin(cos kx)/k
    SinSin,      // S^(4):   sin(sin kx)/k
};

enum class SpecialPoint { Pi, TwoPiOver3, PiOver2 };
enum class Endpoint { Zero, Pi };

inline constexpr double PI = 3.14159265358979323846264338327950288;

/// s_n(x) = sum_{k=1..n} sin(kx)/k, compensated summation with per-term
/// phase reduction.
inline double sine_sum(std::int64_t n, double x) {
    if (n < 1)
        throw std::domain_error("sine_sum: n must be >= 1");
    CompensatedSum s;
    for (std::int64_t k = 1; k <= n; ++k)
        s.add(std::sin(reduce_phase(k, x)) / static_cast<double>(k));
    return s.value();
}

/// c_n(x) = sum_{k=1..n} cos(kx)/k.
inline double cosine_sum(std::int64_t n, double x) {
    if (n < 1)
        throw std::domain_error("cosine_sum: n must be >= 1");
    CompensatedSum s;
    for (std::int64_t k = 1; k <= n; ++k)
        s.add(std::cos(reduce_phase(k, x)) / static_cast<double>(k));
    return s.value();
}

/// One of the four modified sums S^(1..4). The basic kinds have their own
/// entry points and are rejected here.
inline double modified_sum(SumKind kind, std::int64_t n, double x) {
    if (n < 1)
        throw std::domain_error("modified_sum: n must be >= 1");
    CompensatedSum s;
    switch (kind) {
    case SumKind::CosCos:
        for (std::int64_t k = 1; k <= n; ++k)
            s.add(std::cos(std::cos(reduce_phase(k, x))) / static_cast<double>(k));
        break;
    case SumKind::CosSin:
        for (std::int64_t k = 1; k <= n; ++k)
            s.add(std::cos(std::sin(reduce_phase(k, x))) / static_cast<double>(k));
        break;
    case SumKind::SinCos:
        for (std::int64_t k = 1; k <= n; ++k)
            s.add(std::sin(std::cos(reduce_phase(k, x))) / static_cast<double>(k));
        break;
    case SumKind::SinSin:
        for (std::int64_t k = 1; k <= n; ++k)
            s.add(std::sin(std::sin(reduce_phase(k, x))) / static_cast<double>(k));
        break;
    default:
        throw std::invalid_argument(
            "modified_sum: use sine_sum/cosine_sum for the basic kinds");
    }
    return s.value();
}

/// Evaluate any of the six families at (n, x).
inline double eval_sum(SumKind kind, std::int64_t n, double x) {
    switch (kind) {
    case SumKind::SineBasic: return sine_sum(n, x);
    case SumKind::CosineBasic: return cosine_sum(n, x);
    default: return modified_sum(kind, n, x);
    }
}

/// Digamma-based closed forms for the (kind, point) pairs that admit one:
/// c_n(pi), c_n(2pi/3), S^(1)(pi/2), S^(2)(pi/2), S^(3)(pi), S^(3)(2pi/3).
/// Parity (mod 2) or residue (mod 3) is threaded through the formulas.
inline double special_value(SumKind kind, std::int64_t n, SpecialPoint point) {
    if (n < 1)
        throw std::domain_error("special_value: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double log2 = std::log(2.0);
    const double g = EULER_GAMMA;

    if (kind == SumKind::CosineBasic && point == SpecialPoint::Pi) {
        const double r = static_cast<double>(n % 2);
        return digamma(0.5 * nn + 1.0 - 0.5 * r) - digamma(nn + 1.0);
    }
    if (kind == SumKind::CosineBasic && point == SpecialPoint::TwoPiOver3) {
        const double r = static_cast<double>(n % 3);
        return 0.5 * (digamma(nn / 3.0 + 1.0 - r / 3.0) - digamma(nn + 1.0));
    }
    if (kind == SumKind::CosCos && point == SpecialPoint::PiOver2) {
        // odd-index harmonic part + cos(1) * half-index harmonic part
        const double c1 = std::cos(1.0);
        if (n % 2 == 0)
            return 0.5 * digamma(0.5 * nn + 0.5) + 0.5 * g + log2 +
                   0.5 * c1 * (digamma(0.5 * nn + 1.0) + g);
        return 0.5 * digamma(0.5 * nn + 1.0) + 0.5 * g + log2 +
               0.5 * c1 * (digamma(0.5 * nn + 0.5) + g);
    }
    if (kind == SumKind::CosSin && point == SpecialPoint::PiOver2) {
        const double c1 = std::cos(1.0);
        if (n % 2 == 0)
            return c1 * (0.5 * digamma(0.5 * nn + 0.5) + 0.5 * g + log2) +
                   0.5 * (digamma(0.5 * nn + 1.0) + g);
        return c1 * (0.5 * digamma(0.5 * nn + 1.0) + 0.5 * g + log2) +
               0.5 * (digamma(0.5 * nn + 0.5) + g);
    }
    if (kind == SumKind::SinCos && point == SpecialPoint::Pi) {
        const double r = static_cast<double>(n % 2);
        return std::sin(1.0) *
               (digamma(0.5 * nn + 1.0 - 0.5 * r) - digamma(nn + 1.0));
    }
    if (kind == SumKind::SinCos && point == SpecialPoint::TwoPiOver3) {
        const double r = static_cast<double>(n % 3);
        const double h_m = digamma(nn / 3.0 + 1.0 - r / 3.0) + g;
        const double h_n = digamma(nn + 1.0) + g;
        return (std::sin(0.5) + std::sin(1.0)) / 3.0 * h_m - std::sin(0.5) * h_n;
    }
    throw std::invalid_argument("special_value: unsupported (kind, point) pair");
}

/// Endpoint derivative of s_n or S^(4): n at x=0; at x=pi it is 0 for
/// even n and -1 for odd n (both families share the same values).
inline double endpoint_derivative(SumKind kind, std::int64_t n, Endpoint endpoint) {
    if (kind != SumKind::SineBasic && kind != SumKind::SinSin)
        throw std::invalid_argument("endpoint_derivative: unsupported kind");
    if (n < 1)
        throw std::domain_error("endpoint_derivative: n must be >= 1");
    if (endpoint == Endpoint::Zero)
        return static_cast<double>(n);
    return (n % 2 == 0) ? 0.0 : -1.0;
}

enum class Parity { Even, Odd };

/// Truncated Taylor expansion of S_n^(4) at an endpoint, in x (endpoint
/// Zero) or x_hat = pi - x (endpoint Pi). coefficients[j] multiplies the
/// (2j+1)-th power of the local variable.
struct EndpointExpansion {
    Endpoint endpoint;
    Parity parity;
    std::vector<double> coefficients; // odd powers 1, 3, 5

    double evaluate(double t) const {
        const double t2 = t * t;
        double p = t;
        double v = 0.0;
        for (double c : coefficients) {
            v += c * p;
            p *= t2;
        }
        return v;
    }
};

/// Expansion of S_n^(4) near x=0 or x=pi, up to three odd-power terms.
inline EndpointExpansion endpoint_expansion(std::int64_t n, Endpoint endpoint,
                                            int terms) {
    if (n < 1)
        throw std::domain_error("endpoint_expansion: n must be >= 1");
    if (terms < 1 || terms > 3)
        throw std::domain_error("endpoint_expansion: terms must be in {1,2,3}");
    const double nn = static_cast<double>(n);
    const Parity parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
    EndpointExpansion e{endpoint, parity, {}};
    if (endpoint == Endpoint::Zero) {
        // sum of (kx) - (kx)^3/3 + (kx)^5/10 over k, divided by k
        e.coefficients.push_back(nn);
        if (terms >= 2)
            e.coefficients.push_back(-nn * (nn + 1.0) * (2.0 * nn + 1.0) / 18.0);
        if (terms >= 3)
            e.coefficients.push_back(nn * (nn + 1.0) * (2.0 * nn + 1.0) *
                                     (3.0 * nn * nn + 3.0 * nn - 1.0) / 300.0);
    } else {
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0; // (-1)^n
        e.coefficients.push_back((n % 2 == 0) ? 0.0 : 1.0);
        if (terms >= 2)
            e.coefficients.push_back(sgn * nn * (nn + 1.0) / 6.0);
        if (terms >= 3)
            e.coefficients.push_back(-sgn * nn * (nn + 1.0) *
                                     (nn * nn + nn - 1.0) / 20.0);
    }
    return e;
}

} // namespace fejer
