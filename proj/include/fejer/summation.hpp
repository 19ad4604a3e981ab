#pragma once

#include <cmath>
#include <cstdint>

namespace fejer {

/// Neumaier-compensated accumulator. Keeps the rounding error of a long
/// sum at O(eps) independent of the number of terms.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

namespace detail {

// 2*pi split into three parts so that q*TWO_PI_A is exact for the
// quotients that arise here (the high parts carry ~27 significant bits).
inline constexpr double TWO_PI_A = 6.283185303211212;              // 2*pi rounded to 27 bits
inline constexpr double TWO_PI_B = 3.968374295837407e-09;          // next 27 bits of the remainder
inline constexpr double TWO_PI_C = 2.2884754904439327e-17;         // tail
inline constexpr double TWO_PI = 6.283185307179586476925286766559;

} // namespace detail

/// k*x reduced modulo 2*pi. A naive k*x loses ~6 digits of phase by
/// k = 1e6; the reduction below recovers it with an exact product split
/// (fma) and a three-part representation of 2*pi.
inline double reduce_phase(std::int64_t k, double x) noexcept {
    const double kd = static_cast<double>(k);
    const double p_hi = kd * x;
    const double p_lo = std::fma(kd, x, -p_hi);
    const double q = std::nearbyint(p_hi / detail::TWO_PI);
    double r = std::fma(-q, detail::TWO_PI_A, p_hi);
    r = std::fma(-q, detail::TWO_PI_B, r);
    r = std::fma(-q, detail::TWO_PI_C, r);
    return r + p_lo;
}

} // namespace fejer
