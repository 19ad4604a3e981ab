#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "fejer/bessel.hpp"
#include "fejer/certify.hpp"
#include "fejer/series.hpp"
#include "fejer/special.hpp"
#include "fejer/spikes.hpp"

namespace fejer::selftest {

struct Suite {
    std::string name;
    std::function<std::string()> run; // empty string = pass, else failure detail
};

namespace detail {

inline std::string fail(const std::string& msg) { return msg; }

/// Incremental grid scan: updates sums[i] += term(n, xs[i]) for n = 1..n_max
/// and calls check(n, i, sums[i]) after each update. Keeps the whole
/// n-by-grid sweep at O(n_max * points) instead of O(n_max^2 * points).
template <typename Term, typename Check>
std::string grid_sweep(const std::vector<double>& xs, std::int64_t n_max,
                       std::int64_t n_check_from, Term term, Check check) {
    std::vector<double> sums(xs.size(), 0.0);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sums[i] += term(n, xs[i]);
            if (n >= n_check_from) {
                if (auto msg = check(n, xs[i], sums[i]); !msg.empty())
                    return msg;
            }
        }
    }
    return {};
}

inline std::vector<double> open_grid(double a, double b, int points) {
    std::vector<double> xs;
    xs.reserve(points);
    for (int i = 1; i <= points; ++i)
        xs.push_back(a + (b - a) * i / (points + 1));
    return xs;
}

} // namespace detail

inline std::vector<Suite> suites() {
    using std::to_string;
    std::vector<Suite> v;

    v.push_back({"periodicity", [] {
        std::mt19937 rng(20260823);
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        for (int i = 0; i < 100; ++i) {
            const double x = dist(rng);
            for (std::int64_t n : {1, 2, 3, 5, 10, 25, 50}) {
                if (std::abs(sine_sum(n, x + 2.0 * PI) - sine_sum(n, x)) > 1e-12)
                    return "s_n period violation at n=" + to_string(n);
                if (std::abs(cosine_sum(n, x + 2.0 * PI) - cosine_sum(n, x)) > 1e-12)
                    return "c_n period violation at n=" + to_string(n);
            }
        }
        return std::string{};
    }});

    v.push_back({"cosine_symmetry", [] {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> dist(0.0, 2.0 * PI);
        for (int i = 0; i < 100; ++i) {
            const double x = dist(rng);
            for (std::int64_t n : {1, 2, 3, 5, 10, 25, 50})
                if (std::abs(cosine_sum(n, x) - cosine_sum(n, 2.0 * PI - x)) > 1e-12)
                    return "c_n symmetry violation at n=" + to_string(n);
        }
        return std::string{};
    }});

    v.push_back({"fejer_jackson_positivity", [] {
        auto xs = detail::open_grid(0.0, PI, 2000);
        return detail::grid_sweep(
            xs, 200, 1,
            [](std::int64_t n, double x) {
                return std::sin(reduce_phase(n, x)) / static_cast<double>(n);
            },
            [](std::int64_t n, double x, double s) {
                if (s <= 0.0)
                    return "s_n <= 0 at n=" + to_string(n) + ", x=" + to_string(x);
                return std::string{};
            });
    }});

    v.push_back({"cosine_lower_bound", [] {
        auto xs = detail::open_grid(0.0, PI, 2000);
        return detail::grid_sweep(
            xs, 200, 1,
            [](std::int64_t n, double x) {
                return std::cos(reduce_phase(n, x)) / static_cast<double>(n);
            },
            [](std::int64_t n, double x, double s) {
                if (s <= -1.0)
                    return "c_n <= -1 at n=" + to_string(n) + ", x=" + to_string(x);
                return std::string{};
            });
    }});

    v.push_back({"closed_form_consistency", [] {
        struct Combo {
            SumKind kind;
            SpecialPoint point;
            double x;
        };
        const Combo combos[] = {
            {SumKind::CosineBasic, SpecialPoint::Pi, PI},
            {SumKind::CosineBasic, SpecialPoint::TwoPiOver3, 2.0 * PI / 3.0},
            {SumKind::CosCos, SpecialPoint::PiOver2, PI / 2.0},
            {SumKind::CosSin, SpecialPoint::PiOver2, PI / 2.0},
            {SumKind::SinCos, SpecialPoint::Pi, PI},
            {SumKind::SinCos, SpecialPoint::TwoPiOver3, 2.0 * PI / 3.0},
        };
        for (std::int64_t n : {2, 3, 10, 11, 100, 101, 999, 1000}) {
            for (const auto& c : combos) {
                const double closed = special_value(c.kind, n, c.point);
                const double direct = eval_sum(c.kind, n, c.x);
                if (std::abs(closed - direct) >
                    1e-10 * std::max(1.0, std::abs(direct)))
                    return "closed form mismatch, kind=" +
                           std::string(c.kind == SumKind::CosineBasic ? "c" : "S") +
                           " n=" + to_string(n);
            }
        }
        return std::string{};
    }});

    v.push_back({"harmonic_asymptotics", [] {
        for (std::int64_t n = 10; n <= 200; ++n) {
            const auto h = harmonic(n);
            const double nn = static_cast<double>(n);
            if (std::abs(h.sigma - std::log(nn) - EULER_GAMMA - 0.5 / nn) >
                1.0 / (nn * nn))
                return "sigma_n asymptotic violated at n=" + to_string(n);
        }
        for (std::int64_t n : {1000, 10000, 100000, 1000000}) {
            const auto h = harmonic(n);
            const double nn = static_cast<double>(n);
            if (std::abs(h.sigma - std::log(nn) - EULER_GAMMA - 0.5 / nn) >
                1.0 / (nn * nn))
                return "sigma_n asymptotic violated at n=" + to_string(n);
            if (std::abs(h.sigma - h.psi_form) > 1e-12 * h.sigma)
                return "sigma_n vs digamma form mismatch at n=" + to_string(n);
        }
        return std::string{};
    }});

    v.push_back({"sine_minimum_middle_third", [] {
        auto xs = detail::open_grid(PI / 3.0, 2.0 * PI / 3.0, 4000);
        const double floor_val = std::sqrt(3.0) / 4.0 - 1e-9;
        return detail::grid_sweep(
            xs, 200, 2,
            [](std::int64_t n, double x) {
                return std::sin(reduce_phase(n, x)) / static_cast<double>(n);
            },
            [floor_val](std::int64_t n, double x, double s) {
                if (s < floor_val)
                    return "middle-third minimum violated at n=" + to_string(n) +
                           ", x=" + to_string(x);
                return std::string{};
            });
    }});

    v.push_back({"lowest_curve_s2", [] {
        for (auto range : {std::pair{1e-9, 0.207685 * PI},
                           std::pair{2.0 * PI / 3.0, PI}}) {
            auto xs = detail::open_grid(range.first, range.second, 2000);
            std::vector<double> s2(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
                s2[i] = sine_sum(2, xs[i]);
            auto msg = detail::grid_sweep(
                xs, 200, 3,
                [](std::int64_t n, double x) {
                    return std::sin(reduce_phase(n, x)) / static_cast<double>(n);
                },
                [&xs, &s2](std::int64_t n, double x, double s) {
                    // locate index by x: grid_sweep passes x values in order,
                    // so recompute the index from the spacing
                    const double step = xs[1] - xs[0];
                    const auto i = static_cast<std::size_t>(
                        std::llround((x - xs[0]) / step));
                    if (s2[i] > s + 1e-12)
                        return "s_2 not lowest at n=" + to_string(n) +
                               ", x=" + to_string(x);
                    return std::string{};
                });
            if (!msg.empty())
                return msg;
        }
        return std::string{};
    }});

    v.push_back({"bessel_upper_bound", [] {
        double prev = 1.0;
        for (std::int64_t nu = 1; nu <= 41; nu += 2) {
            const double val = bessel_unit(nu).value;
            const double cap = std::exp(-static_cast<double>(nu) * std::log(2.0) -
                                        std::lgamma(static_cast<double>(nu) + 1.0));
            if (!(val > 0.0 && val < cap))
                return "J_nu(1) bound violated at nu=" + to_string(nu);
            if (!(val < prev))
                return "J_nu(1) not decreasing at nu=" + to_string(nu);
            prev = val;
        }
        return std::string{};
    }});

    v.push_back({"tail_bound_identity", [] {
        const double total = 2.0 * std::sinh(0.5);
        CompensatedSum partial;
        double term = 1.0; // 2^(-2k)/(2k+1)! at k=0
        for (std::int64_t m = 0; m <= 20; ++m) {
            if (m > 0)
                term /= 4.0 * (2.0 * m) * (2.0 * m + 1.0);
            partial.add(term);
            const double b = tail_bound(m).b;
            if (std::abs(b + partial.value() - total) > 1e-15 * total)
                return "B_m identity violated at m=" + to_string(m);
            if (m < 20 && !(tail_bound(m + 1).b < b))
                return "B_m not decreasing at m=" + to_string(m);
        }
        return std::string{};
    }});

    v.push_back({"tail_bound_asymptotic", [] {
        for (std::int64_t m = 5; m <= 15; ++m) {
            const double b = tail_bound(m).b;
            const double md = static_cast<double>(m);
            const double ratio = std::exp(std::log(b) + std::lgamma(2.0 * md + 4.0) +
                                          (2.0 * md + 2.0) * std::log(2.0));
            if (!(ratio >= 1.0 && ratio <= 1.0 + 10.0 / (md * md)))
                return "B_m asymptotic ratio out of range at m=" + to_string(m);
        }
        return std::string{};
    }});

    v.push_back({"reconstruction_s4", [] {
        std::mt19937 rng(42);
        std::uniform_int_distribution<std::int64_t> ndist(1, 1000);
        std::uniform_real_distribution<double> xdist(1e-6, PI - 1e-6);
        const auto& J = fejer::detail::odd_bessel_table();
        for (int trial = 0; trial < 200; ++trial) {
            const std::int64_t n = ndist(rng);
            const double x = xdist(rng);
            const double s4 = modified_sum(SumKind::SinSin, n, x);
            double f = 0.0;
            for (std::int64_t m = 0; m <= 6; ++m) {
                f += J[static_cast<std::size_t>(m)] *
                     sine_sum(n, (2.0 * m + 1.0) * x);
                if (std::abs(s4 - 2.0 * f) >= 2.0 * tail_bound(m).b + 1e-13)
                    return "S4 reconstruction bound violated at n=" + to_string(n) +
                           ", m=" + to_string(m);
            }
        }
        return std::string{};
    }});

    v.push_back({"reconstruction_s3", [] {
        std::mt19937 rng(43);
        std::uniform_int_distribution<std::int64_t> ndist(1, 1000);
        std::uniform_real_distribution<double> xdist(1e-6, PI - 1e-6);
        const auto& J = fejer::detail::odd_bessel_table();
        double j_tail = 0.0;
        for (std::size_t k = 11; k < 51; ++k)
            j_tail += J[k];
        for (int trial = 0; trial < 50; ++trial) {
            const std::int64_t n = ndist(rng);
            const double x = xdist(rng);
            const double s3 = modified_sum(SumKind::SinCos, n, x);
            double head = 0.0;
            double sign = 1.0;
            for (std::size_t r = 0; r <= 10; ++r) {
                head += sign * J[r] * cosine_sum(n, (2.0 * r + 1.0) * x);
                sign = -sign;
            }
            const double sigma = harmonic(n).sigma;
            if (std::abs(s3 - 2.0 * head) >= 2.0 * sigma * j_tail + 1e-13)
                return "S3 reconstruction bound violated at n=" + to_string(n);
        }
        return std::string{};
    }});

    v.push_back({"root_ordering_and_residuals", [] {
        double prev_minus = PI, prev_hat = PI;
        for (std::int64_t m = 1; m <= 20; ++m) {
            const auto r = solve_roots(m);
            if (!(r.x_minus < prev_minus && r.x_hat_plus < prev_hat))
                return "root ordering violated at m=" + to_string(m);
            if (r.residual_minus > 1e-12 || r.residual_plus > 1e-12)
                return "root residual too large at m=" + to_string(m);
            prev_minus = r.x_minus;
            prev_hat = r.x_hat_plus;
        }
        return std::string{};
    }});

    v.push_back({"root_asymptotics", [] {
        const double j1 = bessel_unit(1).value;
        for (std::int64_t m = 8; m <= 20; ++m) {
            const auto r = solve_roots(m);
            const double b = tail_bound(m).b;
            const double near0 = r.x_minus * 2.0 * j1 / b;
            const double xh = r.x_hat_plus;
            const double nearpi = xh * xh * xh * j1 / (2.0 * b);
            if (!(near0 >= 0.999 && near0 <= 1.001))
                return "x_m^- asymptotic off at m=" + to_string(m);
            if (!(nearpi >= 0.99 && nearpi <= 1.01))
                return "x_m^+ asymptotic off at m=" + to_string(m);
        }
        return std::string{};
    }});

    v.push_back({"lemma_sweeps", [] {
        for (std::int64_t m = 2; m <= 40; ++m)
            if (!verify_lemma1(m))
                return "lemma 1 failed at m=" + to_string(m);
        auto prev = solve_roots(1);
        for (std::int64_t m = 2; m <= 20; ++m) {
            auto cur = solve_roots(m);
            if (!verify_lemma3(m, cur, prev))
                return "lemma 3 failed at m=" + to_string(m);
            prev = cur;
        }
        return std::string{};
    }});

    v.push_back({"lambda_crossing_value", [] {
        const double lambda = lambda_crossing();
        if (std::abs(lambda - 0.207685) > 5e-7)
            return "lambda = " + to_string(lambda) + " not 0.207685 to 6 d.p.";
        if (std::abs(sine_sum(2, PI * lambda) - sine_sum(9, PI * lambda)) > 1e-10)
            return std::string("s_2 != s_9 at pi*lambda");
        const double eps = 1e-4;
        const double below = sine_sum(2, PI * (lambda - eps)) -
                             sine_sum(9, PI * (lambda - eps));
        const double above = sine_sum(2, PI * (lambda + eps)) -
                             sine_sum(9, PI * (lambda + eps));
        if (!(below * above < 0.0))
            return std::string("no strict sign change around pi*lambda");
        return std::string{};
    }});

    v.push_back({"lemma2_margin_and_grid", [] {
        const double margin = verify_lemma2_bound(); // throws on a grid violation
        if (std::abs(margin - 0.151421) > 5e-7)
            return "lemma 2 margin = " + to_string(margin);
        return std::string{};
    }});

    v.push_back({"certified_interval_positivity", [] {
        const auto r3 = solve_roots(3);
        auto xs = detail::open_grid(r3.x_minus, r3.x_plus, 2000);
        return detail::grid_sweep(
            xs, 50, 2,
            [](std::int64_t n, double x) {
                return std::sin(std::sin(reduce_phase(n, x))) /
                       static_cast<double>(n);
            },
            [](std::int64_t n, double x, double s) {
                if (s <= 0.0)
                    return "S4 <= 0 inside the m=3 interval at n=" + to_string(n) +
                           ", x=" + to_string(x);
                return std::string{};
            });
    }});

    v.push_back({"spike_symmetry_about_half_pi", [] {
        for (std::int64_t n : {5, 20, 100, 200}) {
            for (int i = 1; i <= 200; ++i) {
                const double x = PI / 2.0 * i / 201.0;
                for (SumKind kind : {SumKind::CosCos, SumKind::CosSin})
                    if (std::abs(modified_sum(kind, n, x) -
                                 modified_sum(kind, n, PI - x)) > 1e-12)
                        return "S^(1)/S^(2) asymmetric at n=" + to_string(n);
            }
        }
        return std::string{};
    }});

    v.push_back({"spike_lower_bounds", [] {
        std::vector<double> xs = detail::open_grid(0.0, PI, 1000);
        std::vector<double> s1(xs.size(), 0.0), s2v(xs.size(), 0.0);
        double sigma = 0.0;
        const double c1 = std::cos(1.0);
        for (std::int64_t n = 1; n <= 200; ++n) {
            sigma += 1.0 / static_cast<double>(n);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double ph = reduce_phase(n, xs[i]);
                s1[i] += std::cos(std::cos(ph)) / static_cast<double>(n);
                s2v[i] += std::cos(std::sin(ph)) / static_cast<double>(n);
                if (s1[i] < sigma * c1 - 1e-12)
                    return "S^(1) lower bound violated at n=" + to_string(n);
                if (!(s2v[i] > sigma * c1))
                    return "S^(2) lower bound violated at n=" + to_string(n);
            }
        }
        return std::string{};
    }});

    v.push_back({"jump_behaviour", [] {
        for (std::int64_t n : {100, 1000, 10000, 100000})
            if (!(measure_jump(n).jump > 0.0))
                return "jump not positive at n=" + to_string(n);
        const double pred = jump_prediction();
        if (std::abs(pred - 0.1449) > 5e-5)
            return "jump prediction = " + to_string(pred);
        return std::string{};
    }});

    v.push_back({"s3_spike_grows_negative", [] {
        double prev = 0.0;
        for (std::int64_t n = 1000; n <= 1024000; n *= 2) {
            const double val = modified_sum(SumKind::SinCos, n, 2.0 * PI / 3.0);
            if (!(val < prev))
                return "S^(3)(2pi/3) not decreasing at n=" + to_string(n);
            prev = val;
        }
        return std::string{};
    }});

    return v;
}

/// Run every suite, print one line each, return overall success.
inline bool run_all(std::ostream& out) {
    bool ok = true;
    for (const auto& suite : suites()) {
        std::string msg;
        try {
            msg = suite.run();
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (msg.empty()) {
            out << "ok   " << suite.name << "\n";
        } else {
            out << "FAIL " << suite.name << ": " << msg << "\n";
            ok = false;
        }
    }
    return ok;
}

} // namespace fejer::selftest
