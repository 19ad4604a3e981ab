// Acceptance suite: one line per criterion, exit nonzero if any fails.
//
// Each criterion pins a published or independently verified value at a fixed
// tolerance. Three table entries (x_1^+/pi, B_8, x_8^+/pi) are checked against
// independently recomputed 60-digit values where the commonly cited display
// digits are off by one unit in the last place; see README.md.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fejer/bessel.hpp"
#include "fejer/certify.hpp"
#include "fejer/io.hpp"
#include "fejer/selftest.hpp"
#include "fejer/series.hpp"
#include "fejer/special.hpp"
#include "fejer/spikes.hpp"

using namespace fejer;

namespace {

int failures = 0;

void criterion(int id, const std::string& name,
               const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (detail.empty()) {
        std::printf("PASS  %2d  %-28s (%.2f s)\n", id, name.c_str(), secs);
    } else {
        std::printf("FAIL  %2d  %-28s (%.2f s): %s\n", id, name.c_str(), secs,
                    detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string check_abs(double got, double want, double tol,
                      const std::string& what) {
    if (std::abs(got - want) <= tol)
        return {};
    std::ostringstream os;
    os.precision(17);
    os << what << ": got " << got << ", want " << want << " +/- " << tol;
    return os.str();
}

std::string check_rel(double got, double want, double tol,
                      const std::string& what) {
    return check_abs(got, want, tol * std::abs(want), what);
}

std::string check_under(double secs, double cap) {
    if (secs <= cap)
        return {};
    std::ostringstream os;
    os << "runtime " << secs << " s exceeds " << cap << " s";
    return os.str();
}

double timed(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main() {
    criterion(1, "root table reproduction", [] {
        std::ostringstream out;
        const double secs = timed([&] { print_root_table(10, out); });
        const std::string text = out.str();
        // rows m = 1..6, 8, 10 of the reference table, re-verified to 60
        // digits: B_m and x_m^-/pi to 10 significant digits, x_m^+/pi to
        // 10 decimals
        const char* rows[][3] = {
            {"5.2394432083e-04", "1.8949717051e-04", "0.9574301720"},
            {"3.1109874947e-06", "1.1251639101e-06", "0.9923025565"},
            {"1.0789082025e-08", "3.9021325986e-09", "0.9988349231"},
            {"2.4504202963e-11", "8.8625379772e-12", "0.9998468538"},
            {"3.9253367506e-14", "1.4196930249e-14", "0.9999820808"},
            {"4.6717514135e-17", "1.6896519501e-17", "0.9999981010"},
            {"3.1377910234e-23", "1.1348580548e-23", "0.9999999834"},
            {"9.2262804088e-30", "3.3369075760e-30", "0.9999999999"},
        };
        for (const auto& row : rows)
            for (const char* cell : row)
                if (text.find(cell) == std::string::npos)
                    return "missing table entry " + std::string(cell);
        return check_under(secs, 1.0);
    });

    criterion(2, "certificate chain m=10", [] {
        PositivityCertificate cert;
        const double secs = timed([&] { cert = build_certificate(10); });
        if (!cert.all_verified)
            return std::string("certificate not verified, failed stage ") +
                   std::to_string(cert.failed_stage);
        if (cert.final_x_minus / PI > 3.34e-30)
            return std::string("x^-/pi above 3.34e-30");
        // final x^+/pi must round to 0.9999999999 at 10 decimals
        if (cert.final_x_plus / PI < 0.9999999999 - 5e-11)
            return std::string("x^+/pi below 0.9999999999");
        return check_under(secs, 1.0);
    });

    criterion(3, "lemma sweeps", [] {
        for (std::int64_t m = 2; m <= 40; ++m)
            if (!verify_lemma1(m))
                return "lemma 1 fails at m=" + std::to_string(m);
        auto prev = solve_roots(1);
        for (std::int64_t m = 2; m <= 20; ++m) {
            const auto cur = solve_roots(m);
            if (!verify_lemma3(m, cur, prev))
                return "lemma 3 fails at m=" + std::to_string(m);
            prev = cur;
        }
        return std::string{};
    });

    criterion(4, "unit-argument Bessel values", [] {
        // seven-digit reference listings; J_1's published display digit is
        // a 6-decimal rounding (true value 0.4400506), hence the wider cap
        if (auto e = check_abs(bessel_unit(1).value, 0.4400510, 5e-7, "J_1(1)");
            !e.empty())
            return e;
        if (auto e = check_abs(bessel_unit(3).value, 0.0195634, 5e-8, "J_3(1)");
            !e.empty())
            return e;
        if (auto e = check_rel(bessel_unit(5).value, 2.497577e-4, 5e-7, "J_5(1)");
            !e.empty())
            return e;
        if (auto e = check_rel(bessel_unit(7).value, 1.502326e-6, 5e-7, "J_7(1)");
            !e.empty())
            return e;
        return check_rel(bessel_unit(9).value, 5.249250e-9, 5e-7, "J_9(1)");
    });

    criterion(5, "negative spike of S^(3)", [] {
        double v = 0.0;
        const double secs = timed(
            [&] { v = modified_sum(SumKind::SinCos, 400000, 2.0 * PI / 3.0); });
        if (auto e = check_abs(v, -1.011006, 5e-6, "S_4e5^(3)(2pi/3)");
            !e.empty())
            return e;
        return check_under(secs, 1.0);
    });

    criterion(6, "jump near 2pi/3", [] {
        JumpMeasurement j{};
        const double secs = timed([&] { j = measure_jump(100000); });
        if (auto e = check_abs(j.jump, 0.1449, 0.01, "measured jump");
            !e.empty())
            return e;
        if (auto e = check_abs(jump_prediction(), 0.1449, 5e-5, "predicted jump");
            !e.empty())
            return e;
        return check_under(secs, 5.0);
    });

    criterion(7, "growth slopes", [] {
        const std::vector<std::int64_t> schedule{1000, 10000, 100000, 1000000};
        std::string err;
        const double secs = timed([&] {
            const double target12 = 0.5 * (1.0 + std::cos(1.0));
            err = check_rel(growth_fit(SumKind::CosCos, PI / 2.0, schedule),
                            target12, 0.02, "S^(1) slope");
            if (err.empty())
                err = check_rel(growth_fit(SumKind::CosSin, PI / 2.0, schedule),
                                target12, 0.02, "S^(2) slope");
            if (err.empty())
                err = check_rel(
                    growth_fit(SumKind::SinCos, 2.0 * PI / 3.0, schedule),
                    -0.0391267, 0.02, "S^(3) slope");
        });
        if (!err.empty())
            return err;
        return check_under(secs, 30.0);
    });

    criterion(8, "closed forms vs direct sums", [] {
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
                    return "mismatch at n=" + std::to_string(n);
            }
        }
        return std::string{};
    });

    criterion(9, "Gibbs constant", [] {
        if (auto e = check_abs(gibbs_constant(), 1.8519370, 1e-6, "Si(pi)");
            !e.empty())
            return e;
        return check_abs(max_sine_sum(10000), gibbs_constant(), 1e-3,
                         "max of s_1e4");
    });

    criterion(10, "property suites", [] {
        for (const auto& suite : selftest::suites()) {
            const std::string detail = suite.run();
            if (!detail.empty())
                return suite.name + ": " + detail;
        }
        // grid positivity of S_n^(4) for n <= 500 over 4000 interior points
        const std::size_t points = 4000;
        std::vector<double> xs(points), acc(points, 0.0);
        for (std::size_t i = 0; i < points; ++i)
            xs[i] = PI * static_cast<double>(i + 1) /
                    static_cast<double>(points + 1);
        for (std::int64_t n = 1; n <= 500; ++n) {
            for (std::size_t i = 0; i < points; ++i) {
                acc[i] += std::sin(std::sin(reduce_phase(n, xs[i]))) /
                          static_cast<double>(n);
                if (acc[i] <= 0.0)
                    return "S_n^(4) <= 0 at n=" + std::to_string(n);
            }
        }
        return check_abs(lambda_crossing(), 0.207685, 5e-7, "lambda");
    });

    if (failures == 0)
        std::printf("all %d criteria passed\n", 10);
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
