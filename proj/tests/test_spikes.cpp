#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fejer/bessel.hpp"
#include "fejer/series.hpp"
#include "fejer/special.hpp"
#include "fejer/spikes.hpp"

using namespace fejer;

TEST_CASE("spike heights") {
    const auto s3 = spike_height(SumKind::SinCos, 400000);
    CHECK_THAT(s3.measured, Catch::Matchers::WithinAbs(-1.011006, 5e-6));
    CHECK_THAT(s3.predicted, Catch::Matchers::WithinRel(s3.measured, 1e-10));
    CHECK_THAT(s3.growth_coefficient,
               Catch::Matchers::WithinAbs(-0.0391267, 5e-8));

    const auto s1 = spike_height(SumKind::CosCos, 1000);
    CHECK_THAT(s1.predicted, Catch::Matchers::WithinRel(s1.measured, 1e-10));
    CHECK_THAT(s1.growth_coefficient, Catch::Matchers::WithinAbs(0.7701512, 5e-8));

    const auto s2 = spike_height(SumKind::CosSin, 999);
    CHECK_THAT(s2.predicted, Catch::Matchers::WithinRel(s2.measured, 1e-10));

    CHECK_THROWS_AS(spike_height(SumKind::SinSin, 100), std::invalid_argument);
}

TEST_CASE("spike of S^(1) is the global maximum at pi/2 for even n >= 18") {
    const double peak = modified_sum(SumKind::CosCos, 18, PI / 2.0);
    for (int i = 1; i <= 400; ++i) {
        const double x = PI * i / 401.0;
        if (std::abs(x - PI / 2.0) < 1e-9)
            continue;
        CHECK(modified_sum(SumKind::CosCos, 18, x) < peak);
    }
}

TEST_CASE("spike locations for small even n") {
    const auto p16 = spike_location_small_even(16);
    CHECK_THAT(p16.first, Catch::Matchers::WithinAbs(PI / 2.0 - PI / 34.0, 1e-15));
    CHECK_THAT(p16.second, Catch::Matchers::WithinAbs(PI / 2.0 + PI / 34.0, 1e-15));

    const auto p2 = spike_location_small_even(2);
    CHECK_THAT(p2.first, Catch::Matchers::WithinAbs(PI / 2.0 - PI / 6.0, 1e-15));

    // golden-section oracle: the maximizer of S_2^(1) near pi/2 sits at one
    // of the two predicted local maxima
    double a = PI / 4.0, b = 3.0 * PI / 4.0;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = modified_sum(SumKind::CosCos, 2, c);
    double fd = modified_sum(SumKind::CosCos, 2, d);
    while (b - a > 1e-9) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = modified_sum(SumKind::CosCos, 2, c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = modified_sum(SumKind::CosCos, 2, d);
        }
    }
    const double xmax = 0.5 * (a + b);
    const bool near_either = std::abs(xmax - p2.first) < 1e-6 ||
                             std::abs(xmax - p2.second) < 1e-6;
    CHECK(near_either);

    CHECK_THROWS_AS(spike_location_small_even(18), std::domain_error);
    CHECK_THROWS_AS(spike_location_small_even(3), std::domain_error);
}

TEST_CASE("jump prediction") {
    const double pred = jump_prediction();
    CHECK_THAT(pred, Catch::Matchers::WithinAbs(0.1449, 5e-5));
    // leading term dominates: higher terms shift it by < 1e-7
    const double leading = 4.0 * gibbs_constant() * bessel_unit(3).value;
    CHECK(std::abs(pred - leading) < 1e-7);
    // replacing Si(pi) by the working supremum xi = 2 gives a strictly
    // larger envelope (~0.15651)
    const double with_xi = pred / gibbs_constant() * 2.0;
    CHECK(with_xi > pred);
    CHECK_THAT(with_xi, Catch::Matchers::WithinAbs(0.15651, 5e-5));
}

TEST_CASE("jump measurement") {
    const auto j100 = measure_jump(100);
    CHECK(j100.jump > 0.0);
    CHECK(j100.window_half_width >= 2.0 * PI / 100.0);

    const auto j1e4 = measure_jump(10000);
    const auto j1e5 = measure_jump(100000);
    CHECK(j1e5.jump > 0.1349);
    CHECK(j1e5.jump < 0.1549);
    // doubling schedule: the measurement closes in on the prediction
    CHECK(std::abs(j1e5.jump - 0.1449) <= std::abs(j1e4.jump - 0.1449) + 1e-12);

    CHECK_THROWS_AS(measure_jump(99), std::domain_error);
}

TEST_CASE("growth fits over three decades") {
    const std::vector<std::int64_t> schedule{1000, 10000, 100000, 1000000};
    const double s1 = growth_fit(SumKind::CosCos, PI / 2.0, schedule);
    CHECK_THAT(s1, Catch::Matchers::WithinRel(0.5 * (1.0 + std::cos(1.0)), 0.02));

    const double s3 = growth_fit(SumKind::SinCos, 2.0 * PI / 3.0, schedule);
    CHECK_THAT(s3, Catch::Matchers::WithinRel(-0.0391267, 0.02));

    const double s2 = growth_fit(SumKind::CosSin, PI / 2.0, schedule);
    CHECK_THAT(s2, Catch::Matchers::WithinRel(0.5 * (1.0 + std::cos(1.0)), 0.02));
    // the S^(2) spike stays below sigma_n
    for (std::int64_t n : schedule)
        CHECK(modified_sum(SumKind::CosSin, n, PI / 2.0) < harmonic(n).sigma);

    CHECK_THROWS_AS(growth_fit(SumKind::CosCos, PI / 2.0, {10, 100, 1000}),
                    std::domain_error);
    CHECK_THROWS_AS(growth_fit(SumKind::CosCos, PI / 2.0, {10, 20, 30, 40}),
                    std::domain_error);
    CHECK_THROWS_AS(growth_fit(SumKind::CosCos, PI / 2.0, {10, 20, 15, 4000}),
                    std::domain_error);
}
