#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "smd/kernel_bv.hpp"
#include "smd/operator.hpp"

using namespace smd;

TEST_CASE("kernel density frozen point and basic shape") {
    operator_params p(4, 0.25);
    CHECK(kernel_density(p, 1.0, 1.0) ==
          doctest::Approx(0.48495143159786214595).epsilon(1e-11));
    CHECK(kernel_density(p, 1.0, 0.0) >= 0.0);
    CHECK(kernel_density(p, 1.0, 40.0) <= 1e-12);
}

TEST_CASE("kernel distribution function integrates the density") {
    operator_params p(6, 0.1);
    const double x = 1.2;
    CHECK(kernel_cdf(p, x, 0.0) == doctest::Approx(0.0));
    CHECK(kernel_cdf(p, x, -1.0) == doctest::Approx(0.0));
    CHECK(kernel_cdf(p, x, 60.0) == doctest::Approx(1.0).epsilon(1e-9));

    // Trapezoid of the density on [0, y] reproduces the cdf.
    const double y = 1.0;
    const int steps = 2000;
    double acc = 0.0;
    double prev = kernel_density(p, x, 0.0);
    for (int k = 1; k <= steps; ++k) {
        const double t = y * static_cast<double>(k) / steps;
        const double cur = kernel_density(p, x, t);
        acc += 0.5 * (prev + cur) * (y / steps);
        prev = cur;
    }
    CHECK(kernel_cdf(p, x, y) == doctest::Approx(acc).epsilon(1e-6));

    // Monotone in y.
    double last = 0.0;
    for (double yy : {0.2, 0.5, 1.0, 2.0, 4.0}) {
        const double v = kernel_cdf(p, x, yy);
        CHECK(v >= last - 1e-14);
        last = v;
    }
}

TEST_CASE("tail mass lemma holds on both sides") {
    operator_params p(25, 1.0 / 25.0);
    const auto reports = lemma_l3_check(p, 1.0, {0.2, 0.5});
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        CHECK(r.holds);
        CHECK(r.cdf_value <= r.bound);
    }
    CHECK_THROWS_AS(lemma_l3_check(p, 0.0, {0.1}), std::invalid_argument);
    CHECK_THROWS_AS(lemma_l3_check(p, 1.0, {-0.1}), std::invalid_argument);
}

TEST_CASE("total variation of polylines and sampled functions") {
    CHECK(total_variation(std::vector<double>{0.0, 1.0, 0.0, 1.0}) ==
          doctest::Approx(3.0));
    const double v = total_variation(
        [](double t) { return std::sin(M_PI * t); }, 0.0, 2.0, 4001);
    CHECK(v == doctest::Approx(4.0).epsilon(1e-4));
    CHECK(total_variation([](double t) { return t; }, 1.0, 1.0, 100) ==
          doctest::Approx(0.0));
}

TEST_CASE("one-sided limits recover jump values") {
    const auto step = [](double t) { return t < 1.0 ? 2.0 : 5.0 + (t - 1.0); };
    CHECK(one_sided_limit(step, 1.0, false) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(one_sided_limit(step, 1.0, true) == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("auxiliary function centers both sides") {
    const auto g = [](double t) { return t * t; };
    const auto gx = aux_function(g, 2.0, 3.9, 4.1);
    CHECK(gx(2.0) == doctest::Approx(0.0));
    CHECK(gx(1.0) == doctest::Approx(1.0 - 3.9));
    CHECK(gx(3.0) == doctest::Approx(9.0 - 4.1));
}

TEST_CASE("variation rate bound dominates for affine targets") {
    operator_params p(25, 1.0 / 25.0);
    const auto rep = bv_rate_bound(p, target_function::polynomial({1.0, 2.0}),
                                   1.5);
    CHECK(rep.dominates());
    // The auxiliary derivative is identically zero for affine targets.
    CHECK(rep.near_terms <= 1e-12);
    CHECK(rep.left_sum <= 1e-12);
    CHECK(rep.right_sum <= 1e-12);
    CHECK(rep.measured == doctest::Approx(2.0 / 25.0).epsilon(1e-10));
}

TEST_CASE("variation rate bound dominates across a derivative jump") {
    const target_function kink = target_function::custom(
        [](double t) { return std::abs(t - 1.0); }, growth_class::polynomial,
        1.0, "kink");
    operator_params p(25, 1.0 / 25.0);
    const auto rep = bv_rate_bound(p, kink, 1.0);
    CHECK(rep.dominates());
    CHECK(rep.measured > 0.0);
    CHECK(rep.point_terms > 0.0);
    CHECK_THROWS_AS(bv_rate_bound(p, kink, 0.0), std::invalid_argument);
}
