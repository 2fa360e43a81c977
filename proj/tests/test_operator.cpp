#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "smd/moments.hpp"
#include "smd/operator.hpp"

using namespace smd;

TEST_CASE("kernel integral telescoped product") {
    // (i+1)(i+2)(i+3)/n^4 at n = 10, i = 100.
    CHECK(kernel_integral(10, 100, 3) ==
          doctest::Approx(106.1106).epsilon(1e-13));
    CHECK(kernel_integral(5, 0, 0) == doctest::Approx(0.2));
    CHECK_THROWS_AS(kernel_integral(3, -1, 2), std::invalid_argument);
}

TEST_CASE("per-term expectations match independent closed forms") {
    // u^2 sin(pi u) under the Gamma(21, rate 15) kernel.
    operator_params p15(15, 1.0 / 60.0);
    CHECK(term_expectation(p15, target_function::x2_sin_pi(), 20) ==
          doctest::Approx(-1.2524697341606260399).epsilon(1e-12));
    // (u^2 + 1) e^u under the Gamma(8, rate 5) kernel: (5/4)^8 * 5.5.
    operator_params p5(5, 1.0 / 5.0);
    CHECK(term_expectation(p5, target_function::quad_exp(), 7) ==
          doctest::Approx(32.78255462646484375).epsilon(1e-13));
    // u e^{-7u}: (n/(n+7))^{i+1} (i+1)/(n+7) at n = 10, i = 4.
    operator_params p10(10, 0.05);
    const double expect = std::pow(10.0 / 17.0, 5) * 5.0 / 17.0;
    CHECK(term_expectation(p10, target_function::x_exp_m7(), 4) ==
          doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("operator value frozen points") {
    CHECK(apply(operator_params(1, 1.0), target_function::exp_decay(1.0), 1.0)
              .value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(apply(operator_params(10, 1.0 / 45.0), target_function::x_exp_m7(), 0.5)
              .value ==
          doctest::Approx(0.017828197753210641634).epsilon(1e-12));
    CHECK(apply(operator_params(15, 1.0 / 60.0), target_function::x2_sin_pi(),
                1.25)
              .value ==
          doctest::Approx(-0.70124862800586399488).epsilon(1e-10));
    CHECK(apply(operator_params(5, 0.2), target_function::quad_exp(), 0.02)
              .value ==
          doctest::Approx(1.5254645054751117164).epsilon(1e-12));
}

TEST_CASE("series divergence guard for exponential growth") {
    // A (1 + n alpha) < n fails at n = 2, alpha = 1/2, A = 1.
    CHECK_THROWS_AS(
        apply(operator_params(2, 0.5), target_function::quad_exp(), 0.3),
        std::domain_error);
    // Shrinking alpha to 0.4 restores convergence.
    const eval_result ok =
        apply(operator_params(2, 0.4), target_function::quad_exp(), 0.3);
    CHECK(std::isfinite(ok.value));
    CHECK(ok.value > 0.0);
}

TEST_CASE("linearity against closed-form moments") {
    operator_params p(3, 0.2);
    const double x = 2.4;
    const target_function mix = target_function::polynomial({0.0, 2.0, 3.0});
    const double expect = 2.0 * raw_moment(p, x, 1) + 3.0 * raw_moment(p, x, 2);
    CHECK(apply(p, mix, x).value == doctest::Approx(expect).epsilon(1e-13));
    for (unsigned m = 0; m <= 4; ++m)
        CHECK(apply(p, target_function::monomial(m), x).value ==
              doctest::Approx(raw_moment(p, x, m)).epsilon(1e-12));
}

TEST_CASE("sampled functions integrate through quadrature") {
    // Dense samples of an affine function: the piecewise-linear
    // interpolant is the function itself, so the rule is exact.
    std::vector<double> xs, ys;
    for (int k = 0; k <= 3000; ++k) {
        xs.push_back(0.01 * k);
        ys.push_back(2.0 * xs.back() + 1.0);
    }
    operator_params p(10, 0.05);
    const target_function f = target_function::sampled(xs, ys);
    const eval_result r = apply(p, f, 1.0);
    const double expect = 1.0 + 2.0 * raw_moment(p, 1.0, 1);
    CHECK(r.value == doctest::Approx(expect).epsilon(1e-10));
    CHECK_FALSE(r.constant_extension_used);

    // Short sample range: the kernel window runs past the last abscissa.
    const target_function clipped =
        target_function::sampled({0.0, 1.0, 2.0}, {1.0, 3.0, 5.0});
    const eval_result ext = apply(p, clipped, 5.0);
    CHECK(ext.constant_extension_used);
    CHECK(ext.value > 0.0);
}

TEST_CASE("grid evaluation matches pointwise evaluation") {
    operator_params p(25, 1.0 / 50.0);
    const target_function f = target_function::exp_decay(2.0);
    const std::vector<double> xs = {0.0, 0.3, 1.1, 4.2, 9.5};
    const auto grid = apply_grid(p, f, xs);
    REQUIRE(grid.size() == xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k)
        CHECK(grid[k].value ==
              doctest::Approx(apply(p, f, xs[k]).value).epsilon(1e-14));
    CHECK_THROWS_AS(apply_grid(operator_params(2, 0.5),
                               target_function::quad_exp(), xs),
                    std::domain_error);
}

TEST_CASE("tail estimate stays honest at loose tolerances") {
    operator_params p(40, 1.0 / 80.0);
    const target_function f = target_function::monomial(2);
    series_policy loose;
    loose.eps_tail = 1e-6;
    const eval_result r = apply(p, f, 3.0, loose);
    const double truth = raw_moment(p, 3.0, 2);
    CHECK(std::abs(r.value - truth) <= r.error_estimate() + 1e-12 * truth);
}
