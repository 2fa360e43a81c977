#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "smd/smoothness.hpp"

using namespace smd;

TEST_CASE("first modulus of affine and exponential functions") {
    const interval dom{0.0, 50.0};
    const auto affine = omega1([](double t) { return 3.0 * t - 1.0; }, 0.5, dom,
                               0.05);
    CHECK(affine.value == doctest::Approx(1.5).epsilon(1e-12));

    // omega(e^{-t}; 0.1) = 1 - e^{-0.1}, attained at x = 0, h = 0.1; both
    // lie on the grid.
    const auto decay =
        omega1([](double t) { return std::exp(-t); }, 0.1, dom, 0.01);
    CHECK(decay.value ==
          doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-12));
}

TEST_CASE("second modulus kills affine functions and squares doubles") {
    const interval dom{0.0, 10.0};
    const auto affine =
        omega2([](double t) { return -2.0 * t + 5.0; }, 0.3, dom, 0.03);
    CHECK(affine.value <= 1e-12);
    const auto square = omega2([](double t) { return t * t; }, 0.3, dom, 0.03);
    CHECK(square.value == doctest::Approx(2.0 * 0.09).epsilon(1e-10));
}

TEST_CASE("modulus resolution precondition") {
    const interval dom{0.0, 1.0};
    CHECK_THROWS_AS(omega1([](double t) { return t; }, 0.1, dom, 0.02),
                    std::invalid_argument);
}

TEST_CASE("steklov mean reproduces affine and shifts squares") {
    const auto affine = [](double t) { return 4.0 * t + 2.0; };
    CHECK(steklov_mean(affine, 1.7, 0.4) ==
          doctest::Approx(4.0 * 1.7 + 2.0).epsilon(1e-12));
    const auto square = [](double t) { return t * t; };
    const double h = 0.3;
    CHECK(steklov_mean(square, 2.0, h) ==
          doctest::Approx(4.0 - h * h / 3.0).epsilon(1e-11));
}

TEST_CASE("steklov inequalities hold for a smooth decaying function") {
    const auto rep = steklov_inequalities_check(
        [](double t) { return std::exp(-t); }, 0.25, {0.0, 10.0}, 0.02);
    CHECK(rep.distance_ok);
    CHECK(rep.first_ok);
    CHECK(rep.second_ok);
    CHECK(rep.all_ok());
}

TEST_CASE("lipschitz maximal functions of canonical examples") {
    // sqrt(t) at x = 0 with r = 1/2: the ratio is identically 1.
    const double k_root = lipschitz_maximal(
        [](double t) { return std::sqrt(t); }, 0.0, 0.5, {0.0, 10.0}, 1e-3);
    CHECK(k_root == doctest::Approx(1.0).epsilon(1e-10));
    const double k_id = lipschitz_maximal([](double t) { return t; }, 1.0, 1.0,
                                          {0.0, 10.0}, 1e-3);
    CHECK(k_id == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("weighted modulus of the square reaches the golden-ratio point") {
    // sup (2xh + h^2)/((1+h^2)(1+x^2)) over h <= 1 equals (sqrt(5)+1)/4 at
    // h = 1, x = (sqrt(5)-1)/2.
    const auto est = weighted_modulus([](double t) { return t * t; }, 1.0, 5.0,
                                      1e-3);
    CHECK(est.value ==
          doctest::Approx(0.80901699437494742410).epsilon(3e-4));
    CHECK(est.value <= 0.80901699437494742410 + 1e-12);
}
