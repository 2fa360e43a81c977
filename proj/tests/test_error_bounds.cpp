#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "smd/error_bounds.hpp"
#include "smd/moments.hpp"

using namespace smd;

TEST_CASE("direct k-functional bound dominates a smooth bounded target") {
    operator_params p(10, 0.05);
    const auto rep = direct_k_bound(p, target_function::exp_decay(1.0), 1.0);
    CHECK(rep.dominates());
    CHECK(rep.bound > 0.0);
    CHECK(rep.ingredients.count("omega2") == 1);
}

TEST_CASE("steklov split bound dominates") {
    operator_params p(50, 0.0);
    const auto rep = steklov_bound(p, target_function::exp_decay(1.0), 0.8);
    CHECK(rep.dominates());
    // 5(omega + 1.3 omega2) is never tighter than omega alone here.
    CHECK(rep.bound >= rep.ingredients.at("omega1"));
}

TEST_CASE("lipschitz maximal bound dominates for fractional exponents") {
    operator_params p(20, 1.0 / 40.0);
    const auto rep =
        lipschitz_maximal_bound(p, target_function::x_exp_m7(), 0.6, 0.5);
    CHECK(rep.dominates());
    CHECK(rep.ingredients.at("r") == doctest::Approx(0.5));
}

TEST_CASE("modified lipschitz bound requires interior points") {
    operator_params p(8, 0.1);
    CHECK_THROWS_AS(
        modified_lipschitz_bound(p, target_function::exp_decay(1.0), 0.0, 1.0,
                                 1.0, 1.0),
        std::invalid_argument);
    bound_settings s;
    s.constant_M = 30.0;  // generous class constant
    const auto rep = modified_lipschitz_bound(
        p, target_function::exp_decay(1.0), 1.2, 1.0, 1.0, 1.0, s);
    CHECK(rep.dominates());
}

TEST_CASE("weighted growth bound covers polynomially growing targets") {
    operator_params p(15, 1.0 / 60.0);
    const auto square = weighted_growth_bound(p, target_function::monomial(2),
                                              1.3, 2.0);
    CHECK(square.dominates());
    const auto wavy = weighted_growth_bound(p, target_function::x2_sin_pi(),
                                            1.3, 2.0);
    CHECK(wavy.dominates());
    CHECK_THROWS_AS(weighted_growth_bound(p, target_function::monomial(2), 3.0,
                                          2.0),
                    std::invalid_argument);
}

TEST_CASE("voronovskaya residual vanishes on quadratics") {
    operator_params p(7, 0.1);
    const target_function quad = target_function::polynomial({2.0, -1.0, 0.5});
    const auto rep = voronovskaya_residual(p, quad, 2.0);
    CHECK(rep.measured <= 1e-10 * std::abs(quad(2.0)) + 1e-12);
}

TEST_CASE("voronovskaya residual of the cube equals the third moment") {
    operator_params p(10, 0.1);
    const auto rep = voronovskaya_residual(p, target_function::monomial(3), 1.0);
    // n Theta_3 = (23 n x + 6)/n^2 at alpha = 1/n.
    CHECK(rep.measured == doctest::Approx(2.36).epsilon(1e-9));
}

TEST_CASE("gruss product defect matches its closed form") {
    operator_params p(5, 0.12);
    const double x = 1.5;
    const target_function t1 = target_function::monomial(1);
    const target_function t2 = target_function::monomial(2);
    const auto rep = gruss_quantity(p, t1, t1, t2, x);
    // (1 + 2 n x + n^2 x alpha)/n = 0.2 + 3 + 0.9.
    CHECK(rep.measured == doctest::Approx(4.1).epsilon(1e-11));
    CHECK(rep.bound == doctest::Approx(2.0 * x).epsilon(1e-14));
}
