#include <cmath>

#include "doctest.h"
#include "smd/special.hpp"

using namespace smd;

TEST_CASE("kahan accumulator recovers cancelled small addends") {
    kahan_sum s;
    s.add(1e16);
    s.add(1.0);
    s.add(-1e16);
    CHECK(s.value() == doctest::Approx(1.0).epsilon(1e-15));

    kahan_sum t;
    for (int k = 0; k < 100000; ++k) t.add(1e-3);
    CHECK(t.value() == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("log poisson pmf matches direct form at small index") {
    // z^3 e^{-z}/3! at z = 2.5
    const double direct = std::pow(2.5, 3) * std::exp(-2.5) / 6.0;
    CHECK(std::exp(log_poisson_pmf(3, 2.5)) ==
          doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("integer-shape regularized lower gamma") {
    CHECK(gamma_p_integer(1, 0.5) ==
          doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-14));
    // P(3, 2) = 1 - e^{-2}(1 + 2 + 2)
    CHECK(gamma_p_integer(3, 2.0) ==
          doctest::Approx(1.0 - 5.0 * std::exp(-2.0)).epsilon(1e-13));
    CHECK(gamma_p_integer(5, 0.0) == doctest::Approx(0.0));
    // Far right tail saturates.
    CHECK(gamma_p_integer(4, 500.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("prefix gamma batch equals per-index values") {
    const double z = 37.5;
    const auto batch = gamma_p_integer_prefix(60, z);
    REQUIRE(batch.size() == 60);
    for (std::int64_t k = 1; k <= 60; k += 7)
        CHECK(batch[static_cast<std::size_t>(k - 1)] ==
              doctest::Approx(gamma_p_integer(k, z)).epsilon(1e-12));
    for (std::size_t k = 1; k < batch.size(); ++k)
        CHECK(batch[k] <= batch[k - 1] + 1e-15);  // decreasing in shape
}

TEST_CASE("gamma central moments from cumulants") {
    // Gamma(shape 3, rate 2): var = 3/4, mu3 = 2*3/8, mu4 = 3*3*(3+2)/16.
    const auto mu = gamma_central_moments(3.0, 2.0, 4);
    REQUIRE(mu.size() == 5);
    CHECK(mu[0] == doctest::Approx(1.0));
    CHECK(mu[1] == doctest::Approx(0.0));
    CHECK(mu[2] == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(mu[3] == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(mu[4] == doctest::Approx(45.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(10, 3) == doctest::Approx(120.0));
    CHECK(binomial(52, 5) == doctest::Approx(2598960.0));
    CHECK(binomial(6, 0) == doctest::Approx(1.0));
    CHECK(binomial(6, 6) == doctest::Approx(1.0));
}

TEST_CASE("gauss-legendre rule integrates exactly") {
    const auto& rule = gauss_legendre(16);
    REQUIRE(rule.nodes.size() == 16);
    double wsum = 0.0, quad = 0.0, high = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        wsum += rule.weights[k];
        quad += rule.weights[k] * rule.nodes[k] * rule.nodes[k];
        high += rule.weights[k] * std::pow(rule.nodes[k], 30);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(quad == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    // Degree-30 monomial: 16 points are exact through degree 31.
    CHECK(high == doctest::Approx(2.0 / 31.0).epsilon(1e-12));
}
