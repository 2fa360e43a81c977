#include <cmath>

#include "doctest.h"
#include "smd/basis.hpp"

using namespace smd;

TEST_CASE("poisson limit weight matches the closed pmf") {
    // alpha = 0, n = 10, x = 1, i = 10: e^{-10} 10^10 / 10!.
    operator_params p(10, 0.0);
    CHECK(basis_weight(p, 1.0, 10) ==
          doctest::Approx(0.12511003572113329898).epsilon(1e-13));
}

TEST_CASE("weights satisfy the generating identity") {
    // sum_i r_{n,i}(x) z^i = (1 + n alpha (1 - z))^{-x/alpha}; at n = 4,
    // alpha = 1/4, x = 1, z = 3/2 both sides equal 16.
    operator_params p(4, 0.25);
    double sum = 0.0;
    const double logz = std::log(1.5);
    for (std::int64_t i = 0; i < 300; ++i)
        sum += std::exp(log_basis_weight(p, 1.0, i) +
                        static_cast<double>(i) * logz);
    CHECK(sum == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("truncated weight sweep reaches the requested mass") {
    operator_params p(7, 0.5 / 7.0);
    series_policy pol;
    pol.eps_tail = 1e-12;
    const basis_weight_set set = basis_weights_truncated(p, 3.2, pol);
    CHECK(set.mass >= 1.0 - 1e-12);
    CHECK(set.mass <= 1.0 + 1e-13);
    CHECK(set.tail_bound >= 0.0);
    CHECK(set.weights.size() == set.log_weights.size());
}

TEST_CASE("x = 0 collapses to the single index-0 weight") {
    operator_params p(12, 0.05);
    const basis_weight_set set = basis_weights_truncated(p, 0.0);
    REQUIRE(set.weights.size() == 1);
    CHECK(set.weights[0] == doctest::Approx(1.0));
    CHECK(set.mass == doctest::Approx(1.0));
}

TEST_CASE("recurrence sweep agrees with per-index log weights") {
    operator_params p(50, 0.013);
    const double x = 2.7;
    const basis_weight_set set = basis_weights_truncated(p, x);
    for (std::int64_t i : {0, 1, 17, 63, 120}) {
        REQUIRE(i <= set.max_index());
        const double direct = std::exp(log_basis_weight(p, x, i));
        CHECK(set.weights[static_cast<std::size_t>(i)] ==
              doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("weight mass stays near one far into the admissible corner") {
    operator_params p(200, 1.0 / 200.0);
    const basis_weight_set set = basis_weights_truncated(p, 20.0);
    CHECK(std::abs(1.0 - set.mass) <= 1e-10);
    // Mode sits near n x; the sweep must have covered it.
    CHECK(set.max_index() >= 4000);
}

TEST_CASE("alpha at the degenerate threshold matches the poisson branch") {
    const double x = 1.3;
    operator_params tiny(9, 1e-14);
    operator_params zero(9, 0.0);
    for (std::int64_t i : {0, 3, 11})
        CHECK(log_basis_weight(tiny, x, i) ==
              doctest::Approx(log_basis_weight(zero, x, i)).epsilon(1e-9));
}
