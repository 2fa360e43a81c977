#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "smd/basis.hpp"
#include "smd/moments.hpp"
#include "smd/operator.hpp"
#include "smd/special.hpp"

using namespace smd;

TEST_CASE("closed raw moments at a hand-checked point") {
    operator_params p(2, 0.5);
    CHECK(raw_moment(p, 1.0, 0) == doctest::Approx(1.0));
    CHECK(raw_moment(p, 1.0, 1) == doctest::Approx(1.5));
    CHECK(raw_moment(p, 1.0, 3) == doctest::Approx(15.0).epsilon(1e-14));
    CHECK(raw_moment(p, 1.0, 4) == doctest::Approx(72.0).epsilon(1e-14));
    CHECK_THROWS_AS(raw_moment(p, 1.0, 5), std::invalid_argument);
}

TEST_CASE("central moments are binomial combinations of raw moments") {
    for (double alpha : {0.0, 0.1, 0.25}) {
        operator_params p(4, alpha);
        for (double x : {0.0, 0.6, 3.7}) {
            const double r1 = raw_moment(p, x, 1);
            const double r2 = raw_moment(p, x, 2);
            const double r3 = raw_moment(p, x, 3);
            const double r4 = raw_moment(p, x, 4);
            CHECK(central_moment(p, x, 1) ==
                  doctest::Approx(r1 - x).epsilon(1e-12));
            CHECK(central_moment(p, x, 2) ==
                  doctest::Approx(r2 - 2 * x * r1 + x * x).epsilon(1e-12));
            CHECK(central_moment(p, x, 3) ==
                  doctest::Approx(r3 - 3 * x * r2 + 3 * x * x * r1 -
                                  x * x * x)
                      .epsilon(1e-11));
            CHECK(central_moment(p, x, 4) ==
                  doctest::Approx(r4 - 4 * x * r3 + 6 * x * x * r2 -
                                  4 * x * x * x * r1 + x * x * x * x)
                      .epsilon(1e-10));
        }
    }
}

TEST_CASE("series-route central moments match closed forms") {
    operator_params p(4, 0.25);
    const double x = 1.0;
    for (unsigned m = 1; m <= 4; ++m)
        CHECK(central_moment_numeric(p, x, m) ==
              doctest::Approx(central_moment(p, x, m)).epsilon(1e-11));
    // Order 6 at this point is exactly 961/16.
    CHECK(central_moment_numeric(p, x, 6) ==
          doctest::Approx(60.0625).epsilon(1e-11));
}

TEST_CASE("literal kernel-integral route agrees at moderate scale") {
    // Expanding (u - x)^2 through raw kernel integrals is fine when n x is
    // small; it serves as an independent oracle for the stable routine.
    operator_params p(10, 0.05);
    const double x = 1.0;
    const basis_weight_set set = basis_weights_truncated(p, x);
    kahan_sum acc;
    for (std::size_t k = 0; k < set.weights.size(); ++k) {
        const auto i = static_cast<std::int64_t>(k);
        const double nd = 10.0;
        const double e0 = nd * kernel_integral(10, i, 0);
        const double e1 = nd * kernel_integral(10, i, 1);
        const double e2 = nd * kernel_integral(10, i, 2);
        acc.add(set.weights[k] * (e2 - 2.0 * x * e1 + x * x * e0));
    }
    CHECK(acc.value() ==
          doctest::Approx(central_moment(p, x, 2)).epsilon(1e-9));
}

TEST_CASE("eta dominates the second central moment when alpha <= 1/n") {
    for (std::uint32_t n : {1u, 3u, 17u, 120u}) {
        for (double frac : {0.0, 0.5, 1.0}) {
            operator_params p(n, frac / static_cast<double>(n));
            for (double x : {0.0, 0.2, 1.0, 14.0}) {
                const double e = eta(p, x);
                CHECK(3.0 * e * e / static_cast<double>(n) >=
                      central_moment(p, x, 2) - 1e-15);
            }
        }
    }
}

TEST_CASE("scaled central moments approach their limits") {
    const auto rows = asymptotic_check(10000, 2.0);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].order == 1);
    CHECK(rows[0].rel_gap <= 1e-12);
    CHECK(rows[1].scaled == doctest::Approx(6.0).epsilon(1e-3));
    CHECK(rows[1].rel_gap <= 1e-4);
    CHECK(rows[2].rel_gap <= 1e-2);
    CHECK(rows[3].rel_gap <= 5e-2);
}

TEST_CASE("moment report collects the catalog") {
    operator_params p(6, 0.1);
    const moment_report r = moments_at(p, 1.4);
    REQUIRE(r.raw.size() == 5);
    REQUIRE(r.central.size() == 4);
    CHECK(r.raw[0] == doctest::Approx(1.0));
    CHECK(r.eta_value ==
          doctest::Approx(std::sqrt(1.4 + 1.0 / 6.0)).epsilon(1e-14));
}
