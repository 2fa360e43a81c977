#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "smd/stat_conv.hpp"

using namespace smd;

namespace {

bool is_square(std::int64_t v) {
    const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(
        static_cast<double>(v))));
    return r * r == v;
}

}  // namespace

TEST_CASE("identity matrix is the sequence itself") {
    const auto A = summability_matrix::identity();
    const sequence seq = [](std::int64_t i) { return static_cast<double>(i * i); };
    CHECK(a_transform(A, seq, 7) == doctest::Approx(49.0));
    CHECK(A.row_sum(3) == doctest::Approx(1.0));
    CHECK(stat_mass(A, seq, 7, 49.0, 0.5) == doctest::Approx(0.0));
    CHECK(stat_mass(A, seq, 7, 0.0, 0.5) == doctest::Approx(1.0));
}

TEST_CASE("cesaro row averages a prefix") {
    const auto A = summability_matrix::cesaro_c1();
    const sequence seq = [](std::int64_t i) { return static_cast<double>(i); };
    CHECK(a_transform(A, seq, 4) == doctest::Approx(1.5));
    CHECK(A.row_sum(1) == doctest::Approx(1.0));
    CHECK(A.row_sum(1000) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(A.row_sum(0), std::out_of_range);
}

TEST_CASE("square indicator has cesaro density zero") {
    const auto A = summability_matrix::cesaro_c1();
    const sequence squares = [](std::int64_t i) {
        return is_square(i + 1) ? 1.0 : 0.0;
    };
    CHECK(stat_mass(A, squares, 100, 0.0, 0.5) == doctest::Approx(0.1));
    CHECK(stat_mass(A, squares, 10000, 0.0, 0.5) ==
          doctest::Approx(0.01).epsilon(1e-13));
}

TEST_CASE("custom matrices validate their entries") {
    CHECK_THROWS_AS(summability_matrix::custom({{{0, -0.5}}}),
                    std::invalid_argument);
    const auto A = summability_matrix::custom({{{0, 0.25}, {2, 0.75}}});
    const sequence seq = [](std::int64_t i) { return static_cast<double>(i); };
    CHECK(a_transform(A, seq, 0) == doctest::Approx(1.5));
    CHECK_THROWS_AS(a_transform(A, seq, 1), std::out_of_range);
}

TEST_CASE("moment deviations stay under their envelopes") {
    const auto A = summability_matrix::cesaro_c1();
    const auto rep = operator_stat_check(A, {1, 10, 100, 1000}, 20.0, 0.05, 0.1);
    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.all_within);
    for (const auto& row : rep.rows) {
        CHECK(row.deviation_r1 <= row.envelope_r1);
        CHECK(row.deviation_r2 <= row.envelope_r2);
        // r = 1 envelope is attained exactly at x = 0.
        CHECK(row.deviation_r1 ==
              doctest::Approx(row.envelope_r1).epsilon(1e-14));
    }
    // With eps = 0.1 only the first ~25 indices deviate; Cesaro row 1000
    // weighs them at about 0.025.
    CHECK(rep.indicator_mass > 0.0);
    CHECK(rep.indicator_mass <= 0.03);
}
