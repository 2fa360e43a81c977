#pragma once

#include <vector>

#include "smd/params.hpp"

namespace smd {

/// Closed-form raw moment U(t^m; x) for m = 0..4.
double raw_moment(const operator_params& p, double x, unsigned m);

/// Closed-form central moment U((t-x)^m; x) for m = 1..4.
double central_moment(const operator_params& p, double x, unsigned m);

/// Central moment of any order via the weight series: each term's
/// Gamma-kernel expectation of (u-x)^m is expanded binomially about the
/// term's own mean, where the Gamma central moments are available in
/// closed form.  Exact up to the series tail.
double central_moment_numeric(const operator_params& p, double x, unsigned m,
                              const series_policy& policy = {});

/// eta_n(x) = sqrt(x + 1/n); 3 eta^2 / n bounds the second central moment
/// whenever alpha <= 1/n.
double eta(const operator_params& p, double x);

struct moment_report {
    double x = 0.0;
    std::vector<double> raw;      // orders 0..4
    std::vector<double> central;  // orders 1..4 (index 0 -> order 1)
    double eta_value = 0.0;
};

moment_report moments_at(const operator_params& p, double x);

/// Scaled central moments against their alpha = 1/n limits:
/// n Theta_1 -> 1, n Theta_2 -> 3x, n^2 Theta_4 -> 27 x^2,
/// n^3 Theta_6 -> 405 x^3 (the order-6 entry is evaluated numerically).
struct asymptotic_row {
    unsigned order;
    double scaled;  // n^{ceil(order/2)} Theta_order
    double limit;
    double rel_gap;  // |scaled/limit - 1|, inf when limit == 0
};

std::vector<asymptotic_row> asymptotic_check(std::uint32_t n, double x);

}  // namespace smd
