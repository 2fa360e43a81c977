#pragma once

#include <functional>
#include <vector>

#include "smd/params.hpp"
#include "smd/target_function.hpp"

namespace smd {

/// Kernel density u_n(x, t) = n sum_i r_{n,i}(x) e^{-nt}(nt)^i / i!.
double kernel_density(const operator_params& p, double x, double t,
                      const series_policy& series = {});

/// Kernel distribution function h_n(x, y) = integral_0^y u_n(x, t) dt,
/// a proper CDF in y; each term contributes a regularized lower
/// incomplete gamma of integer shape.
double kernel_cdf(const operator_params& p, double x, double y,
                  const series_policy& series = {});

struct tail_lemma_report {
    double y = 0.0;
    double cdf_value = 0.0;   // h(x,y) left of x, 1 - h(x,z) right of x
    double bound = 0.0;       // 3 eta^2 / (n (x - y)^2)
    bool holds = false;
};

/// Checks h_n(x, y) <= 3 eta^2/(n (x-y)^2) for y < x and the mirrored
/// inequality for the upper tail at z > x, over the supplied offsets
/// (each offset d > 0 produces the pair y = x - d, z = x + d, with y
/// clamped out when negative).
std::vector<tail_lemma_report> lemma_l3_check(const operator_params& p, double x,
                                              const std::vector<double>& offsets,
                                              const series_policy& series = {});

/// Total variation of the polyline through the samples.
double total_variation(const std::vector<double>& values);

/// Total variation of g over [a, b] estimated on a uniform grid of
/// `points` samples.
double total_variation(const std::function<double(double)>& g, double a, double b,
                       std::size_t points);

/// One-sided limits by Richardson-extrapolated one-sided differences.
double one_sided_limit(const std::function<double(double)>& g, double x,
                       bool from_right, double h0 = 1e-3);

/// The centered auxiliary function
///   g_x(t) = g(t) - g(x-)   for t < x,
///            0              at t = x,
///            g(t) - g(x+)   for t > x.
std::function<double(double)> aux_function(const std::function<double(double)>& g,
                                           double x, double g_left, double g_right);

struct bv_rate_report {
    double bound = 0.0;
    double measured = 0.0;
    double measured_slack = 0.0;
    // Ingredient breakdown.
    double left_sum = 0.0;        // (3 eta^2/n) sum_{l<=floor(sqrt(n))} V over [x-x/l, x]
    double right_sum = 0.0;       // (3 eta^2/n) sum_{l<=floor(sqrt(nx))} V over [x, x+x/l]
    double near_terms = 0.0;      // (x/sqrt(n)) V over the +-x/sqrt(n) windows
    double growth_term = 0.0;     // M_{s,x}^gamma
    double point_terms = 0.0;     // everything anchored at x itself
    bool dominates() const { return measured - measured_slack <= bound; }
};

/// Rate bound for derivatives of bounded variation: assembles the full
/// right-hand side from the V-terms of the auxiliary derivative, the
/// growth term M 2^gamma (U((t-x)^{2s}; x))^{gamma/(2s)}, and the
/// one-sided-derivative point terms, and compares it with the measured
/// deviation |U(g;x) - g(x)|.  Requires x > 0.
bv_rate_report bv_rate_bound(const operator_params& p, const target_function& g,
                             double x, double growth_M = 1.0, double gamma = 1.0,
                             unsigned s_order = 1,
                             const series_policy& series = {},
                             std::size_t variation_points = 4001);

}  // namespace smd
