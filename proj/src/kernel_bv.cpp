#include "smd/kernel_bv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "smd/basis.hpp"
#include "smd/moments.hpp"
#include "smd/operator.hpp"
#include "smd/special.hpp"

namespace smd {

double kernel_density(const operator_params& p, double x, double t,
                      const series_policy& series) {
    if (!(t >= 0.0)) throw std::invalid_argument("kernel_density: t >= 0");
    const double n = static_cast<double>(p.n);
    const basis_weight_set set = basis_weights_truncated(p, x, series);
    kahan_sum acc;
    for (std::size_t k = 0; k < set.weights.size(); ++k) {
        const double lw = set.log_weights[k];
        if (lw == -std::numeric_limits<double>::infinity()) continue;
        acc.add(std::exp(lw + log_poisson_pmf(static_cast<std::int64_t>(k), n * t)));
    }
    return n * acc.value();
}

double kernel_cdf(const operator_params& p, double x, double y,
                  const series_policy& series) {
    if (y <= 0.0) return 0.0;
    const double n = static_cast<double>(p.n);
    const basis_weight_set set = basis_weights_truncated(p, x, series);
    const auto prefix = gamma_p_integer_prefix(
        static_cast<std::int64_t>(set.weights.size()), n * y);
    kahan_sum acc;
    for (std::size_t k = 0; k < set.weights.size(); ++k)
        acc.add(set.weights[k] * prefix[k]);
    return std::min(1.0, acc.value());
}

std::vector<tail_lemma_report> lemma_l3_check(const operator_params& p, double x,
                                              const std::vector<double>& offsets,
                                              const series_policy& series) {
    if (!(x > 0.0)) throw std::invalid_argument("lemma_l3_check: x > 0");
    const double n = static_cast<double>(p.n);
    const double eta2 = x + 1.0 / n;
    std::vector<tail_lemma_report> out;
    for (double d : offsets) {
        if (!(d > 0.0))
            throw std::invalid_argument("lemma_l3_check: offsets must be > 0");
        const double bound = 3.0 * eta2 / (n * d * d);
        if (x - d >= 0.0) {
            tail_lemma_report r;
            r.y = x - d;
            r.cdf_value = kernel_cdf(p, x, x - d, series);
            r.bound = bound;
            r.holds = r.cdf_value <= bound;
            out.push_back(r);
        }
        tail_lemma_report r;
        r.y = x + d;
        r.cdf_value = 1.0 - kernel_cdf(p, x, x + d, series);
        r.bound = bound;
        r.holds = r.cdf_value <= bound;
        out.push_back(r);
    }
    return out;
}

double total_variation(const std::vector<double>& values) {
    double v = 0.0;
    for (std::size_t k = 1; k < values.size(); ++k)
        v += std::abs(values[k] - values[k - 1]);
    return v;
}

double total_variation(const std::function<double(double)>& g, double a, double b,
                       std::size_t points) {
    if (!(b >= a) || points < 2)
        throw std::invalid_argument("total_variation: need b >= a, points >= 2");
    if (a == b) return 0.0;
    double v = 0.0;
    double prev = g(a);
    for (std::size_t k = 1; k < points; ++k) {
        const double t =
            a + (b - a) * static_cast<double>(k) / static_cast<double>(points - 1);
        const double cur = g(t);
        v += std::abs(cur - prev);
        prev = cur;
    }
    return v;
}

double one_sided_limit(const std::function<double(double)>& g, double x,
                       bool from_right, double h0) {
    // Two Richardson levels over h, h/2, h/4 on the linear-in-h expansion
    // of g(x +- h).
    const double s = from_right ? 1.0 : -1.0;
    const double f1 = g(x + s * h0);
    const double f2 = g(x + s * h0 / 2.0);
    const double f3 = g(x + s * h0 / 4.0);
    const double r1 = 2.0 * f2 - f1;
    const double r2 = 2.0 * f3 - f2;
    return r2 + (r2 - r1) / 3.0;
}

std::function<double(double)> aux_function(const std::function<double(double)>& g,
                                           double x, double g_left, double g_right) {
    return [g, x, g_left, g_right](double t) {
        if (t < x) return g(t) - g_left;
        if (t > x) return g(t) - g_right;
        return 0.0;
    };
}

namespace {

// One-sided derivative via Richardson on one-sided difference quotients.
double one_sided_derivative(const std::function<double(double)>& g, double x,
                            double gx, bool from_right, double h0 = 1e-4) {
    const double s = from_right ? 1.0 : -1.0;
    auto quot = [&](double h) { return (g(x + s * h) - gx) / (s * h); };
    const double d1 = quot(h0);
    const double d2 = quot(h0 / 2.0);
    const double d3 = quot(h0 / 4.0);
    const double r1 = 2.0 * d2 - d1;
    const double r2 = 2.0 * d3 - d2;
    return r2 + (r2 - r1) / 3.0;
}

}  // namespace

bv_rate_report bv_rate_bound(const operator_params& p, const target_function& g,
                             double x, double growth_M, double gamma,
                             unsigned s_order, const series_policy& series,
                             std::size_t variation_points) {
    if (!(x > 0.0)) throw std::invalid_argument("bv_rate_bound: requires x > 0");
    if (s_order < 1) throw std::invalid_argument("bv_rate_bound: s_order >= 1");
    const double n = static_cast<double>(p.n);
    const double eta2 = x + 1.0 / n;
    const double E = 3.0 * eta2 / n;

    const double gx = g(x);
    double d_right, d_left;
    if (g.has_derivatives()) {
        d_right = g.derivative(x);
        d_left = d_right;
    } else {
        auto call = [&g](double t) { return g(t); };
        d_right = one_sided_derivative(call, x, gx, true);
        d_left = one_sided_derivative(call, x, gx, false);
    }

    // Derivative of the auxiliary function: g'(t) - g'(x+-) on each side,
    // 0 at x.  Central differences never straddle x.
    auto gx_prime = [&](double t) -> double {
        if (t == x) return 0.0;
        double base;
        if (g.has_derivatives()) {
            base = g.derivative(t);
        } else {
            double h = std::max(1e-7, 1e-7 * std::abs(t));
            h = std::min(h, std::abs(t - x) / 2.0);
            base = (g(t + h) - g(t - h)) / (2.0 * h);
        }
        return t > x ? base - d_right : base - d_left;
    };

    bv_rate_report rep;
    const double rn = std::sqrt(n);
    rep.near_terms =
        (x / rn) * (total_variation(gx_prime, std::max(0.0, x - x / rn), x,
                                    variation_points) +
                    total_variation(gx_prime, x, x + x / rn, variation_points));
    const auto lmax_left = static_cast<std::int64_t>(std::floor(rn));
    for (std::int64_t l = 1; l <= lmax_left; ++l)
        rep.left_sum += total_variation(
            gx_prime, std::max(0.0, x - x / static_cast<double>(l)), x,
            variation_points);
    rep.left_sum *= E;
    const auto lmax_right = static_cast<std::int64_t>(std::floor(std::sqrt(n * x)));
    for (std::int64_t l = 1; l <= lmax_right; ++l)
        rep.right_sum += total_variation(
            gx_prime, x, x + x / static_cast<double>(l), variation_points);
    rep.right_sum *= E;

    const double even_moment = central_moment_numeric(p, x, 2 * s_order, series);
    rep.growth_term = growth_M * std::pow(2.0, gamma) *
                      std::pow(even_moment, gamma / (2.0 * s_order));

    const double jump = std::abs(d_right - d_left);
    rep.point_terms = (E / (x * x)) * std::abs(g(2.0 * x) - gx - x * d_right) +
                      3.0 * std::abs(gx) * eta2 / (n * x * x) +
                      std::abs(d_right) * std::sqrt(3.0 / n) * std::sqrt(eta2) +
                      0.5 * std::sqrt(3.0 / n) * std::sqrt(eta2) * jump +
                      jump / (2.0 * n);

    rep.bound = rep.near_terms + rep.left_sum + rep.right_sum + rep.growth_term +
                rep.point_terms;

    const eval_result ev = apply(p, g, x, series);
    rep.measured = std::abs(ev.value - gx);
    rep.measured_slack = ev.error_estimate();
    return rep;
}

}  // namespace smd
