#pragma once

#include <cstdint>
#include <vector>

#include "smd/basis.hpp"
#include "smd/params.hpp"
#include "smd/target_function.hpp"

namespace smd {

/// integral_0^inf e^{-nu} (nu)^i / i! * u^m du  ==  (i+m)! / (i! n^{m+1});
/// the per-term operator expectation of u^m is n times this.  The
/// telescoped product (1/n) prod_{k<=m} (i+k)/n keeps every intermediate
/// on the scale of the result.
double kernel_integral(std::uint32_t n, std::int64_t i, unsigned m);

struct eval_result {
    double value = 0.0;
    /// Upper estimate of the dropped series tail's contribution.
    double tail_estimate = 0.0;
    /// Upper estimate of the quadrature error (0 for analytic kinds).
    double quadrature_estimate = 0.0;
    /// Set when a sampled function was integrated past its last abscissa
    /// under the constant continuation.
    bool constant_extension_used = false;

    double error_estimate() const { return tail_estimate + quadrature_estimate; }
};

/// Expectation of f under the Gamma(i+1, rate n) kernel of term i, i.e.
/// n * integral e^{-nu}(nu)^i/i! f(u) du.  Closed forms cover the whole
/// built-in catalog; sampled and custom functions go through windowed
/// composite Gauss-Legendre quadrature.
double term_expectation(const operator_params& p, const target_function& f,
                        std::int64_t i, const quadrature_policy& quad = {},
                        double* quad_residual = nullptr,
                        bool* extension_used = nullptr);

/// Full operator value at x: the weighted series of term expectations.
/// Throws std::domain_error when f grows like e^{At} too fast for the
/// series to converge (requires A * (1 + n alpha) < n).
eval_result apply(const operator_params& p, const target_function& f, double x,
                  const series_policy& series = {},
                  const quadrature_policy& quad = {});

/// apply() over a grid of x values.  Cells are evaluated concurrently
/// (SMD_THREADS env var overrides the thread count); the first failing
/// cell, in index order, aborts the evaluation with its index attached.
std::vector<eval_result> apply_grid(const operator_params& p,
                                    const target_function& f,
                                    const std::vector<double>& xs,
                                    const series_policy& series = {},
                                    const quadrature_policy& quad = {});

}  // namespace smd
