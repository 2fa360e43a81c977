#pragma once

#include <cstdint>
#include <vector>

#include "smd/params.hpp"

namespace smd {

/// Consecutive basis weights r_{n,0}(x) .. r_{n,imax}(x) together with the
/// accumulated mass and a conservative bound on the truncated tail.
struct basis_weight_set {
    std::vector<double> weights;      // index i -> r_{n,i}(x)
    std::vector<double> log_weights;  // same entries in the log domain
    double mass = 0.0;                // sum of stored weights
    double tail_bound = 0.0;          // 1 - mass, clamped at 0

    std::int64_t max_index() const {
        return static_cast<std::int64_t>(weights.size()) - 1;
    }
};

/// log r_{n,i}(x).  For alpha above the degenerate threshold this is
///   -(x/alpha) log(1+n alpha) - i log(alpha+1/n)
///   + sum_{j<i} log(x+j alpha) - log i!
/// with the rising sum routed through log-Gamma when x/alpha is moderate;
/// below the threshold the Poisson limit e^{-nx}(nx)^i/i! is used.
double log_basis_weight(const operator_params& p, double x, std::int64_t i);

/// r_{n,i}(x) = exp(log_basis_weight).
double basis_weight(const operator_params& p, double x, std::int64_t i);

/// Weights from i = 0 until the accumulated mass reaches 1 - eps_tail and
/// the index has passed the series mean n*x.  Throws truncation_error if
/// policy.i_cap is hit first.  The linear sweep is seeded at the series
/// mode so no intermediate value under- or overflows the recurrence.
basis_weight_set basis_weights_truncated(const operator_params& p, double x,
                                         const series_policy& policy = {});

}  // namespace smd
