#include "smd/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "smd/special.hpp"

namespace smd {

namespace {

void check_x(double x) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("basis: x must be finite and >= 0");
}

// sum_{j<i} log(x + j alpha), written as i log x + sum log1p(j alpha / x)
// so that alpha << x costs no accuracy.
double rising_log_sum(double x, double alpha, std::int64_t i) {
    kahan_sum s;
    for (std::int64_t j = 1; j < i; ++j)
        s.add(std::log1p(static_cast<double>(j) * alpha / x));
    return static_cast<double>(i) * std::log(x) + s.value();
}

}  // namespace

double log_basis_weight(const operator_params& p, double x, std::int64_t i) {
    check_x(x);
    if (i < 0) throw std::invalid_argument("basis: i must be >= 0");
    const double n = static_cast<double>(p.n);
    if (x == 0.0)
        return i == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (p.poisson_limit())
        return log_poisson_pmf(i, n * x);

    const double a = p.alpha;
    const double head = -(x / a) * std::log1p(n * a) -
                        static_cast<double>(i) * std::log(a + 1.0 / n) -
                        std::lgamma(static_cast<double>(i) + 1.0);
    if (i == 0) return head;
    // Rising product x^(i,-alpha): direct log sum keeps full precision for
    // the index ranges seen here; the log-Gamma identity
    // alpha^i Gamma(x/a + i)/Gamma(x/a) takes over when the sum would be
    // too long.
    const double c = x / a;
    double rising;
    if (i > 200000 && c + static_cast<double>(i) < 1e15) {
        rising = static_cast<double>(i) * std::log(a) +
                 std::lgamma(c + static_cast<double>(i)) - std::lgamma(c);
    } else {
        rising = rising_log_sum(x, a, i);
    }
    return head + rising;
}

double basis_weight(const operator_params& p, double x, std::int64_t i) {
    return std::exp(log_basis_weight(p, x, i));
}

basis_weight_set basis_weights_truncated(const operator_params& p, double x,
                                         const series_policy& policy) {
    check_x(x);
    if (!(policy.eps_tail > 0.0) || policy.i_cap < 1)
        throw std::invalid_argument("series_policy: eps_tail > 0, i_cap >= 1");

    basis_weight_set set;
    if (x == 0.0) {
        set.weights = {1.0};
        set.log_weights = {0.0};
        set.mass = 1.0;
        set.tail_bound = 0.0;
        return set;
    }

    const double n = static_cast<double>(p.n);
    const double a = p.poisson_limit() ? 0.0 : p.alpha;
    const double step = a + 1.0 / n;
    const double mean = n * x;

    // Seed the two-sided linear recurrence at the series mode; everything
    // to the left of the mode is filled by the downward ratio, everything
    // to the right grows until the stop rule fires.
    const std::int64_t i0 =
        std::min<std::int64_t>(static_cast<std::int64_t>(mean),
                               policy.i_cap);
    set.weights.assign(static_cast<std::size_t>(i0) + 1, 0.0);
    set.weights[static_cast<std::size_t>(i0)] =
        std::exp(log_basis_weight(p, x, i0));
    for (std::int64_t i = i0; i > 0; --i) {
        const double w = set.weights[static_cast<std::size_t>(i)];
        set.weights[static_cast<std::size_t>(i - 1)] =
            w * static_cast<double>(i) * step /
            (x + static_cast<double>(i - 1) * a);
    }

    kahan_sum mass;
    for (const double w : set.weights) mass.add(w);

    double w = set.weights.back();
    std::int64_t i = i0;
    while (true) {
        const bool past_mean = static_cast<double>(i) > mean;
        if (past_mean && mass.value() >= 1.0 - policy.eps_tail) break;
        // Once a weight sits below double resolution relative to the mass
        // already accumulated, no downstream sum can move any further.  This
        // also catches weights that round-to-nearest pins at the smallest
        // subnormal (decay ratios above 1/2 never reach exact zero), which
        // would otherwise spin the loop to the cap whenever the rounded mass
        // settles a few ulps short of the requested target.
        if (past_mean && w <= mass.value() * 1e-18) break;
        if (i >= policy.i_cap)
            throw truncation_error(
                "basis_weights_truncated: i_cap reached before tail tolerance",
                mass.value(), i + 1);
        w *= (x + static_cast<double>(i) * a) /
             (static_cast<double>(i + 1) * step);
        ++i;
        set.weights.push_back(w);
        mass.add(w);
    }

    set.log_weights.resize(set.weights.size());
    for (std::size_t k = 0; k < set.weights.size(); ++k)
        set.log_weights[k] = std::log(set.weights[k]);
    set.mass = mass.value();
    set.tail_bound = std::max(0.0, 1.0 - set.mass);
    return set;
}

}  // namespace smd
