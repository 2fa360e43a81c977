#include "smd/moments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "smd/basis.hpp"
#include "smd/special.hpp"

namespace smd {

double raw_moment(const operator_params& p, double x, unsigned m) {
    const double n = static_cast<double>(p.n);
    const double a = p.alpha;
    switch (m) {
        case 0:
            return 1.0;
        case 1:
            return (1.0 + n * x) / n;
        case 2:
            return (2.0 + 4.0 * n * x + n * n * x * x + n * n * x * a) / (n * n);
        case 3:
            return (6.0 + 18.0 * n * x + 9.0 * n * n * x * (x + a) +
                    n * n * n * x * (x * x + 3.0 * x * a + 2.0 * a * a)) /
                   (n * n * n);
        case 4:
            return (24.0 + 96.0 * n * x + 72.0 * n * n * x * (x + a) +
                    16.0 * n * n * n * x * (x * x + 3.0 * x * a + 2.0 * a * a) +
                    n * n * n * n * x *
                        (x * x * x + 6.0 * x * x * a + 11.0 * x * a * a +
                         6.0 * a * a * a)) /
                   (n * n * n * n);
        default:
            throw std::invalid_argument("raw_moment: closed forms cover m <= 4");
    }
}

double central_moment(const operator_params& p, double x, unsigned m) {
    const double n = static_cast<double>(p.n);
    const double a = p.alpha;
    switch (m) {
        case 1:
            return 1.0 / n;
        case 2:
            return (a * n * n * x + 2.0 * n * x + 2.0) / (n * n);
        case 3:
            return (2.0 * a * a * n * n * n * x + 9.0 * a * n * n * x +
                    12.0 * n * x + 6.0) /
                   (n * n * n);
        case 4:
            return (3.0 * a * a * n * n * n * n * x * (2.0 * a + x) +
                    4.0 * a * n * n * n * x * (8.0 * a + 3.0 * x) +
                    12.0 * n * n * x * (6.0 * a + x) + 72.0 * n * x + 24.0) /
                   (n * n * n * n);
        default:
            throw std::invalid_argument("central_moment: closed forms cover 1 <= m <= 4");
    }
}

double central_moment_numeric(const operator_params& p, double x, unsigned m,
                              const series_policy& policy) {
    if (m == 0) return 1.0;
    const double n = static_cast<double>(p.n);
    // E[(T-x)^m] for the index-i kernel term, expanded about the term mean
    // (i+1)/n so no large raw moments cancel.
    const auto term_value = [&](std::int64_t i) {
        const double shape = static_cast<double>(i) + 1.0;
        const auto mu = gamma_central_moments(shape, n, static_cast<int>(m));
        const double c = shape / n - x;  // term mean minus x
        double term = 0.0;
        double cpow = 1.0;  // c^{m-j}, built from j = m downward
        for (int j = static_cast<int>(m); j >= 0; --j) {
            term += binomial(static_cast<int>(m), j) * cpow *
                    mu[static_cast<std::size_t>(j)];
            cpow *= c;
        }
        return term;
    };

    series_policy tight = policy;
    tight.eps_tail = std::min(policy.eps_tail, 1e-15);
    const basis_weight_set set = basis_weights_truncated(p, x, tight);
    kahan_sum total;
    for (std::size_t k = 0; k < set.weights.size(); ++k) {
        if (set.weights[k] == 0.0) continue;
        total.add(set.weights[k] * term_value(static_cast<std::int64_t>(k)));
    }

    // The per-term value grows like ((i+1)/n - x)^m, so the tail left by the
    // mass stop can still move the sum; extend until the weighted terms are
    // negligible against the accumulated total several times in a row.
    if (x > 0.0) {
        const double a = p.poisson_limit() ? 0.0 : p.alpha;
        const double step = a + 1.0 / n;
        std::int64_t i = set.max_index();
        double w = set.weights.back();
        int small_streak = 0;
        while (small_streak < 3 && w > 0.0) {
            if (i >= policy.i_cap)
                throw truncation_error(
                    "central_moment_numeric: i_cap reached before series settled",
                    set.mass, i + 1);
            w *= (x + static_cast<double>(i) * a) /
                 (static_cast<double>(i + 1) * step);
            ++i;
            const double contrib = w * term_value(i);
            total.add(contrib);
            if (std::abs(contrib) <= 1e-17 * std::abs(total.value()))
                ++small_streak;
            else
                small_streak = 0;
        }
    }
    return total.value();
}

double eta(const operator_params& p, double x) {
    return std::sqrt(x + 1.0 / static_cast<double>(p.n));
}

moment_report moments_at(const operator_params& p, double x) {
    moment_report r;
    r.x = x;
    for (unsigned m = 0; m <= 4; ++m) r.raw.push_back(raw_moment(p, x, m));
    for (unsigned m = 1; m <= 4; ++m) r.central.push_back(central_moment(p, x, m));
    r.eta_value = eta(p, x);
    return r;
}

std::vector<asymptotic_row> asymptotic_check(std::uint32_t n, double x) {
    operator_params p(n, 1.0 / static_cast<double>(n));
    const double nd = static_cast<double>(n);
    std::vector<asymptotic_row> rows;
    auto push = [&](unsigned order, double scaled, double limit) {
        double gap = limit != 0.0
                         ? std::abs(scaled / limit - 1.0)
                         : std::numeric_limits<double>::infinity();
        rows.push_back({order, scaled, limit, gap});
    };
    push(1, nd * central_moment(p, x, 1), 1.0);
    push(2, nd * central_moment(p, x, 2), 3.0 * x);
    push(4, nd * nd * central_moment(p, x, 4), 27.0 * x * x);
    push(6, nd * nd * nd * central_moment_numeric(p, x, 6),
         405.0 * x * x * x);
    return rows;
}

}  // namespace smd
