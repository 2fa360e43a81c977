#include "smd/operator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "smd/parallel.hpp"
#include "smd/special.hpp"

namespace smd {

double kernel_integral(std::uint32_t n, std::int64_t i, unsigned m) {
    if (n < 1 || i < 0)
        throw std::invalid_argument("kernel_integral: n >= 1, i >= 0");
    const double nd = static_cast<double>(n);
    double v = 1.0 / nd;
    for (unsigned k = 1; k <= m; ++k)
        v *= (static_cast<double>(i) + static_cast<double>(k)) / nd;
    return v;
}

namespace {

// Per-term expectation in the log domain: value = sign * exp(log_abs).
struct log_term {
    double log_abs;
    double sign;
};

log_term monomial_term(std::uint32_t n, std::int64_t i, unsigned m) {
    double log_abs = -static_cast<double>(m) * std::log(static_cast<double>(n));
    for (unsigned k = 1; k <= m; ++k)
        log_abs += std::log(static_cast<double>(i) + static_cast<double>(k));
    return {log_abs, 1.0};
}

double poly_term(std::uint32_t n, std::int64_t i, const std::vector<double>& c) {
    double v = 0.0;
    double mono = 1.0;  // (i+1)...(i+k) / n^k, built incrementally
    const double nd = static_cast<double>(n);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0)
            mono *= (static_cast<double>(i) + static_cast<double>(k)) / nd;
        v += c[k] * mono;
    }
    return v;
}

log_term exp_decay_term(std::uint32_t n, std::int64_t i, double c) {
    const double nd = static_cast<double>(n);
    return {static_cast<double>(i + 1) * (std::log(nd) - std::log(nd + c)), 1.0};
}

log_term x_exp_m7_term(std::uint32_t n, std::int64_t i) {
    const double nd = static_cast<double>(n);
    double log_abs = static_cast<double>(i + 1) * (std::log(nd) - std::log(nd + 7.0)) +
                     std::log(static_cast<double>(i + 1)) - std::log(nd + 7.0);
    return {log_abs, 1.0};
}

log_term quad_exp_term(std::uint32_t n, std::int64_t i) {
    const double nd = static_cast<double>(n);
    const double d = nd - 1.0;
    const double poly = (static_cast<double>(i) + 2.0) *
                            (static_cast<double>(i) + 1.0) / (d * d) +
                        1.0;
    return {static_cast<double>(i + 1) * (std::log(nd) - std::log(d)) +
                std::log(poly),
            1.0};
}

log_term x2_sin_pi_term(std::uint32_t n, std::int64_t i) {
    // n Int e^{-nu}(nu)^i/i! u^2 sin(pi u) du
    //   = (i+2)(i+1) n^{i+1} Im[(n - i*pi)^{-(i+3)}]
    // with n - i*pi = R e^{-i theta}, R = hypot(n, pi), theta = atan2(pi, n).
    const double nd = static_cast<double>(n);
    const double R = std::hypot(nd, M_PI);
    const double theta = std::atan2(M_PI, nd);
    const double s = std::sin(static_cast<double>(i + 3) * theta);
    double log_abs = std::log((static_cast<double>(i) + 2.0) *
                              (static_cast<double>(i) + 1.0)) +
                     static_cast<double>(i + 1) * std::log(nd) -
                     static_cast<double>(i + 3) * std::log(R) +
                     std::log(std::abs(s));
    return {log_abs, s < 0.0 ? -1.0 : 1.0};
}

double quadrature_term(const operator_params& p, const target_function& f,
                       std::int64_t i, const quadrature_policy& quad,
                       double* residual, bool* extension_used) {
    quad.validate();
    const double nd = static_cast<double>(p.n);
    const double shape = static_cast<double>(i + 1);
    const double mu = shape / nd;
    const double sigma = std::sqrt(shape) / nd;
    // For small shapes the Gamma right tail is much heavier than its sigma
    // suggests (shape 1 keeps e^{-11} beyond mu + 10 sigma), so pad the
    // window by a fixed number of rate units on top of the sigma rule.
    const double w_sig = quad.window_sigmas + 30.0 / std::sqrt(shape);
    const double lo = std::max(0.0, mu - w_sig * sigma);
    const double hi = mu + w_sig * sigma;
    const auto& rule = gauss_legendre(quad.nodes_per_panel);
    const double lgi = std::lgamma(static_cast<double>(i) + 1.0);

    kahan_sum acc;
    double fmax = 0.0;
    const double panel_width = (hi - lo) / static_cast<double>(quad.panels);
    for (std::uint32_t pnl = 0; pnl < quad.panels; ++pnl) {
        const double a = lo + panel_width * pnl;
        const double half = 0.5 * panel_width;
        const double mid = a + half;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double u = mid + half * rule.nodes[k];
            double log_density;
            if (u <= 0.0) {
                log_density = i == 0 ? std::log(nd)
                                     : -std::numeric_limits<double>::infinity();
            } else {
                log_density = std::log(nd) + static_cast<double>(i) * std::log(nd * u) -
                              nd * u - lgi;
            }
            const double fu = f(u);
            fmax = std::max(fmax, std::abs(fu));
            acc.add(half * rule.weights[k] * std::exp(log_density) * fu);
        }
    }
    if (extension_used && f.extends_beyond_samples(hi)) *extension_used = true;
    if (residual) {
        // Kernel mass outside the window, times the largest |f| seen, as a
        // conservative window-truncation residual (the rule's own error on
        // the smooth windowed integrand is far below this).
        const double inside = gamma_p_integer(i + 1, nd * hi) -
                              (lo > 0.0 ? gamma_p_integer(i + 1, nd * lo) : 0.0);
        *residual += std::max(0.0, 1.0 - inside) * fmax;
    }
    return acc.value();
}

bool analytic_kind(target_function::kind_t k) {
    using k_t = target_function::kind_t;
    return k == k_t::monomial || k == k_t::polynomial || k == k_t::exp_decay ||
           k == k_t::x2_sin_pi || k == k_t::x_exp_m7 || k == k_t::quad_exp;
}

log_term analytic_log_term(const operator_params& p, const target_function& f,
                           std::int64_t i) {
    using k_t = target_function::kind_t;
    switch (f.kind()) {
        case k_t::monomial:
            return monomial_term(p.n, i, f.monomial_degree());
        case k_t::polynomial: {
            const double v = poly_term(p.n, i, f.coefficients());
            return {std::log(std::abs(v)), v < 0.0 ? -1.0 : 1.0};
        }
        case k_t::exp_decay:
            return exp_decay_term(p.n, i, f.decay_rate());
        case k_t::x_exp_m7:
            return x_exp_m7_term(p.n, i);
        case k_t::quad_exp:
            return quad_exp_term(p.n, i);
        case k_t::x2_sin_pi:
            return x2_sin_pi_term(p.n, i);
        default:
            throw std::logic_error("analytic_log_term: not analytic");
    }
}

void check_growth(const operator_params& p, const target_function& f) {
    if (f.growth() != growth_class::exponential) return;
    const double nd = static_cast<double>(p.n);
    const double lhs = f.growth_rate() * (1.0 + nd * p.alpha);
    if (!(lhs < nd))
        throw std::domain_error(
            "apply: series against e^{At} diverges; need A(1+n alpha) < n "
            "(A=" + std::to_string(f.growth_rate()) + ", n=" + std::to_string(p.n) +
            ", alpha=" + std::to_string(p.alpha) + ")");
}

}  // namespace

double term_expectation(const operator_params& p, const target_function& f,
                        std::int64_t i, const quadrature_policy& quad,
                        double* quad_residual, bool* extension_used) {
    if (analytic_kind(f.kind())) {
        const log_term t = analytic_log_term(p, f, i);
        return t.sign * std::exp(t.log_abs);
    }
    double residual = 0.0;
    bool ext = false;
    const double v = quadrature_term(p, f, i, quad, &residual, &ext);
    if (quad_residual) *quad_residual += residual;
    if (extension_used && ext) *extension_used = true;
    return v;
}

eval_result apply(const operator_params& p, const target_function& f, double x,
                  const series_policy& series, const quadrature_policy& quad) {
    check_growth(p, f);
    // The weight set honors the caller's mass target; the summation below
    // then keeps extending the series until terms stop mattering, so loose
    // eps_tail settings degrade the reported tail estimate, not the value.
    series_policy tight = series;
    tight.eps_tail = std::min(series.eps_tail, 1e-15);
    const basis_weight_set set = basis_weights_truncated(p, x, tight);

    const bool analytic = analytic_kind(f.kind());
    eval_result out;
    kahan_sum sum;
    kahan_sum mass;
    double last_abs_term = 0.0, prev_abs_term = 0.0;
    double last_T = 0.0;
    for (std::size_t k = 0; k < set.weights.size(); ++k) {
        const std::int64_t i = static_cast<std::int64_t>(k);
        double term;
        if (analytic) {
            const log_term t = analytic_log_term(p, f, i);
            last_T = t.sign * std::exp(t.log_abs);
            term = t.sign * std::exp(set.log_weights[k] + t.log_abs);
        } else {
            last_T = quadrature_term(p, f, i, quad, &out.quadrature_estimate,
                                     &out.constant_extension_used);
            term = set.weights[k] * last_T;
        }
        sum.add(term);
        mass.add(set.weights[k]);
        prev_abs_term = last_abs_term;
        last_abs_term = std::abs(term);
    }

    // Extend past the mass stop while terms still move the sum.
    if (x > 0.0) {
        const double n = static_cast<double>(p.n);
        const double a = p.poisson_limit() ? 0.0 : p.alpha;
        const double step = a + 1.0 / n;
        std::int64_t i = set.max_index();
        double w = set.weights.back();
        int small_streak = 0;
        // Sign-oscillating kinds can produce an accidentally tiny term, so
        // only stop after several consecutive negligible terms.
        while (small_streak < 3 && w > 0.0) {
            if (last_abs_term <= 1e-17 * std::abs(sum.value()))
                ++small_streak;
            else
                small_streak = 0;
            if (small_streak >= 3) break;
            if (i >= series.i_cap)
                throw truncation_error("apply: i_cap reached before series settled",
                                       mass.value(), i + 1);
            w *= (x + static_cast<double>(i) * a) /
                 (static_cast<double>(i + 1) * step);
            ++i;
            double term;
            if (analytic) {
                const log_term t = analytic_log_term(p, f, i);
                last_T = t.sign * std::exp(t.log_abs);
                term = t.sign * std::exp(std::log(w) + t.log_abs);
            } else {
                last_T = quadrature_term(p, f, i, quad, &out.quadrature_estimate,
                                         &out.constant_extension_used);
                term = w * last_T;
            }
            sum.add(term);
            mass.add(w);
            prev_abs_term = last_abs_term;
            last_abs_term = std::abs(term);
        }
    }

    // The weights sum to one analytically, so the accumulated mass differs
    // from one only through the seed weight's rounding (which scales the
    // whole series, growing with lgamma's argument) and the truncated tail.
    // Dividing by the mass cancels the multiplicative part of that error.
    const double mass_v = mass.value();
    out.value = mass_v > 0.5 ? sum.value() / mass_v : sum.value();
    const double tail_mass = std::max(0.0, 1.0 - mass.value());
    // Geometric continuation of the last term plus the responsibility of
    // the unreached mass at the last term's expectation scale.
    double geo = 0.0;
    if (prev_abs_term > 0.0 && last_abs_term > 0.0) {
        const double rho = std::min(last_abs_term / prev_abs_term, 0.9);
        geo = last_abs_term * rho / (1.0 - rho);
    }
    out.tail_estimate = geo + tail_mass * std::abs(last_T);
    return out;
}

std::vector<eval_result> apply_grid(const operator_params& p,
                                    const target_function& f,
                                    const std::vector<double>& xs,
                                    const series_policy& series,
                                    const quadrature_policy& quad) {
    check_growth(p, f);
    std::vector<eval_result> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t k) {
        try {
            out[k] = apply(p, f, xs[k], series, quad);
        } catch (const std::exception& e) {
            throw std::runtime_error("apply_grid: cell " + std::to_string(k) +
                                     " (x=" + std::to_string(xs[k]) +
                                     ") failed: " + e.what());
        }
    });
    return out;
}

}  // namespace smd
