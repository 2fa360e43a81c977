#include "smd/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "smd/special.hpp"

namespace smd {

namespace {

void check_modulus_args(double delta, const interval& domain, double resolution) {
    if (!(delta > 0.0))
        throw std::invalid_argument("modulus: delta must be > 0");
    if (!(domain.hi > domain.lo))
        throw std::invalid_argument("modulus: empty domain");
    if (!(resolution > 0.0) || resolution > delta / 10.0)
        throw std::invalid_argument(
            "modulus: resolution must be positive and <= delta/10");
}

// h samples: multiples of the resolution, with delta itself always
// included so differences at the full step are never missed.
std::vector<double> h_grid(double delta, double resolution) {
    std::vector<double> hs;
    for (double h = resolution; h < delta; h += resolution) hs.push_back(h);
    hs.push_back(delta);
    return hs;
}

}  // namespace

modulus_estimate omega1(const real_function& f, double delta,
                        const interval& domain, double resolution) {
    check_modulus_args(delta, domain, resolution);
    double sup = 0.0;
    for (double h : h_grid(delta, resolution)) {
        const double xmax = domain.hi - h;
        for (double x = domain.lo; x <= xmax; x += resolution)
            sup = std::max(sup, std::abs(f(x + h) - f(x)));
    }
    return {"omega1", delta, sup, resolution};
}

modulus_estimate omega2(const real_function& f, double delta,
                        const interval& domain, double resolution) {
    check_modulus_args(delta, domain, resolution);
    double sup = 0.0;
    for (double h : h_grid(delta, resolution)) {
        const double xmax = domain.hi - 2.0 * h;
        for (double x = domain.lo; x <= xmax; x += resolution)
            sup = std::max(sup, std::abs(f(x + 2.0 * h) - 2.0 * f(x + h) + f(x)));
    }
    return {"omega2", delta, sup, resolution};
}

double steklov_mean(const real_function& g, double x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("steklov_mean: h must be > 0");
    const auto& rule = gauss_legendre(24);
    const double half = h / 2.0;
    kahan_sum acc;
    for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
        const double kappa = half * rule.nodes[a];
        for (std::size_t b = 0; b < rule.nodes.size(); ++b) {
            const double lambda = half * rule.nodes[b];
            const double s = kappa + lambda;
            acc.add(rule.weights[a] * rule.weights[b] *
                    (2.0 * g(x + s) - g(x + 2.0 * s)));
        }
    }
    // Jacobian (h/2)^2 for both axes against the 1/h^2 normalization.
    return acc.value() * 0.25;
}

steklov_check_report steklov_inequalities_check(const real_function& g, double h,
                                                const interval& domain,
                                                double resolution) {
    check_modulus_args(h, domain, resolution);
    steklov_check_report rep;
    rep.omega_value = omega1(g, h, domain, resolution).value;
    rep.omega2_value = omega2(g, h, domain, resolution).value;

    // G_h(x) samples x + 2(kappa+lambda), reaching 2h beyond x on both
    // sides; the difference step adds another h/100.  Stay inside.
    const double pad = 2.0 * h + h / 25.0;
    const double lo = domain.lo + pad;
    const double hi = domain.hi - pad;
    if (!(hi > lo))
        throw std::invalid_argument(
            "steklov_inequalities_check: domain too small for h padding");
    const double dstep = h / 100.0;
    for (double x = lo; x <= hi; x += resolution) {
        const double c = steklov_mean(g, x, h);
        const double p = steklov_mean(g, x + dstep, h);
        const double m = steklov_mean(g, x - dstep, h);
        rep.sup_distance = std::max(rep.sup_distance, std::abs(c - g(x)));
        rep.sup_first_derivative =
            std::max(rep.sup_first_derivative, std::abs((p - m) / (2.0 * dstep)));
        rep.sup_second_derivative = std::max(
            rep.sup_second_derivative, std::abs((p - 2.0 * c + m) / (dstep * dstep)));
    }
    rep.distance_ok = rep.sup_distance <= rep.omega2_value + 1e-12;
    rep.first_ok = rep.sup_first_derivative <= 5.0 * rep.omega_value / h + 1e-9;
    rep.second_ok =
        rep.sup_second_derivative <= 9.0 * rep.omega2_value / (h * h) + 1e-9;
    return rep;
}

double lipschitz_maximal(const real_function& f, double x, double r,
                         const interval& domain, double resolution) {
    if (!(r > 0.0) || r > 1.0)
        throw std::invalid_argument("lipschitz_maximal: need 0 < r <= 1");
    if (!(resolution > 0.0) || !(domain.hi > domain.lo))
        throw std::invalid_argument("lipschitz_maximal: bad grid");
    const double fx = f(x);
    double sup = 0.0;
    for (double s = domain.lo; s <= domain.hi; s += resolution) {
        const double d = std::abs(s - x);
        if (d < resolution / 2.0) continue;
        sup = std::max(sup, std::abs(f(s) - fx) / std::pow(d, r));
    }
    return sup;
}

modulus_estimate weighted_modulus(const real_function& g, double xi, double cap,
                                  double resolution) {
    if (!(xi > 0.0) || !(cap > 0.0))
        throw std::invalid_argument("weighted_modulus: xi, cap must be > 0");
    if (!(resolution > 0.0) || resolution > xi / 10.0)
        throw std::invalid_argument(
            "weighted_modulus: resolution must be positive and <= xi/10");
    double sup = 0.0;
    for (double h : h_grid(xi, resolution)) {
        const double wh = 1.0 + h * h;
        for (double x = 0.0; x <= cap; x += resolution) {
            const double v =
                std::abs(g(x + h) - g(x)) / (wh * (1.0 + x * x));
            sup = std::max(sup, v);
        }
    }
    return {"weighted", xi, sup, resolution};
}

}  // namespace smd
