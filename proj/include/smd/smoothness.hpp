#pragma once

#include <functional>
#include <string>

namespace smd {

using real_function = std::function<double(double)>;

struct interval {
    double lo = 0.0;
    double hi = 1.0;
    double length() const { return hi - lo; }
};

/// Result of a grid-based modulus estimate.  Grid suprema approach the
/// true modulus from below as the resolution shrinks.
struct modulus_estimate {
    std::string kind;
    double delta = 0.0;
    double value = 0.0;
    double grid_resolution = 0.0;
};

/// First modulus of continuity: sup |f(x+h) - f(x)| over 0 <= h <= delta
/// with x, x+h in the domain.  Requires resolution <= delta / 10.
modulus_estimate omega1(const real_function& f, double delta,
                        const interval& domain, double resolution);

/// Second modulus: sup |f(x+2h) - 2 f(x+h) + f(x)| over 0 <= h <= delta,
/// x, x+2h in the domain.  Requires resolution <= delta / 10.
modulus_estimate omega2(const real_function& f, double delta,
                        const interval& domain, double resolution);

/// Steklov mean
///   G_h(x) = (1/h^2) int int_{[-h/2,h/2]^2} [2 g(x+k+l) - g(x+2(k+l))] dk dl,
/// evaluated by a tensor Gauss-Legendre rule; reproduces affine g exactly
/// and maps t^2 to x^2 - h^2/3.
double steklov_mean(const real_function& g, double x, double h);

struct steklov_check_report {
    double sup_distance = 0.0;        // || G_h - g ||
    double sup_first_derivative = 0.0;
    double sup_second_derivative = 0.0;
    double omega_value = 0.0;         // omega(g, h)
    double omega2_value = 0.0;        // omega_2(g, h)
    bool distance_ok = false;         // sup_distance <= omega2
    bool first_ok = false;            // sup D1 <= 5 omega / h
    bool second_ok = false;           // sup D2 <= 9 omega2 / h^2
    bool all_ok() const { return distance_ok && first_ok && second_ok; }
};

/// Checks the three Steklov inequalities on a grid over the domain
/// interior; derivatives of G_h are taken by central differences with
/// step h/100.
steklov_check_report steklov_inequalities_check(const real_function& g, double h,
                                                const interval& domain,
                                                double resolution);

/// Lipschitz-type maximal function kappa_r(f, x) = sup_{s != x}
/// |f(s) - f(x)| / |s - x|^r, grid supremum over s in the domain.
double lipschitz_maximal(const real_function& f, double x, double r,
                         const interval& domain, double resolution);

/// Weighted modulus Delta(g; xi) = sup_{0 <= h <= xi, x in [0, cap]}
/// |g(x+h) - g(x)| / ((1 + h^2)(1 + x^2)).
modulus_estimate weighted_modulus(const real_function& g, double xi, double cap,
                                  double resolution);

}  // namespace smd
