#pragma once

#include <map>
#include <string>

#include "smd/operator.hpp"
#include "smd/params.hpp"
#include "smd/smoothness.hpp"
#include "smd/target_function.hpp"

namespace smd {

/// One evaluated bound theorem at a point: the certified bound, the
/// measured deviation |U(f;x) - f(x)|, and the ingredients that went into
/// the bound (moduli, moment values, free constants).
struct bound_report {
    std::string theorem;
    double x = 0.0;
    double bound = 0.0;
    double measured = 0.0;
    double measured_slack = 0.0;  // numerical error estimate of `measured`
    std::map<std::string, double> ingredients;

    bool dominates() const { return measured - measured_slack <= bound; }
};

/// Settings shared by the bound evaluations: the domain cap on which the
/// modulus surrogates are computed (grid suprema on [0, cap] lower-bound
/// the true suprema, so a reported domination is never an artifact of the
/// cap) and the free constants of the statements, all defaulting to 1.
struct bound_settings {
    double cap = 50.0;
    double constant_M = 1.0;   // direct_k / modified_lipschitz / bv multiplier
    double constant_N = 1.0;   // weighted growth constant N_f
    series_policy series;
    quadrature_policy quad;
};

/// M omega_2(f; sqrt(rho_n)) + omega(f; nu_n) with rho_n = Theta_2 + 1/n^2
/// and nu_n = Theta_1.
bound_report direct_k_bound(const operator_params& p, const target_function& f,
                            double x, const bound_settings& s = {});

/// kappa_r(f, x) Theta_2^{r/2} for f in the r-Lipschitz maximal class.
bound_report lipschitz_maximal_bound(const operator_params& p,
                                     const target_function& f, double x, double r,
                                     const bound_settings& s = {});

/// M (Theta_2 / (x (x lambda1 + lambda2)))^{s/2} for the modified
/// Lipschitz class; requires x > 0.
bound_report modified_lipschitz_bound(const operator_params& p,
                                      const target_function& f, double x,
                                      double exponent_s, double lambda1,
                                      double lambda2, const bound_settings& s = {});

/// 5 { omega(f, sqrt(Theta_2)) + (13/10) omega_2(f, sqrt(Theta_2)) }.
bound_report steklov_bound(const operator_params& p, const target_function& f,
                           double x, const bound_settings& s = {});

/// 4 N_f (1 + x^2) Theta_2 + 2 omega_{l+1}(g; sqrt(Theta_2)) for functions
/// of polynomial growth; omega_{l+1} is the first modulus on [0, l+1] and
/// x must not exceed l.
bound_report weighted_growth_bound(const operator_params& p,
                                   const target_function& f, double x, double l,
                                   const bound_settings& s = {});

/// n |U(g;x) - g(x) - g'(x) Theta_1 - g''(x)/2 Theta_2|; identically the
/// scaled third-order remainder, and exactly 0 for quadratics.
bound_report voronovskaya_residual(const operator_params& p,
                                   const target_function& g, double x,
                                   const bound_settings& s = {});

/// n (U(fg;x) - U(f;x) U(g;x)) against the limit 2 x f'(x) g'(x); for
/// f = g = t the quantity equals (1 + 2nx + n^2 x alpha)/n exactly.
bound_report gruss_quantity(const operator_params& p, const target_function& f,
                            const target_function& g,
                            const target_function& fg, double x,
                            const bound_settings& s = {});

}  // namespace smd
