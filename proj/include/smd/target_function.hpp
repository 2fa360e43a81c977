#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace smd {

enum class growth_class { bounded, polynomial, exponential };

/// Tagged description of a target function f on [0, inf).  The operator
/// core keys per-term closed forms off `kind`; anything it does not
/// recognize analytically falls back to windowed quadrature.
///
/// Growth metadata drives admissibility: exponential-growth functions
/// record their rate A and may only be fed to an operator instance whose
/// series still converges against e^{At}.
class target_function {
public:
    enum class kind_t {
        monomial,     // t^m
        polynomial,   // sum_k c_k t^k
        exp_decay,    // e^{-c t}, c > 0
        x2_sin_pi,    // t^2 sin(pi t)
        x_exp_m7,     // t e^{-7 t}
        quad_exp,     // (t^2 + 1) e^t
        sampled,      // piecewise-linear through sample points
        custom,       // arbitrary callable, quadrature only
    };

    static target_function monomial(unsigned m);
    static target_function polynomial(std::vector<double> coeffs);
    static target_function exp_decay(double c);
    static target_function x2_sin_pi();
    static target_function x_exp_m7();
    static target_function quad_exp();
    static target_function sampled(std::vector<double> xs, std::vector<double> ys);
    static target_function custom(std::function<double(double)> f, growth_class g,
                                  double rate_or_order, std::string name = "custom");

    /// Parses CLI-style names: "t^2", "poly:1,0,3", "exp_decay:2",
    /// "x2_sin_pi", "x_exp_m7", "quad_exp".
    static target_function from_name(const std::string& name);

    double operator()(double t) const;

    kind_t kind() const { return kind_; }
    growth_class growth() const { return growth_; }
    /// Exponential rate A for exponential growth, polynomial order s for
    /// polynomial growth, 0 for bounded.
    double growth_rate() const { return growth_rate_; }
    const std::string& name() const { return name_; }

    unsigned monomial_degree() const { return monomial_m_; }
    const std::vector<double>& coefficients() const { return coeffs_; }
    double decay_rate() const { return decay_c_; }
    const std::vector<double>& sample_xs() const { return sample_xs_; }
    const std::vector<double>& sample_ys() const { return sample_ys_; }

    /// True when evaluation at t used the constant continuation past the
    /// last sample abscissa (sampled kind only).
    bool extends_beyond_samples(double t) const;

    bool has_derivatives() const { return static_cast<bool>(d1_); }
    double derivative(double t) const;
    double second_derivative(double t) const;

private:
    target_function() = default;

    kind_t kind_ = kind_t::custom;
    growth_class growth_ = growth_class::bounded;
    double growth_rate_ = 0.0;
    std::string name_;

    unsigned monomial_m_ = 0;
    std::vector<double> coeffs_;
    double decay_c_ = 0.0;
    std::vector<double> sample_xs_, sample_ys_;
    std::function<double(double)> eval_;
    std::function<double(double)> d1_, d2_;
};

}  // namespace smd
