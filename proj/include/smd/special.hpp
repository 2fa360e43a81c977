#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace smd {

/// Compensated (Neumaier) accumulator for long sums of doubles.
class kahan_sum {
public:
    void add(double v) {
        double t = s_ + v;
        if (std::abs(s_) >= std::abs(v))
            c_ += (s_ - t) + v;
        else
            c_ += (v - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/// log(z^i e^{-z} / i!) evaluated without forming the factorial.
double log_poisson_pmf(std::int64_t i, double z);

/// Regularized lower incomplete gamma P(k, z) for integer shape k >= 1,
/// i.e. the CDF at z of a Gamma(k, 1) variable.  Computed from the Poisson
/// tail identity P(k, z) = 1 - e^{-z} sum_{j<k} z^j/j! with the sum taken
/// in a mode-seeded sweep so large z does not underflow term by term.
double gamma_p_integer(std::int64_t k, double z);

/// Batched variant: returns P(k, z) for every k = 1..kmax in one O(kmax)
/// pass.  out[k-1] = P(k, z).
std::vector<double> gamma_p_integer_prefix(std::int64_t kmax, double z);

/// Central moments mu_0..mu_m of a Gamma(shape a, rate n) variable, from
/// its cumulants kappa_r = a (r-1)! / n^r via the standard recursion
/// mu_r = sum_{k>=2} C(r-1, k-1) kappa_k mu_{r-k}.
std::vector<double> gamma_central_moments(double shape, double rate, int m);

/// Binomial coefficient C(n, k) as a double (exact for the small orders
/// used here).
double binomial(int n, int k);

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1].
struct gauss_rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const gauss_rule& gauss_legendre(std::uint32_t points);

}  // namespace smd
