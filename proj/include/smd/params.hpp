#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace smd {

/// Thrown when the weight series hits its index cap before reaching the
/// requested tail tolerance.  Carries the mass accumulated so far so the
/// caller can decide whether the partial sum is still usable.
class truncation_error : public std::runtime_error {
public:
    truncation_error(std::string what, double achieved_mass, std::int64_t terms)
        : std::runtime_error(std::move(what)),
          achieved_mass(achieved_mass),
          terms(terms) {}

    double achieved_mass;
    std::int64_t terms;
};

/// Parameters of one operator instance: the index n >= 1 and the step
/// parameter alpha with 0 <= alpha <= 1/n.  Below degenerate_alpha() the
/// weights are evaluated through their Poisson limit instead of the
/// alpha-form, which would otherwise divide by a vanishing alpha.
struct operator_params {
    operator_params(std::uint32_t n, double alpha) : n(n), alpha(alpha) {
        if (n < 1)
            throw std::invalid_argument("operator_params: n must be >= 1");
        if (!(alpha >= 0.0))
            throw std::invalid_argument("operator_params: alpha must be >= 0");
        if (alpha > 1.0 / static_cast<double>(n))
            throw std::invalid_argument(
                "operator_params: alpha must satisfy alpha <= 1/n, got alpha=" +
                std::to_string(alpha) + " with n=" + std::to_string(n));
    }

    std::uint32_t n;
    double alpha;

    double degenerate_alpha() const { return 1e-12 / static_cast<double>(n); }
    bool poisson_limit() const { return alpha < degenerate_alpha(); }
};

/// Truncation policy for the infinite weight series.  The series is cut
/// once the accumulated mass reaches 1 - eps_tail and the index has passed
/// the series mean n*x; i_cap bounds the index unconditionally.
struct series_policy {
    double eps_tail = 1e-12;
    std::int64_t i_cap = 4'000'000;
};

/// Quadrature policy for sampled target functions: a composite
/// Gauss-Legendre rule over a window of +-window_sigmas standard
/// deviations around each kernel term's mean.
struct quadrature_policy {
    std::uint32_t nodes_per_panel = 16;
    std::uint32_t panels = 8;
    double window_sigmas = 10.0;

    void validate() const {
        if (nodes_per_panel < 2 || panels < 1 || window_sigmas < 4.0)
            throw std::invalid_argument(
                "quadrature_policy: need nodes_per_panel >= 2, panels >= 1, "
                "window_sigmas >= 4");
    }
};

}  // namespace smd
