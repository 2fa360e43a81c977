#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace smd {

using sequence = std::function<double(std::int64_t)>;

/// Row-finite nonnegative summability matrix.  Built-in shapes: the
/// identity and the Cesaro C1 matrix whose row n averages the first n
/// sequence entries (indices 0..n-1).
class summability_matrix {
public:
    static summability_matrix identity();
    static summability_matrix cesaro_c1();
    /// Explicit rows: rows[n] lists (column, weight) pairs.
    static summability_matrix custom(
        std::vector<std::vector<std::pair<std::int64_t, double>>> rows);

    /// Weighted row sum  sum_i a_{n i} seq(i).
    double transform(const sequence& seq, std::int64_t row) const;

    /// sum of a_{n i} over entries with |seq(i) - sigma| >= eps.
    double mass(const sequence& seq, std::int64_t row, double sigma,
                double eps) const;

    /// Row sum (1 for the regular built-ins).
    double row_sum(std::int64_t row) const;

    bool is_custom() const { return kind_ == kind_t::custom; }

private:
    enum class kind_t { identity, cesaro, custom } kind_ = kind_t::identity;
    std::vector<std::vector<std::pair<std::int64_t, double>>> rows_;

    template <typename Fn>
    void for_row(std::int64_t row, Fn&& fn) const;
};

double a_transform(const summability_matrix& A, const sequence& seq,
                   std::int64_t row);

double stat_mass(const summability_matrix& A, const sequence& seq,
                 std::int64_t row, double sigma, double eps);

struct stat_check_row {
    std::uint32_t n = 0;
    double deviation_r1 = 0.0;  // || U(t; .) - x ||_w on the capped grid
    double deviation_r2 = 0.0;  // || U(t^2; .) - x^2 ||_w
    double envelope_r1 = 0.0;   // 1/n
    double envelope_r2 = 0.0;   // 2/n^2 + 5/(2n)
    bool within = false;
};

struct stat_check_report {
    std::vector<stat_check_row> rows;
    /// A-transform mass of the indicator {deviation_r2 > eps} at the last
    /// matrix row, for a caller-chosen eps; tends to 0 for convergent
    /// deviation sequences.
    double indicator_mass = 0.0;
    bool all_within = true;
};

/// Evaluates the weighted sup deviations of U(t^r; .) for r = 1, 2 with
/// alpha = 1/n at each listed n (weight w(x) = 1 + x^2, sup over a grid
/// on [0, cap]), checks them against their algebraic envelopes, and
/// reports the A-transform mass of the deviation indicator.
stat_check_report operator_stat_check(const summability_matrix& A,
                                      const std::vector<std::uint32_t>& ns,
                                      double cap = 50.0, double grid_step = 0.05,
                                      double indicator_eps = 1e-3);

}  // namespace smd
