#include "smd/stat_conv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "smd/moments.hpp"
#include "smd/params.hpp"

namespace smd {

summability_matrix summability_matrix::identity() {
    summability_matrix m;
    m.kind_ = kind_t::identity;
    return m;
}

summability_matrix summability_matrix::cesaro_c1() {
    summability_matrix m;
    m.kind_ = kind_t::cesaro;
    return m;
}

summability_matrix summability_matrix::custom(
    std::vector<std::vector<std::pair<std::int64_t, double>>> rows) {
    for (const auto& row : rows)
        for (const auto& [col, w] : row)
            if (col < 0 || w < 0.0)
                throw std::invalid_argument(
                    "summability_matrix: columns >= 0, weights >= 0");
    summability_matrix m;
    m.kind_ = kind_t::custom;
    m.rows_ = std::move(rows);
    return m;
}

template <typename Fn>
void summability_matrix::for_row(std::int64_t row, Fn&& fn) const {
    switch (kind_) {
        case kind_t::identity:
            if (row < 0) throw std::out_of_range("summability_matrix: row < 0");
            fn(row, 1.0);
            return;
        case kind_t::cesaro: {
            if (row < 1)
                throw std::out_of_range("summability_matrix: cesaro rows start at 1");
            const double w = 1.0 / static_cast<double>(row);
            for (std::int64_t i = 0; i < row; ++i) fn(i, w);
            return;
        }
        case kind_t::custom: {
            if (row < 0 || row >= static_cast<std::int64_t>(rows_.size()))
                throw std::out_of_range("summability_matrix: row out of range");
            for (const auto& [col, w] : rows_[static_cast<std::size_t>(row)])
                fn(col, w);
            return;
        }
    }
}

double summability_matrix::transform(const sequence& seq, std::int64_t row) const {
    double s = 0.0;
    for_row(row, [&](std::int64_t i, double w) { s += w * seq(i); });
    return s;
}

double summability_matrix::mass(const sequence& seq, std::int64_t row, double sigma,
                                double eps) const {
    double s = 0.0;
    for_row(row, [&](std::int64_t i, double w) {
        if (std::abs(seq(i) - sigma) >= eps) s += w;
    });
    return s;
}

double summability_matrix::row_sum(std::int64_t row) const {
    double s = 0.0;
    for_row(row, [&](std::int64_t, double w) { s += w; });
    return s;
}

double a_transform(const summability_matrix& A, const sequence& seq,
                   std::int64_t row) {
    return A.transform(seq, row);
}

double stat_mass(const summability_matrix& A, const sequence& seq,
                 std::int64_t row, double sigma, double eps) {
    return A.mass(seq, row, sigma, eps);
}

namespace {

// Weighted sup deviations of the first two moment functions with
// alpha = 1/n; closed forms keep sweeps up to n = 10^4 cheap.
double deviation_r1(std::uint32_t n, double cap, double step) {
    operator_params p(n, 1.0 / static_cast<double>(n));
    double sup = 0.0;
    for (double x = 0.0; x <= cap; x += step)
        sup = std::max(sup, std::abs(raw_moment(p, x, 1) - x) / (1.0 + x * x));
    return sup;
}

double deviation_r2(std::uint32_t n, double cap, double step) {
    operator_params p(n, 1.0 / static_cast<double>(n));
    double sup = 0.0;
    for (double x = 0.0; x <= cap; x += step)
        sup = std::max(sup,
                       std::abs(raw_moment(p, x, 2) - x * x) / (1.0 + x * x));
    return sup;
}

}  // namespace

stat_check_report operator_stat_check(const summability_matrix& A,
                                      const std::vector<std::uint32_t>& ns,
                                      double cap, double grid_step,
                                      double indicator_eps) {
    if (ns.empty())
        throw std::invalid_argument("operator_stat_check: need at least one n");
    stat_check_report rep;
    for (std::uint32_t n : ns) {
        stat_check_row row;
        row.n = n;
        const double nd = static_cast<double>(n);
        row.deviation_r1 = deviation_r1(n, cap, grid_step);
        row.deviation_r2 = deviation_r2(n, cap, grid_step);
        row.envelope_r1 = 1.0 / nd;
        row.envelope_r2 = 2.0 / (nd * nd) + 2.5 / nd;
        row.within = row.deviation_r1 <= row.envelope_r1 &&
                     row.deviation_r2 <= row.envelope_r2;
        rep.all_within = rep.all_within && row.within;
        rep.rows.push_back(row);
    }
    const std::int64_t last_row = *std::max_element(ns.begin(), ns.end());
    sequence indicator = [&](std::int64_t i) {
        return deviation_r2(static_cast<std::uint32_t>(i + 1), cap, grid_step) >
                       indicator_eps
                   ? 1.0
                   : 0.0;
    };
    rep.indicator_mass = A.mass(indicator, last_row, 0.0, 0.5);
    return rep;
}

}  // namespace smd
