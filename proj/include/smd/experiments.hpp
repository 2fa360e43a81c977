#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smd/operator.hpp"
#include "smd/params.hpp"
#include "smd/target_function.hpp"

namespace smd {

/// Alpha kept as an exact rational 1/den so the admissibility cut
/// alpha <= 1/n is decided in integers (den >= n), never by floating
/// comparison.
struct rational_alpha {
    std::int64_t den = 1;
    double value() const { return 1.0 / static_cast<double>(den); }
    std::string label() const { return "1/" + std::to_string(den); }
    bool admissible(std::uint32_t n) const {
        return den >= static_cast<std::int64_t>(n);
    }
};

enum class table_metric { operator_value, abs_error, rel_error };

struct table_spec {
    std::vector<std::uint32_t> ns;
    std::vector<rational_alpha> alphas;
    std::string function = "quad_exp";
    double x = 0.1;
    table_metric metric = table_metric::abs_error;
    series_policy series;
    quadrature_policy quad;

    /// The built-in 16 x 10 reference layout for f = (t^2+1)e^t.
    static table_spec reference();
};

struct table_cell {
    bool admissible = false;
    double value = 0.0;
};

struct table_result {
    table_spec spec;
    std::vector<std::vector<table_cell>> cells;  // cells[row][col]
};

table_result generate_table(const table_spec& spec);

/// Reference cell values shipped with the reference layout (NaN at the
/// inadmissible cells); used by fit_table_x.
std::vector<std::vector<double>> reference_table_values();

struct fit_result {
    double best_x = 0.0;
    double rms_residual = 0.0;
    std::size_t cells_compared = 0;
};

/// Scans x for the best least-squares match between the generated metric
/// table and the reference values.
fit_result fit_table_x(table_spec spec,
                       const std::vector<std::vector<double>>& reference,
                       double x_lo = 1e-3, double x_hi = 1.0);

struct figure_curve {
    std::uint32_t n = 1;
    double alpha = 0.0;
    std::string label;
};

struct figure_spec {
    std::string function;
    double x_lo = 0.0;
    double x_hi = 2.0;
    std::uint32_t points = 201;
    std::vector<figure_curve> curves;
    series_policy series;
    quadrature_policy quad;

    static figure_spec f1();  // t^2 sin(pi t), alpha = 1/60, n = 15 and 35
    static figure_spec f2();  // t e^{-7t}, alpha = 1/45, n = 5..45
    static figure_spec f3();  // t e^{-7t}, n = 10, alpha = 1/10..1/80
};

struct figure_result {
    figure_spec spec;
    std::vector<double> xs;
    std::vector<double> target;                 // f on the grid
    std::vector<std::vector<double>> curves;    // per curve, operator values
    std::vector<double> sup_gaps;               // per curve, max |curve - f|
};

figure_result generate_figure(const figure_spec& spec);

/// Deterministic serializations: 6 significant digits, inadmissible table
/// cells "-" in CSV and null in JSON.
std::string to_csv(const table_result& t);
std::string to_json(const table_result& t);
std::string to_csv(const figure_result& f);
std::string to_json(const figure_result& f);

}  // namespace smd
