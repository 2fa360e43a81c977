#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "smd/error_bounds.hpp"
#include "smd/experiments.hpp"
#include "smd/kernel_bv.hpp"
#include "smd/moments.hpp"
#include "smd/operator.hpp"
#include "smd/stat_conv.hpp"
#include "smd/suite.hpp"
#include "smd/target_function.hpp"

namespace {

using nlohmann::json;

double parse_alpha(const std::string& text, std::uint32_t n) {
    try {
        return smd::resolve_alpha_rule(text, n);
    } catch (const std::invalid_argument&) {
        return std::stod(text);
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> items;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) items.push_back(item);
    return items;
}

smd::table_metric parse_metric(const std::string& name) {
    if (name == "operator_value") return smd::table_metric::operator_value;
    if (name == "abs_error") return smd::table_metric::abs_error;
    if (name == "rel_error") return smd::table_metric::rel_error;
    throw std::runtime_error("unknown metric: " + name);
}

int run_eval(std::uint32_t n, const std::string& alpha_text,
             const std::vector<double>& xs, const std::string& fname,
             double eps_tail, const std::string& format,
             const std::string& out_path) {
    smd::operator_params p(n, parse_alpha(alpha_text, n));
    const smd::target_function f = smd::target_function::from_name(fname);
    smd::series_policy pol;
    pol.eps_tail = eps_tail;
    json rows = json::array();
    std::ostringstream text;
    for (double x : xs) {
        const smd::eval_result r = smd::apply(p, f, x, pol);
        rows.push_back({{"x", x},
                        {"value", r.value},
                        {"error_estimate", r.error_estimate()},
                        {"target", f(x)}});
        text << "x=" << x << "  U=" << std::setprecision(15) << r.value
             << "  f(x)=" << f(x) << "  err_est=" << r.error_estimate() << "\n";
    }
    if (format == "json") {
        json doc = {{"n", n}, {"alpha", p.alpha}, {"function", f.name()},
                    {"results", rows}};
        emit(doc.dump(2) + "\n", out_path);
    } else {
        emit(text.str(), out_path);
    }
    return 0;
}

int run_moments(std::uint32_t n, const std::string& alpha_text, double x,
                const std::string& format, const std::string& out_path) {
    smd::operator_params p(n, parse_alpha(alpha_text, n));
    const smd::moment_report m = smd::moments_at(p, x);
    if (format == "json") {
        json doc = {{"n", n},       {"alpha", p.alpha}, {"x", x},
                    {"raw", m.raw}, {"central", m.central},
                    {"eta", m.eta_value}};
        emit(doc.dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream text;
    text << std::setprecision(15);
    for (std::size_t k = 0; k < m.raw.size(); ++k)
        text << "raw[" << k << "]     = " << m.raw[k] << "\n";
    for (std::size_t k = 0; k < m.central.size(); ++k)
        text << "central[" << k + 1 << "] = " << m.central[k] << "\n";
    text << "eta         = " << m.eta_value << "\n";
    emit(text.str(), out_path);
    return 0;
}

int run_bounds(std::uint32_t n, const std::string& alpha_text, double x,
               const std::string& fname, const std::string& format,
               const std::string& out_path) {
    smd::operator_params p(n, parse_alpha(alpha_text, n));
    const smd::target_function f = smd::target_function::from_name(fname);
    std::vector<smd::bound_report> reports;
    std::vector<std::string> skipped;
    auto attempt = [&](const char* name, auto&& fn) {
        try {
            reports.push_back(fn());
        } catch (const std::exception& e) {
            skipped.push_back(std::string(name) + ": " + e.what());
        }
    };
    attempt("direct_k", [&] { return smd::direct_k_bound(p, f, x); });
    attempt("steklov", [&] { return smd::steklov_bound(p, f, x); });
    attempt("lipschitz_maximal",
            [&] { return smd::lipschitz_maximal_bound(p, f, x, 1.0); });
    attempt("modified_lipschitz", [&] {
        return smd::modified_lipschitz_bound(p, f, x, 1.0, 1.0, 1.0);
    });
    attempt("weighted_growth", [&] {
        return smd::weighted_growth_bound(p, f, x, std::max(1.0, x));
    });
    attempt("voronovskaya", [&] { return smd::voronovskaya_residual(p, f, x); });

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json ing;
            for (const auto& [k, v] : r.ingredients) ing[k] = v;
            arr.push_back({{"theorem", r.theorem},
                           {"bound", r.bound},
                           {"measured", r.measured},
                           {"measured_slack", r.measured_slack},
                           {"dominates", r.dominates()},
                           {"ingredients", ing}});
        }
        json doc = {{"n", n}, {"alpha", p.alpha}, {"x", x},
                    {"function", f.name()}, {"reports", arr},
                    {"skipped", skipped}};
        emit(doc.dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream text;
    text << std::setprecision(9);
    for (const auto& r : reports)
        text << r.theorem << ": bound=" << r.bound << " measured=" << r.measured
             << (r.dominates() ? "  (holds)" : "  (VIOLATED)") << "\n";
    for (const auto& s : skipped) text << "skipped " << s << "\n";
    emit(text.str(), out_path);
    return 0;
}

int run_table(const std::string& fname, double x, const std::string& metric,
              const std::string& ns_text, const std::string& alphas_text,
              bool fit_x, const std::string& format,
              const std::string& out_path) {
    smd::table_spec spec = smd::table_spec::reference();
    spec.function = fname;
    spec.x = x;
    spec.metric = parse_metric(metric);
    if (!ns_text.empty()) {
        spec.ns.clear();
        for (const std::string& item : split_commas(ns_text))
            spec.ns.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    if (!alphas_text.empty()) {
        spec.alphas.clear();
        for (const std::string& item : split_commas(alphas_text)) {
            if (item.rfind("1/", 0) != 0)
                throw std::runtime_error("table alphas must look like 1/d, got " +
                                         item);
            spec.alphas.push_back({std::stoll(item.substr(2))});
        }
    }
    if (fit_x) {
        const smd::fit_result r =
            smd::fit_table_x(spec, smd::reference_table_values());
        std::ostringstream text;
        text << std::setprecision(9) << "best_x=" << r.best_x
             << " rms_residual=" << r.rms_residual
             << " cells_compared=" << r.cells_compared << "\n";
        emit(text.str(), out_path);
        return 0;
    }
    const smd::table_result t = smd::generate_table(spec);
    emit(format == "json" ? smd::to_json(t) : smd::to_csv(t), out_path);
    return 0;
}

int run_figure(int preset, const std::string& format,
               const std::string& out_path) {
    smd::figure_spec spec;
    switch (preset) {
        case 1: spec = smd::figure_spec::f1(); break;
        case 2: spec = smd::figure_spec::f2(); break;
        case 3: spec = smd::figure_spec::f3(); break;
        default: throw std::runtime_error("figure preset must be 1, 2, or 3");
    }
    const smd::figure_result fig = smd::generate_figure(spec);
    emit(format == "json" ? smd::to_json(fig) : smd::to_csv(fig), out_path);
    return 0;
}

int run_statconv(const std::string& ns_text, double cap, double indicator_eps,
                 const std::string& format, const std::string& out_path) {
    std::vector<std::uint32_t> ns;
    for (const std::string& item : split_commas(ns_text))
        ns.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    const smd::summability_matrix A = smd::summability_matrix::cesaro_c1();
    const smd::stat_check_report rep =
        smd::operator_stat_check(A, ns, cap, 0.05, indicator_eps);
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"n", row.n},
                            {"deviation_r1", row.deviation_r1},
                            {"envelope_r1", row.envelope_r1},
                            {"deviation_r2", row.deviation_r2},
                            {"envelope_r2", row.envelope_r2},
                            {"within", row.within}});
        json doc = {{"rows", rows},
                    {"indicator_mass", rep.indicator_mass},
                    {"all_within", rep.all_within}};
        emit(doc.dump(2) + "\n", out_path);
        return 0;
    }
    std::ostringstream text;
    text << std::setprecision(9);
    for (const auto& row : rep.rows)
        text << "n=" << row.n << " dev_r1=" << row.deviation_r1
             << " env_r1=" << row.envelope_r1 << " dev_r2=" << row.deviation_r2
             << " env_r2=" << row.envelope_r2
             << (row.within ? " (within)" : " (OUTSIDE)") << "\n";
    text << "indicator_mass=" << rep.indicator_mass << "\n";
    emit(text.str(), out_path);
    return rep.all_within ? 0 : 1;
}

int run_suite_cmd(const std::string& config_path, const std::string& out_path) {
    smd::suite_config cfg;
    if (!config_path.empty()) cfg = smd::parse_suite_config(read_file(config_path));
    const smd::suite_report rep = smd::run_suite(cfg);
    for (const smd::check_result& c : rep.checks)
        std::printf("[%s] %s: measured=%.6g threshold=%.6g  %s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                    c.threshold, c.detail.c_str());
    if (!out_path.empty()) emit(smd::to_json(rep), out_path);
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Generalized Szasz-Mirakjan-Durrmeyer operator toolkit: evaluation, "
        "moments, error bounds, summability checks, tables, figures"};
    app.require_subcommand(1);

    std::uint32_t n = 10;
    std::string alpha = "1/n";
    std::vector<double> xs = {1.0};
    double x = 1.0;
    std::string fname = "exp_decay:1";
    double eps_tail = 1e-12;
    std::string format = "text";
    std::string out_path;
    std::string metric = "abs_error";
    std::string ns_text, alphas_text;
    bool fit_x = false;
    int preset = 1;
    double cap = 50.0;
    double indicator_eps = 1e-3;
    std::string statconv_ns = "1,2,5,10,100,1000,10000";
    std::string config_path;

    auto* eval = app.add_subcommand("eval", "Evaluate the operator at points");
    eval->add_option("--n", n, "operator index n >= 1")->required();
    eval->add_option("--alpha", alpha, "step parameter: decimal, 1/d, 1/n, 1/2n, 0");
    eval->add_option("--x", xs, "evaluation points (repeatable)");
    eval->add_option("--function", fname,
                     "t^m | poly:c0,c1,.. | exp_decay:c | x2_sin_pi | x_exp_m7 | "
                     "quad_exp");
    eval->add_option("--eps-tail", eps_tail, "series tail tolerance");
    eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    eval->add_option("--out", out_path, "write output to file");

    auto* moments = app.add_subcommand("moments", "Closed-form moments at x");
    moments->add_option("--n", n)->required();
    moments->add_option("--alpha", alpha);
    moments->add_option("--x", x)->required();
    moments->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    moments->add_option("--out", out_path);

    auto* bounds = app.add_subcommand("bounds", "Error-bound theorems at x");
    bounds->add_option("--n", n)->required();
    bounds->add_option("--alpha", alpha);
    bounds->add_option("--x", x)->required();
    bounds->add_option("--function", fname);
    bounds->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    bounds->add_option("--out", out_path);

    auto* table = app.add_subcommand("table", "Deviation table over (n, alpha)");
    table->add_option("--function", fname);
    table->add_option("--x", x);
    table->add_option("--metric", metric)
        ->check(CLI::IsMember({"operator_value", "abs_error", "rel_error"}));
    table->add_option("--ns", ns_text, "comma list of n values");
    table->add_option("--alphas", alphas_text, "comma list of 1/d alphas");
    table->add_flag("--fit-x", fit_x,
                    "fit x against the built-in reference table instead");
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path);

    auto* figure = app.add_subcommand("figure", "Operator-vs-target curve sets");
    figure->add_option("--preset", preset, "1, 2, or 3")->required();
    figure->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    figure->add_option("--out", out_path);

    auto* statconv =
        app.add_subcommand("statconv", "Summability envelopes and masses");
    statconv->add_option("--ns", statconv_ns, "comma list of n values");
    statconv->add_option("--cap", cap, "sup-norm grid cap");
    statconv->add_option("--indicator-eps", indicator_eps,
                         "deviation threshold for the exceptional-set density");
    statconv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    statconv->add_option("--out", out_path);

    auto* suite = app.add_subcommand("suite", "Run the verification suite");
    suite->add_option("--config", config_path, "key=value config file");
    suite->add_option("--out", out_path, "write JSON report to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return run_eval(n, alpha, xs, fname, eps_tail, format, out_path);
        if (moments->parsed())
            return run_moments(n, alpha, x, format, out_path);
        if (bounds->parsed())
            return run_bounds(n, alpha, x, fname, format, out_path);
        if (table->parsed()) {
            if (format == "text") format = "csv";
            return run_table(fname, x, metric, ns_text, alphas_text, fit_x,
                             format, out_path);
        }
        if (figure->parsed()) {
            if (format == "text") format = "csv";
            return run_figure(preset, format, out_path);
        }
        if (statconv->parsed())
            return run_statconv(statconv_ns, cap, indicator_eps, format, out_path);
        if (suite->parsed()) return run_suite_cmd(config_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
