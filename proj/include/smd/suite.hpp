#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace smd {

/// One verification check: `measured` is the worst value observed over the
/// check's grid and `threshold` is what it must stay within.
struct check_result {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct suite_config {
    std::vector<std::uint32_t> ns = {1, 2, 5, 10, 50, 200};
    /// Alpha rules resolved per n: "0", "1/2n", "1/n", or a fixed "1/d".
    std::vector<std::string> alpha_rules = {"0", "1/2n", "1/n"};
    std::vector<double> xs = {0.0, 0.1, 1.0, 5.0, 20.0};
    double eps_tail = 1e-12;
    double x_cap = 50.0;
    /// Empty runs every check; otherwise only the named ones.
    std::vector<std::string> checks;
};

/// Parses a flat key=value config (one pair per line, '#' comments).
/// Recognized keys: ns, alphas, xs, eps_tail, x_cap, checks.
suite_config parse_suite_config(const std::string& text);

struct suite_report {
    std::vector<check_result> checks;
    bool all_pass() const;
};

suite_report run_suite(const suite_config& cfg);

std::string to_json(const suite_report& report);

/// Resolves an alpha rule for a given n; throws on malformed rules.
double resolve_alpha_rule(const std::string& rule, std::uint32_t n);

}  // namespace smd
