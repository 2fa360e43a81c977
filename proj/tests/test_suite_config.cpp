#include <stdexcept>

#include "doctest.h"
#include "smd/suite.hpp"

using namespace smd;

TEST_CASE("empty config yields the pinned defaults") {
    const suite_config cfg = parse_suite_config("");
    CHECK(cfg.ns == std::vector<std::uint32_t>{1, 2, 5, 10, 50, 200});
    CHECK(cfg.alpha_rules == std::vector<std::string>{"0", "1/2n", "1/n"});
    CHECK(cfg.xs == std::vector<double>{0.0, 0.1, 1.0, 5.0, 20.0});
    CHECK(cfg.eps_tail == doctest::Approx(1e-12));
    CHECK(cfg.x_cap == doctest::Approx(50.0));
    CHECK(cfg.checks.empty());
}

TEST_CASE("key=value lines override the defaults") {
    const suite_config cfg = parse_suite_config(
        "# comment line\n"
        "ns = 1,5\n"
        "alphas = 0, 1/n\n"
        "xs = 0, 2.5\n"
        "eps_tail = 1e-10\n"
        "\n"
        "checks = gruss\n");
    CHECK(cfg.ns == std::vector<std::uint32_t>{1, 5});
    CHECK(cfg.alpha_rules == std::vector<std::string>{"0", "1/n"});
    CHECK(cfg.xs == std::vector<double>{0.0, 2.5});
    CHECK(cfg.eps_tail == doctest::Approx(1e-10));
    CHECK(cfg.checks == std::vector<std::string>{"gruss"});
}

TEST_CASE("malformed config is rejected") {
    CHECK_THROWS_AS((void)parse_suite_config("bogus_key = 1\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)parse_suite_config("just words\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)parse_suite_config("ns =\n"), std::invalid_argument);
}

TEST_CASE("alpha rules resolve to numbers") {
    CHECK(resolve_alpha_rule("0", 7) == doctest::Approx(0.0));
    CHECK(resolve_alpha_rule("1/n", 4) == doctest::Approx(0.25));
    CHECK(resolve_alpha_rule("1/2n", 4) == doctest::Approx(0.125));
    CHECK(resolve_alpha_rule("1/8", 4) == doctest::Approx(0.125));
    CHECK_THROWS_AS((void)resolve_alpha_rule("fast", 4), std::invalid_argument);
}

TEST_CASE("a restricted suite run reports the selected check") {
    suite_config cfg;
    cfg.ns = {5, 20};
    cfg.alpha_rules = {"0", "1/n"};
    cfg.xs = {0.0, 1.0};
    cfg.checks = {"gruss"};
    const suite_report rep = run_suite(cfg);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].name == "gruss");
    CHECK(rep.checks[0].pass);
    CHECK(rep.all_pass());
    const std::string js = to_json(rep);
    CHECK(js.find("\"all_pass\": true") != std::string::npos);
    CHECK(js.find("\"gruss\"") != std::string::npos);
}

TEST_CASE("unknown check names are rejected") {
    suite_config cfg;
    cfg.checks = {"not_a_check"};
    CHECK_THROWS_AS((void)run_suite(cfg), std::invalid_argument);
}
