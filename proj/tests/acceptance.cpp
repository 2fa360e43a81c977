// Acceptance gate for the operator toolkit. Runs every suite check on the
// pinned default grid and prints one verdict line per check.

#include <cstdio>
#include <exception>

#include "smd/suite.hpp"

int main() {
    try {
        const smd::suite_config cfg;  // pinned defaults
        const smd::suite_report rep = smd::run_suite(cfg);
        int idx = 0;
        for (const auto& c : rep.checks) {
            ++idx;
            std::printf("[%s] %2d %-18s measured=%-12.6g threshold=%-12.6g %s\n",
                        c.pass ? "PASS" : "FAIL", idx, c.name.c_str(),
                        c.measured, c.threshold, c.detail.c_str());
        }
        const bool ok = rep.all_pass();
        std::printf("%s: %zu checks\n", ok ? "ALL PASS" : "FAILURES PRESENT",
                    rep.checks.size());
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
        return 2;
    }
}
