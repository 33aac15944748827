// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  The criteria themselves live in the library (mac/verify.hpp)
// so the CLI's verify-all subcommand runs the identical suite.

#include "mac/verify.hpp"

#include <cstdio>

int main() {
    bool all_pass = true;
    mac::run_acceptance("", [&](const mac::CriterionResult& r) {
        std::printf("%s  criterion %d  %-24s  (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.seconds, r.pass ? "" : "  ",
                    r.pass ? "" : r.detail.c_str());
        std::fflush(stdout);
        all_pass &= r.pass;
    });
    return all_pass ? 0 : 1;
}
