// Acceptance gate: runs every verification suite at its stated size and
// prints one pass/fail line per criterion.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "berge/verify.hpp"

namespace {

struct criterion {
    int number;
    const char* suite;
    long long trials; // 0: suite default
    int workers;
};

} // namespace

int main() {
    const std::vector<criterion> criteria = {
        {1, "cel2", 1000, 2},
        {2, "reduction", 0, 2},
        {3, "claim", 500, 2},
        {4, "retention", 10000, 2},
        {5, "sandwich", 0, 4},
        {6, "bound-direction", 0, 2},
        {7, "threshold", 0, 1},
        {8, "symmetrization", 0, 2},
        {9, "oracle", 0, 2},
        {10, "dashboard-regression", 0, 1},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        berge::suite_params params;
        params.trials = c.trials;
        params.ctx.workers = c.workers;
        std::string detail;
        bool pass = false;
        long long checks = 0, violations = 0;
        double seconds = 0;
        try {
            berge::suite_result res = berge::run_suite(c.suite, params);
            pass = res.pass;
            checks = res.checks;
            violations = res.violations;
            seconds = res.seconds;
            for (const auto& line : res.details) {
                if (line.rfind("violation:", 0) == 0 && detail.empty()) detail = line;
            }
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[criterion %2d] %s %s (checks=%lld, violations=%lld, %.2fs)%s%s\n", c.number,
                    pass ? "PASS" : "FAIL", c.suite, checks, violations, seconds,
                    detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && pass;
    }
    std::printf("acceptance: %s\n", all_pass ? "PASS" : "FAIL");
    return all_pass ? 0 : 1;
}
