#ifndef BERGE_VERIFY_HPP
#define BERGE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "berge/parallel.hpp"
#include "berge/rng.hpp"

namespace berge {

struct suite_params {
    std::uint64_t seed = default_seed;
    long long trials = 0; // 0: suite default
    parallelism ctx{};
};

struct suite_result {
    std::string name;
    bool pass = false;
    long long checks = 0;
    long long violations = 0;
    double seconds = 0.0;
    double budget_seconds = 0.0; // 0: no time budget
    std::vector<std::string> details;
};

// Named verification suites, mirroring the acceptance gate:
//   cel2, reduction, claim, retention, sandwich, bound-direction,
//   threshold, symmetrization, oracle, dashboard-regression
suite_result run_suite(const std::string& name, const suite_params& p);

std::vector<std::string> suite_names();

} // namespace berge

#endif
