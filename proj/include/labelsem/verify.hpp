#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace labelsem {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Oracle-equivalence suites: the composite formula against exhaustive
// enumeration, flattened compounds against two-level evaluation, the update
// target against the equation it solves, the clamping dichotomy at
// reliability 1, and the analytic fixed point against Monte Carlo.
std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace labelsem
