#pragma once

#include <string>
#include <vector>

namespace permtop {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
    /// Reported but never fails a run.
    bool note = false;
};

/// Suites: oracle, integrals, bounds, nerve, regions, all. `max_n` caps the
/// exhaustive permutation sweeps. Throws std::invalid_argument on an
/// unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& suite, int max_n = 7);

std::vector<std::string> verify_suite_names();

} // namespace permtop
