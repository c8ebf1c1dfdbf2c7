#pragma once

#include <string>
#include <vector>

#include "fixloci/published.hpp"

namespace fixloci {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    bool structural = true;   // catalog invariants, theta normalization, support
    bool admissible = true;   // series vs tuple-counting oracle, K3
    bool kummer = true;       // group-ring agreement and augmentation naturality
    bool local = true;        // partition/lattice local-model suite
    long long max_order = 40; // K3 oracle sweep bound
    long long kummer_order = 20;
    int local_a_min = 2;
    int local_a_max = 6;
    long long local_len = 12;
};

struct VerifyReport {
    std::vector<CheckResult> checks;       // internal two-path checks
    std::vector<Discrepancy> discrepancies; // engine vs published values

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Runs the internal consistency suite: every check compares two independent
/// computation routes inside the engine. Published-value divergences are
/// listed separately and do not fail the report.
VerifyReport run_verification(const VerifyOptions& options);

} // namespace fixloci
