#pragma once

#include <string>
#include <vector>

#include "valleypaths/bijections.hpp"
#include "valleypaths/json_io.hpp"

namespace valleypaths {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = true;
    Json counterexample;  // null on pass; otherwise n, spec and both values
};

struct VerifyReport {
    std::vector<std::string> suites;
    std::vector<CheckResult> checks;  // suite declaration order, then check order
    double wall_seconds = 0;          // kept out of the rendered reports

    bool all_pass() const;
};

// Individual suites in declaration order; "all" runs every one of them.
const std::vector<std::string>& suite_names();

// Checks run on `jobs` threads; results are merged by index so the report
// does not depend on scheduling. Throws BadParams for an unknown suite.
VerifyReport run_verify(const std::string& suite, int max_n, unsigned jobs = 1);

// Round trips, image completeness, weight preservation and the aggregate
// identity for one map at one size (tau: both sides, n >= 2).
CheckResult bijection_check(MapId map, int n);

Json to_json(const VerifyReport& report);
std::string pretty(const VerifyReport& report);

}  // namespace valleypaths
