#pragma once
// The sixteen acceptance checks, shared by the acceptance binary and
// `redn reproduce-all`.

#include "redn/io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace redn {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string computed, target;
    std::string tolerance = "exact";
    double seconds = 0, budget_seconds = 0;
};

// Runs every check in order; on_done is called after each one.
std::vector<CheckResult> run_acceptance(int jobs, const std::function<void(const CheckResult&)>& on_done = {});

std::string format_line(const CheckResult& r);
// Timings are left out unless asked for, so the JSON is byte-stable.
Json report_json(const std::vector<CheckResult>& rs, bool timings);

}  // namespace redn
