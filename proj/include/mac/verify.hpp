#pragma once

#include <functional>
#include <string>
#include <vector>

namespace mac {

/// Outcome of one acceptance criterion.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary
    double seconds = 0.0;
};

/// Runs the acceptance criteria whose names contain `filter` (all when
/// empty), invoking `on_result` after each one.
std::vector<CriterionResult> run_acceptance(
    const std::string& filter = "",
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace mac
