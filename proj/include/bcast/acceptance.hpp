#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcast {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  ///< 0 when the criterion has no runtime limit
};

/// One line: "criterion <id> PASS|FAIL <title>: <detail> (<seconds>s)".
std::string format_result(const CriterionResult& r);

/// Runs criteria 1..10 (or only the listed ids), printing each line to `out` as it finishes.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::vector<int>& only = {});

}  // namespace bcast
