#pragma once

#include <string>
#include <vector>

namespace lenspec {

/// One reproducibility check: a named published result or structural
/// identity, rerun from scratch and compared exactly.
struct CriterionResult {
    int id = 0;
    std::string key;       // stable slug, e.g. "ikeda-pair"
    std::string citation;  // which known result this reproduces
    bool passed = false;
    std::string details;   // deterministic summary of what was checked
    double seconds = 0.0;
};

// Runs the whole reproducibility suite in order. Never throws: a criterion
// that errors out is reported failed with the error in its details.
std::vector<CriterionResult> run_acceptance();

}  // namespace lenspec
