// Reruns every reproducibility criterion and prints one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <cstdio>

#include "lenspec/repro.hpp"

int main() {
    bool all = true;
    for (const auto& r : lenspec::run_acceptance()) {
        all = all && r.passed;
        std::printf("[%s] %d %-22s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.key.c_str(), r.citation.c_str(), r.seconds);
        if (!r.passed) std::printf("       %s\n", r.details.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
