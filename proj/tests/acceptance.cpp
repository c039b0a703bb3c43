// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run through ctest or directly.

#include <cstdio>

#include "slipdrop/verification.hpp"

int main() {
    const auto results = slipdrop::run_acceptance();
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s %-28s (%.2f s)  %s\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds, r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
