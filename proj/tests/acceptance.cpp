// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Pass --quick to shrink randomized sample counts.

#include <cstdio>
#include <cstring>

#include "octosieve/acceptance.hpp"

int main(int argc, char** argv) {
    octosieve::acceptance::Options opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    }

    int failed = 0;
    const auto results = octosieve::acceptance::run_all(opt);
    for (const auto& r : results) {
        std::printf("[%s] %2d %-34s %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
        failed += !r.passed;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
