// Acceptance gate: runs every criterion and prints one line per result.
// Exit status 0 iff all criteria pass.

#include <cstdio>

#include "minimorph/report.hpp"

int main() {
    using namespace minimorph;

    RunConfig cfg;
    try {
        cfg = RunConfig::from_env();
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    std::vector<CheckResult> results;
    try {
        results = run_acceptance(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: acceptance suite aborted: %s\n", e.what());
        return 2;
    }

    int failed = 0;
    for (const CheckResult& c : results) {
        const bool ok = c.verdict == Verdict::pass;
        if (!ok) ++failed;
        std::printf("%s: %s (residual %.3g)\n", c.name.c_str(), ok ? "PASS" : "FAIL", c.residual);
        if (!ok && !c.detail.empty()) std::printf("    %s\n", c.detail.c_str());
    }
    std::printf("%zu criteria, %d failed, seed %llu\n", results.size(), failed,
                static_cast<unsigned long long>(cfg.seed));
    return failed == 0 ? 0 : 1;
}
