// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <cstdio>
#include <exception>

#include <dlrev/verify.hpp>

int main()
{
    int failed = 0;
    for (const auto &c : dlrev::acceptance_criteria()) {
        dlrev::SuiteReport report;
        std::string error;
        try {
            report = dlrev::run_suite(c.suite);
        } catch (const std::exception &e) {
            error = e.what();
        }
        const bool in_time = c.time_limit_seconds == 0 || report.seconds < c.time_limit_seconds;
        const bool ok = error.empty() && report.passed() && in_time;
        failed += ok ? 0 : 1;
        std::printf("%s criterion %2d [%s] %s: %zu checks, %.2fs", ok ? "PASS" : "FAIL", c.number, c.suite.c_str(),
                    c.title.c_str(), report.checks.size(), report.seconds);
        if (c.time_limit_seconds > 0) {
            std::printf(" (limit %.0fs)", c.time_limit_seconds);
        }
        std::printf("\n");
        if (!error.empty()) {
            std::printf("    error: %s\n", error.c_str());
        }
        for (const auto &check : report.checks) {
            if (!check.passed) {
                std::printf("    failed: %s %s\n", check.name.c_str(), check.detail.c_str());
            }
        }
        if (!in_time) {
            std::printf("    over the time limit\n");
        }
    }
    std::printf("%d of %zu criteria failed\n", failed, dlrev::acceptance_criteria().size());
    return failed == 0 ? 0 : 1;
}
