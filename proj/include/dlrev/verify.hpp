#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dlrev {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
};

struct VerifyOptions {
    // Overrides the main size parameter of a suite (its order, depth or
    // largest n); each suite documents what it scales.
    std::optional<std::size_t> order;
    std::uint32_t seed = 20251018;
};

// thm1, thm2, thm3, thm4, thm5, thm5i, thm5ii, reversion, sin2, exp,
// prop52, prop72, dodgson, thm8, lgv, bijections, interp, all.
const std::vector<std::string> &suite_names();

// Throws ValidationError for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions &options = {});

struct Criterion {
    int number;
    std::string suite;
    std::string title;
    double time_limit_seconds; // 0 when no limit is stated
};

const std::vector<Criterion> &acceptance_criteria();

} // namespace dlrev
