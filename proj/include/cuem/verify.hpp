#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cuem {

enum class CheckStatus {
    pass,
    fail,     ///< cross-method disagreement
    finding,  ///< disagreement with a published reference value, reported only
};

std::string_view status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    std::optional<int> first_failing_coefficient;
};

enum class GridPreset { small, full };

struct VerifyOptions {
    GridPreset preset = GridPreset::small;
    bool with_mc = false;
    int workers = 1;
    /// Test hook: perturb the Dehaye X~ entry for this h before running.
    std::optional<int> corrupt_dehaye_h;
};

/// Runs every cross-method check for the preset; results sorted by name.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cuem
