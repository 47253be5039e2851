// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/model.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zicr {

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
};

inline constexpr int kCriteriaCount = 10;
inline constexpr std::uint64_t kDefaultSeed = 42;

// One acceptance criterion, numbered 1..kCriteriaCount.
CheckResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);

std::vector<CheckResult> run_acceptance(std::uint64_t seed = kDefaultSeed);

// Cross-checks every number of a capacity record against the log-det oracle.
CheckResult capacity_record_check(const SnrSextet &snr);

// Acceptance criteria plus supplementary oracle and invariant checks.
std::vector<CheckResult> run_verification(std::uint64_t seed = kDefaultSeed,
                                          const std::optional<SnrSextet> &snr = std::nullopt);

} // namespace zicr
