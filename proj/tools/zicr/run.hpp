// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include "config.hpp"

#include <zicr/capacity.hpp>
#include <zicr/gdof.hpp>
#include <zicr/verification.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace zicr::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kDomain = 3 };

std::string format_number(double v);

std::string capacity_json(const SnrSextet &snr);
std::string gdof_json(const GdofExponents &exp);
std::string fig3_csv(const std::vector<Fig3Row> &rows);
std::string fig5_csv(const std::vector<GdofSweepRow> &rows);
std::string region_csv(const RegionMask &mask);
std::string verify_table(const std::vector<CheckResult> &results);

// Writes the mode's output to cfg.out or `out`; diagnostics go to `err`.
int run(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err);

} // namespace zicr::cli
