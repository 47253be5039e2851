// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/model.hpp>

#include <optional>
#include <vector>

namespace zicr {

struct GdofUpper {
    // min of both legs when valid, the cut-set leg alone otherwise.
    double value = 0.0;
    bool valid = false;
    double cutset_leg = 0.0;
    double genie_leg = 0.0;

    // min of both legs regardless of validity; this is the curve plotted over alpha.
    double formula() const;
};

struct GdofReport {
    double lower = 0.0;
    std::optional<double> upper;
    bool upper_valid = false;
    std::optional<double> max_certified;
    bool conditions_hold = false;
};

struct GdofSweepRow {
    double alpha = 0.0;
    double lower = 0.0;
    double upper = 0.0; // GdofUpper::formula()
    bool upper_valid = false;
    double zic_bound = 0.0;
    std::optional<double> max_certified;
};

double gdof_lower(const GdofExponents &exp);
GdofUpper gdof_upper(const GdofExponents &exp);
std::optional<double> gdof_max(const GdofExponents &exp);
double gdof_zic_upper();

GdofReport gdof_report(const GdofExponents &exp);

// alpha = lambda swept over [0, 1] in n_points equally spaced steps.
std::vector<GdofSweepRow> sweep_alpha(double beta, double gamma, int n_points);

} // namespace zicr
