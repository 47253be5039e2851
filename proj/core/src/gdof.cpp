// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/gdof.hpp>

#include <algorithm>

namespace zicr {

namespace {

double pos(double x) { return std::max(x, 0.0); }

} // namespace

double GdofUpper::formula() const { return std::min(cutset_leg, genie_leg); }

double gdof_lower(const GdofExponents &e) {
    validate(e);
    const auto &[a, b, g, l] = e;
    return std::min(g, std::max(pos(1.0 - a), pos(b - a))) + pos(1.0 - l);
}

GdofUpper gdof_upper(const GdofExponents &e) {
    validate(e);
    const auto &[a, b, g, l] = e;
    GdofUpper u;
    u.cutset_leg = std::max(2.0, 1.0 + std::min(b, g));
    u.genie_leg = std::max({a + l, b, 1.0 + b - a - l});
    u.valid = b > 2.0 * l + 1.0;
    u.value = u.valid ? u.formula() : u.cutset_leg;
    return u;
}

std::optional<double> gdof_max(const GdofExponents &e) {
    validate(e);
    const auto &[a, b, g, l] = e;
    if (l == a && a <= 0.5 && 1.0 + 2.0 * a < b && b <= g + a) return 1.0 + b - 2.0 * a;
    return std::nullopt;
}

double gdof_zic_upper() { return 2.0; }

GdofReport gdof_report(const GdofExponents &e) {
    const GdofUpper u = gdof_upper(e);
    GdofReport r;
    r.lower = gdof_lower(e);
    r.upper = u.value;
    r.upper_valid = u.valid;
    r.max_certified = gdof_max(e);
    r.conditions_hold = r.max_certified.has_value();
    return r;
}

std::vector<GdofSweepRow> sweep_alpha(double beta, double gamma, int n_points) {
    if (n_points < 2) throw DomainError("sweep_alpha needs at least 2 points");
    std::vector<GdofSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double a = static_cast<double>(i) / (n_points - 1);
        const GdofExponents e{a, beta, gamma, a};
        const GdofUpper u = gdof_upper(e);
        rows.push_back({a, gdof_lower(e), u.formula(), u.valid, gdof_zic_upper(), gdof_max(e)});
    }
    return rows;
}

} // namespace zicr
