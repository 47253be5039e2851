// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/capacity.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace zicr {

namespace {

// Feasible beta2 interval for a fixed beta1. Condition (b) gives the lower end,
// condition (a) the upper end. Empty when lo > hi.
struct Beta2Interval {
    double lo;
    double hi;

    double width() const { return hi - lo; }
};

Beta2Interval beta2_interval(const SnrSextet &s, double beta1) {
    constexpr double inf = std::numeric_limits<double>::infinity();

    const double b_lhs = s.snr21 * (1.0 + s.snr32) * (1.0 + s.snr32);
    double lo;
    if (b_lhs == 0.0) {
        lo = 0.0;
    } else {
        const double denom = s.snr22 * (1.0 - beta1);
        lo = denom > 0.0 ? b_lhs / denom : inf;
    }

    const double a_lhs = s.snr32 * (1.0 + s.snr21) * (1.0 + s.snr21);
    const double cross = 2.0 * s.snr32 * s.snr11;
    double hi;
    if (a_lhs == 0.0 && cross == 0.0) {
        hi = 1.0;
    } else if (s.snr31 <= 0.0 || beta1 <= 0.0) {
        hi = -inf;
    } else {
        hi = std::min(1.0, 1.0 - (a_lhs / beta1 + cross) / s.snr31);
    }
    return {std::max(lo, 0.0), hi};
}

std::optional<WiCertificate> certify(const SnrSextet &s, double beta1) {
    const Beta2Interval iv = beta2_interval(s, beta1);
    if (iv.lo > iv.hi) return std::nullopt;
    for (double b2 : {0.5 * (iv.lo + iv.hi), iv.lo, iv.hi}) {
        const WiCertificate c{beta1, std::clamp(b2, 0.0, 1.0)};
        if (wi_conditions_hold(s, c)) return c;
    }
    return std::nullopt;
}

} // namespace

double CutsetBounds::sum() const { return std::min(r1_tx_side, r1_rx_side) + r2_bound; }

bool relay_condition_holds(const SnrSextet &s) {
    return (s.snr11 + s.snr31) / (1.0 + s.snr21) <= s.snr13;
}

bool wi_conditions_hold(const SnrSextet &s, const WiCertificate &c) {
    if (!(c.beta1 >= 0.0 && c.beta1 <= 1.0 && c.beta2 >= 0.0 && c.beta2 <= 1.0)) return false;
    const double a_lhs = s.snr32 * (1.0 + s.snr21) * (1.0 + s.snr21);
    const double a_rhs = c.beta1 * (s.snr31 * (1.0 - c.beta2) - 2.0 * s.snr32 * s.snr11);
    const double b_lhs = s.snr21 * (1.0 + s.snr32) * (1.0 + s.snr32);
    const double b_rhs = c.beta2 * s.snr22 * (1.0 - c.beta1);
    return a_lhs <= a_rhs && b_lhs <= b_rhs;
}

std::optional<WiCertificate> wi_feasible(const SnrSextet &s) {
    validate(s);
    if (s.snr22 == 0.0 && s.snr21 > 0.0) return std::nullopt;

    // The interval width is concave in beta1, so the best grid bracket holds the
    // maximizer. Pick the widest interval and certify at its midpoint.
    constexpr int n = kWiGridPoints;
    const double pitch = 1.0 / (n + 1);
    int best = -1;
    double best_width = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= n; ++k) {
        const double w = beta2_interval(s, k * pitch).width();
        if (w > best_width) {
            best_width = w;
            best = k;
        }
    }

    double lo = (best - 1) * pitch;
    double hi = (best + 1) * pitch;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double eps = 1e-3 * (hi - lo);
        if (beta2_interval(s, mid + eps).width() > beta2_interval(s, mid - eps).width())
            lo = mid;
        else
            hi = mid;
    }
    const double refined = 0.5 * (lo + hi);

    for (double b1 : {refined, best * pitch})
        if (b1 > 0.0 && b1 < 1.0)
            if (auto c = certify(s, b1)) return c;
    return std::nullopt;
}

SumRate sum_capacity_zicr(const SnrSextet &s) {
    const double v = std::log2(1.0 + (s.snr11 + s.snr31) / (1.0 + s.snr21)) +
                     std::log2(1.0 + s.snr22 / (1.0 + s.snr32));
    const bool ok = relay_condition_holds(s) && wi_feasible(s).has_value();
    return {v, ok ? Certification::capacity : Certification::formula_only};
}

SumRate sum_capacity_zic(const SnrSextet &s) {
    const double v = std::log2(1.0 + s.snr11 / (1.0 + s.snr21)) + std::log2(1.0 + s.snr22);
    return {v, s.snr21 <= s.snr22 ? Certification::capacity : Certification::formula_only};
}

RatePair achievable_rates(const SnrSextet &s, const InputConfig &inp) {
    validate(inp);
    const double mac = std::log2(1.0 + (inp.p1 * s.snr11 + inp.p3 * s.snr31) / (1.0 + inp.p2 * s.snr21));
    const double relay = std::log2(1.0 + inp.p1 * s.snr13);
    const double r2 = std::log2(1.0 + inp.p2 * s.snr22 / (1.0 + inp.p3 * s.snr32));
    return {std::min(mac, relay), r2};
}

BoundValue genie_sum_upper_bound(const SnrSextet &s) {
    const double root = std::sqrt(s.snr11 * s.snr31);
    const double first = std::log2(
        1.0 + s.snr21 + (s.snr11 + s.snr31 + s.snr11 * s.snr32 + 2.0 * root) / (1.0 + s.snr32));
    const double second = std::log2(1.0 + s.snr32 + s.snr22 / (1.0 + s.snr21));
    return {first + second, s.snr31 > s.snr32 * root};
}

CutsetBounds cutset_bounds(const SnrSextet &s) {
    return {std::log2(1.0 + s.snr11 + s.snr31), std::log2(1.0 + s.snr11 + s.snr13),
            std::log2(1.0 + s.snr22)};
}

SnrSextet symmetric_snr(double snrd, double snrc, double snr13) {
    SnrSextet s{snrd, snrc, snrd, snrd, snrc, snr13};
    validate(s);
    return s;
}

std::vector<Fig3Row> sweep_fig3(double snrd, double db_min, double db_max, int points, double snr13) {
    if (points < 2) throw DomainError("fig3 sweep needs at least 2 points");
    if (!(snrd > 0.0)) throw DomainError("snrd must be > 0");
    std::vector<Fig3Row> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double db = db_min + (db_max - db_min) * i / (points - 1);
        const SnrSextet s = symmetric_snr(snrd, snrd * db_to_linear(db), snr13);
        const SumRate zicr = sum_capacity_zicr(s);
        const SumRate zic = sum_capacity_zic(s);
        rows.push_back({db, zicr.value, zic.value, zicr.certified(), zic.certified()});
    }
    return rows;
}

} // namespace zicr
