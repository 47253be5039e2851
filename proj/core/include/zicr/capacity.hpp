// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/model.hpp>

#include <optional>
#include <vector>

namespace zicr {

struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;

    double sum() const { return r1 + r2; }
};

enum class Certification { capacity, formula_only };

struct SumRate {
    double value = 0.0;
    Certification status = Certification::formula_only;

    bool certified() const { return status == Certification::capacity; }
};

struct BoundValue {
    double value = 0.0;
    bool valid = false;
};

struct CutsetBounds {
    double r1_tx_side = 0.0;
    double r1_rx_side = 0.0;
    double r2_bound = 0.0;

    double sum() const;
};

// Number of interior beta1 grid points used by wi_feasible.
inline constexpr int kWiGridPoints = 4096;

bool relay_condition_holds(const SnrSextet &snr);

// Both weak-interference inequalities evaluated exactly, without slack.
bool wi_conditions_hold(const SnrSextet &snr, const WiCertificate &cert);

std::optional<WiCertificate> wi_feasible(const SnrSextet &snr);

// Formula value always; certified when the relay and weak-interference
// conditions both hold.
SumRate sum_capacity_zicr(const SnrSextet &snr);

// Relay-free baseline; snr31, snr32 and snr13 are ignored. Certified when
// snr21 <= snr22.
SumRate sum_capacity_zic(const SnrSextet &snr);

// Rates of the decode-at-relay scheme with independent codebooks; upsilon is ignored.
RatePair achievable_rates(const SnrSextet &snr, const InputConfig &inp);

BoundValue genie_sum_upper_bound(const SnrSextet &snr);

CutsetBounds cutset_bounds(const SnrSextet &snr);

// Symmetric setting: snr11 = snr22 = snr31 = snrd, snr21 = snr32 = snrc.
SnrSextet symmetric_snr(double snrd, double snrc, double snr13);

struct Fig3Row {
    double snrc_db = 0.0;
    double sum_zicr = 0.0;
    double sum_zic = 0.0;
    bool wi_certified_zicr = false;
    bool wi_certified_zic = false;
};

// snrc/snrd swept in dB over [db_min, db_max], endpoints included.
std::vector<Fig3Row> sweep_fig3(double snrd, double db_min, double db_max, int points, double snr13);

} // namespace zicr
