// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/gaussian.hpp>
#include <zicr/model.hpp>

#include <random>
#include <vector>

namespace zicr {

// Power-allocation problem over 2n index pairs; see kkt_solve.
struct KktProblem {
    double snr11 = 0.0;
    double snr31 = 0.0;
    double snr32 = 0.0;
    double nbar1 = 0.0; // |eta1|^2 / 2
    double nbar2 = 0.0; // (1 - |vtilde2|^2) / 2
    int n = 1;
};

struct KktPoint {
    std::vector<double> d3;
    std::vector<double> dm;
};

struct KktSolution {
    std::vector<double> d3;
    std::vector<double> dm;
    double objective = 0.0;
    int sweeps = 0;
};

struct Prop1Setup {
    SnrSextet snr;
    GenieParams genie;
    int grid_resolution = 21;
    // Phase quadrature used by the brute-force objective.
    int phase_points = 64;
};

// Scalars of the conditional-variance integrand; v is |upsilon|.
struct F2Params {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 1.0;
    double c4 = 0.0;
    double c5 = 0.0;
    double theta2 = 0.0;
    double v = 0.0;
};

struct PhaseAverageCheck {
    double numeric = 0.0;
    double closed_form = 0.0;
    double discrepancy = 0.0;
};

struct Prop1Point {
    double v = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
};

struct Prop1Result {
    Prop1Point argmax;
    double best = 0.0;
    double corner = 0.0; // objective at (0, 1, 1, 1)
};

F2Params f2_params(const Prop1Setup &setup, const InputConfig &inp);

// var(Y1 | S1) at phase theta1.
double f2_integrand(const F2Params &p, double theta1);

// Closed-form expression f2(|v|) (not its logarithm).
double f2_closed_form(const F2Params &p);

// f2 at |v| = 0.
double f3_closed_form(const F2Params &p);

// Exact phase average of log2 f2_integrand.
double f2_log_average_exact(const F2Params &p);

// numeric: quadrature of log2 f2_integrand; closed_form: log2 f2_closed_form.
PhaseAverageCheck phase_average_check(const F2Params &p, int points = kPhaseQuadraturePoints);
PhaseAverageCheck phase_average_check(const Prop1Setup &setup, const InputConfig &inp);

// h(Y1|S1) + h(Y2|S2), phase-averaged, from the joint Gaussian model.
double prop1_objective(const Prop1Setup &setup, const Prop1Point &pt);

Prop1Result prop1_bruteforce(const Prop1Setup &setup);

bool maxp_gdof_monotonicity(const SnrSextet &snr, int grid);

bool kkt_feasible(const KktProblem &prob) noexcept;
void validate(const KktProblem &prob);

double kkt_objective(const KktProblem &prob, const std::vector<double> &d3, const std::vector<double> &dm);

// n (log2(snr11 + snr31 + 2 nbar1) - log2(snr32 + 2 nbar2)).
double kkt_closed_form_objective(const KktProblem &prob);

KktPoint kkt_random_start(const KktProblem &prob, std::mt19937_64 &rng);

KktSolution kkt_solve(const KktProblem &prob);
KktSolution kkt_solve(const KktProblem &prob, const KktPoint &start);

} // namespace zicr
