// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/model.hpp>

#include <initializer_list>
#include <string_view>
#include <vector>

namespace zicr {

// Coordinates of the jointly Gaussian model. S1 and S2 are the genie signals.
enum class Var { X1, X2, X3, Y1, Y2, Y3, S1, S2 };

std::string_view to_string(Var v) noexcept;

using LabelSet = std::vector<Var>;

struct JointGaussian {
    HermitianCov cov;
    LabelSet labels;

    Eigen::Index index_of(Var v) const;
};

inline constexpr int kPhaseQuadraturePoints = 512;
inline constexpr double kPdTolerance = 1e-12;
inline constexpr double kMiClamp = 1e-10;

// Full joint covariance of (X1, X2, X3, Y1, Y2, Y3, S1, S2).
JointGaussian build_joint(const SnrSextet &snr, const InputConfig &inp, const GenieParams &genie,
                          const ChannelRealization &phases);

// Same model restricted to `outputs`, in the given order.
JointGaussian build_joint(const SnrSextet &snr, const InputConfig &inp, const GenieParams &genie,
                          const ChannelRealization &phases, const LabelSet &outputs);

// log2 det(pi e K) of the principal submatrix over `subset`.
double logdet_entropy(const JointGaussian &jg, const LabelSet &subset);

// h(A | C); C may be empty.
double conditional_entropy(const JointGaussian &jg, const LabelSet &a, const LabelSet &given);

// Covariance of A given C (Schur complement); C may be empty.
HermitianCov conditional_covariance(const JointGaussian &jg, const LabelSet &a, const LabelSet &given);

// Entropy of a scalar circularly-symmetric Gaussian with the given variance.
double scalar_entropy(double variance);

// I(A; B | C) in bits.
double conditional_mi(const JointGaussian &jg, const LabelSet &a, const LabelSet &b,
                      const LabelSet &given);

GenieParams make_genie(const SnrSextet &snr, const WiCertificate &cert);

// Mutual-information terms evaluated at one phase realization.
struct LogdetLegs {
    double i_x13_y1 = 0.0;        // I(X1,X3; Y1)
    double i_x2_y2 = 0.0;         // I(X2; Y2)
    double i_x1_y3_given_x3 = 0.0; // I(X1; Y3 | X3)
};

LogdetLegs rate_legs_via_logdet(const SnrSextet &snr, const InputConfig &inp,
                                const ChannelRealization &phases);

// I(X1,X3;Y1) + I(X2;Y2) averaged over the phase of h11 h31* upsilon.
double sum_rate_via_logdet(const SnrSextet &snr, const InputConfig &inp,
                           int quadrature_points = kPhaseQuadraturePoints);

// Phases that put arg(h11 h31* upsilon) at theta, all other phases zero.
ChannelRealization phases_for_theta1(double theta, cplx upsilon);

// Y1 = c1 X1 + c2 X2 + Z1, Y2 = c1 X1 + c2 X2 + Z2 with inputs independent of noise.
struct NoisyPairSetup {
    CMatrix x_cov = CMatrix::Identity(2, 2);
    cplx c1 = 1.0;
    cplx c2 = 1.0;
    double z1_var = 1.0;
    double z2_var = 1.0;
    cplx z12 = 0.0; // E{Z1 Z2*}
};

// Joint covariance of (X1, X2, Y1, Y2).
JointGaussian noisy_pair_joint(const NoisyPairSetup &setup);

// Mean of f over n equally spaced points of [0, 2pi).
template <typename F>
double periodic_average(F &&f, int n) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) acc += f(kTwoPi * k / n);
    return acc / n;
}

// Same as periodic_average for f(t) = f(-t), using half the evaluations. n must be even.
template <typename F>
double periodic_average_even(F &&f, int n) {
    const int half = n / 2;
    double acc = f(0.0) + f(kTwoPi * half / n);
    for (int k = 1; k < half; ++k) acc += 2.0 * f(kTwoPi * k / n);
    return acc / n;
}

} // namespace zicr
