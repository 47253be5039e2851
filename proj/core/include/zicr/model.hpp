// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/errors.hpp>

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <random>

namespace zicr {

using cplx = std::complex<double>;
inline constexpr int kMaxDim = 8;

// Covariances never exceed 8x8, so storage stays on the stack.
using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Link SNRs in linear scale. snrLK is the gain from transmitter L to receiver K,
// where node 3 is the relay.
struct SnrSextet {
    double snr11 = 0.0;
    double snr21 = 0.0;
    double snr31 = 0.0;
    double snr22 = 0.0;
    double snr32 = 0.0;
    double snr13 = 0.0;

    bool operator==(const SnrSextet &) const = default;
};

struct GdofExponents {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double lambda = 0.0;

    bool operator==(const GdofExponents &) const = default;
};

// Input powers and the X1/X3 correlation coefficient.
struct InputConfig {
    double p1 = 1.0;
    double p2 = 1.0;
    double p3 = 1.0;
    cplx upsilon = 0.0;

    static InputConfig full_power() { return {}; }
};

struct GenieParams {
    cplx eta1 = 0.0;
    cplx eta2 = 0.0;
    cplx vtilde1 = 0.0;
    cplx vtilde2 = 0.0;
};

struct WiCertificate {
    double beta1 = 0.0;
    double beta2 = 0.0;
};

struct ChannelRealization {
    double theta11 = 0.0;
    double theta21 = 0.0;
    double theta31 = 0.0;
    double theta22 = 0.0;
    double theta32 = 0.0;
    double theta13 = 0.0;
};

void validate(const SnrSextet &snr);
void validate(const GdofExponents &exp);
void validate(const InputConfig &inp);
void validate(const GenieParams &genie);
void validate(const WiCertificate &cert);
void validate(const ChannelRealization &phases);

bool is_valid(const SnrSextet &snr) noexcept;

// Small dense Hermitian PSD matrix. Construction checks both properties.
class HermitianCov {
  public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kPsdTol = 1e-10;

    HermitianCov() = default;
    explicit HermitianCov(CMatrix entries);

    static HermitianCov from_factor(const Eigen::MatrixXcd &a);

    Eigen::Index dim() const { return entries_.rows(); }
    const CMatrix &entries() const { return entries_; }
    cplx operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    Eigen::VectorXd eigenvalues() const;

  private:
    CMatrix entries_;
};

// (SNR, SNR^a, SNR^b, SNR, SNR^l, SNR^g) for (11, 21, 31, 22, 32, 13).
SnrSextet snr_from_exponents(const GdofExponents &exp, double snr);

ChannelRealization sample_channel(std::uint64_t seed);
ChannelRealization sample_channel(std::mt19937_64 &rng);

// Deterministic sub-seed for stream `stream` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

} // namespace zicr
