// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/model.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace zicr {

namespace {

void require_nonneg(double v, const char *name) {
    if (!std::isfinite(v) || v < 0.0)
        throw DomainError(std::string(name) + " must be finite and >= 0, got " + std::to_string(v));
}

void require_unit_interval(double v, const char *name) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(v));
}

void require_phase(double v, const char *name) {
    if (!std::isfinite(v) || v < 0.0 || v >= kTwoPi)
        throw DomainError(std::string(name) + " must lie in [0, 2pi), got " + std::to_string(v));
}

void require_unit_disk(cplx v, const char *name) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > 1.0)
        throw DomainError(std::string(name) + " must have magnitude <= 1");
}

// Uniform on [0,1) from the top 53 bits; portable across standard libraries.
double unit_uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

void validate(const SnrSextet &snr) {
    require_nonneg(snr.snr11, "snr11");
    require_nonneg(snr.snr21, "snr21");
    require_nonneg(snr.snr31, "snr31");
    require_nonneg(snr.snr22, "snr22");
    require_nonneg(snr.snr32, "snr32");
    require_nonneg(snr.snr13, "snr13");
}

bool is_valid(const SnrSextet &snr) noexcept {
    for (double v : {snr.snr11, snr.snr21, snr.snr31, snr.snr22, snr.snr32, snr.snr13})
        if (!std::isfinite(v) || v < 0.0) return false;
    return true;
}

void validate(const GdofExponents &exp) {
    require_nonneg(exp.alpha, "alpha");
    require_nonneg(exp.beta, "beta");
    require_nonneg(exp.gamma, "gamma");
    require_nonneg(exp.lambda, "lambda");
}

void validate(const InputConfig &inp) {
    require_unit_interval(inp.p1, "p1");
    require_unit_interval(inp.p2, "p2");
    require_unit_interval(inp.p3, "p3");
    require_unit_disk(inp.upsilon, "upsilon");
}

void validate(const GenieParams &genie) {
    require_unit_disk(genie.vtilde1, "vtilde1");
    require_unit_disk(genie.vtilde2, "vtilde2");
    for (cplx e : {genie.eta1, genie.eta2})
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw DomainError("genie eta must be finite");
}

void validate(const WiCertificate &cert) {
    require_unit_interval(cert.beta1, "beta1");
    require_unit_interval(cert.beta2, "beta2");
}

void validate(const ChannelRealization &ph) {
    require_phase(ph.theta11, "theta11");
    require_phase(ph.theta21, "theta21");
    require_phase(ph.theta31, "theta31");
    require_phase(ph.theta22, "theta22");
    require_phase(ph.theta32, "theta32");
    require_phase(ph.theta13, "theta13");
}

HermitianCov::HermitianCov(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw DomainError("covariance must be a non-empty square matrix");
    if (!entries_.allFinite()) throw DomainError("covariance has non-finite entries");

    const double scale = std::max(entries_.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol * scale) throw DomainError("covariance is not Hermitian");
    entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();

    const Eigen::VectorXd ev = eigenvalues();
    const double top = std::max(ev.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    if (ev.minCoeff() < -kPsdTol * top)
        throw DomainError("covariance is not positive semidefinite (min eigenvalue " +
                          std::to_string(ev.minCoeff()) + ")");
}

HermitianCov HermitianCov::from_factor(const Eigen::MatrixXcd &a) {
    if (a.rows() > kMaxDim) throw DomainError("covariance dimension exceeds 8");
    return HermitianCov(CMatrix(a * a.adjoint()));
}

Eigen::VectorXd HermitianCov::eigenvalues() const {
    if (entries_.rows() == 1) return Eigen::VectorXd::Constant(1, entries_(0, 0).real());
    if (entries_.rows() == 2) {
        const double a = entries_(0, 0).real();
        const double d = entries_(1, 1).real();
        const double r = std::hypot(a - d, 2.0 * std::abs(entries_(0, 1)));
        Eigen::VectorXd ev(2);
        ev << 0.5 * (a + d - r), 0.5 * (a + d + r);
        return ev;
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(entries_, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

SnrSextet snr_from_exponents(const GdofExponents &exp, double snr) {
    if (!std::isfinite(snr) || snr <= 0.0) throw DomainError("snr must be finite and > 0");
    validate(exp);
    return SnrSextet{snr,
                     std::pow(snr, exp.alpha),
                     std::pow(snr, exp.beta),
                     snr,
                     std::pow(snr, exp.lambda),
                     std::pow(snr, exp.gamma)};
}

ChannelRealization sample_channel(std::mt19937_64 &rng) {
    ChannelRealization r;
    r.theta11 = kTwoPi * unit_uniform(rng);
    r.theta21 = kTwoPi * unit_uniform(rng);
    r.theta31 = kTwoPi * unit_uniform(rng);
    r.theta22 = kTwoPi * unit_uniform(rng);
    r.theta32 = kTwoPi * unit_uniform(rng);
    r.theta13 = kTwoPi * unit_uniform(rng);
    // 2pi * (1 - 2^-53) can round up to 2pi.
    for (double *t : {&r.theta11, &r.theta21, &r.theta31, &r.theta22, &r.theta32, &r.theta13})
        if (*t >= kTwoPi) *t = 0.0;
    return r;
}

ChannelRealization sample_channel(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_channel(rng);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

} // namespace zicr
