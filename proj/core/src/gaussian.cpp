// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/capacity.hpp>
#include <zicr/gaussian.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace zicr {

namespace {

const double kLog2PiE = std::log2(kTwoPi * 0.5 * std::exp(1.0));

// Base sources: X1, X2, X3, Z1, Z2, Z3, W1, W2.
enum Base : int { bX1, bX2, bX3, bZ1, bZ2, bZ3, bW1, bW2, kBaseDim };

using BaseRow = Eigen::Matrix<cplx, 1, kBaseDim>;
using BaseCov = Eigen::Matrix<cplx, kBaseDim, kBaseDim>;

cplx gain(double snr, double theta) { return std::polar(std::sqrt(snr), theta); }

BaseCov base_covariance(const InputConfig &inp, const GenieParams &g) {
    BaseCov k = BaseCov::Zero();
    k(bX1, bX1) = inp.p1;
    k(bX2, bX2) = inp.p2;
    k(bX3, bX3) = inp.p3;
    k(bX1, bX3) = inp.upsilon * std::sqrt(inp.p1 * inp.p3);
    k(bX3, bX1) = std::conj(k(bX1, bX3));
    for (int i = bZ1; i < kBaseDim; ++i) k(i, i) = 1.0;
    // E{W_k Z_k*} = vtilde_k
    k(bW1, bZ1) = g.vtilde1;
    k(bZ1, bW1) = std::conj(g.vtilde1);
    k(bW2, bZ2) = g.vtilde2;
    k(bZ2, bW2) = std::conj(g.vtilde2);
    return k;
}

BaseRow row_for(Var v, const SnrSextet &s, const GenieParams &g, const ChannelRealization &ph) {
    BaseRow r = BaseRow::Zero();
    const cplx h11 = gain(s.snr11, ph.theta11);
    const cplx h21 = gain(s.snr21, ph.theta21);
    const cplx h31 = gain(s.snr31, ph.theta31);
    const cplx h22 = gain(s.snr22, ph.theta22);
    const cplx h32 = gain(s.snr32, ph.theta32);
    const cplx h13 = gain(s.snr13, ph.theta13);
    switch (v) {
    case Var::X1: r(bX1) = 1.0; break;
    case Var::X2: r(bX2) = 1.0; break;
    case Var::X3: r(bX3) = 1.0; break;
    case Var::Y1:
        r(bX1) = h11;
        r(bX2) = h21;
        r(bX3) = h31;
        r(bZ1) = 1.0;
        break;
    case Var::Y2:
        r(bX2) = h22;
        r(bX3) = h32;
        r(bZ2) = 1.0;
        break;
    case Var::Y3:
        r(bX1) = h13;
        r(bZ3) = 1.0;
        break;
    case Var::S1:
        r(bX1) = h11;
        r(bX3) = h31;
        r(bW1) = g.eta1;
        break;
    case Var::S2:
        r(bX2) = h22;
        r(bW2) = g.eta2;
        break;
    }
    return r;
}

void check_disjoint(const LabelSet &a, const LabelSet &b) {
    for (Var x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            throw DomainError("label sets must be disjoint, repeated " + std::string(to_string(x)));
}

LabelSet join(const LabelSet &a, const LabelSet &b) {
    LabelSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

// Definiteness is judged on the unit-diagonal rescaling D^-1/2 K D^-1/2, so a
// strong link does not make a weaker coordinate look degenerate.
double log2_det_pd(const CMatrix &k) {
    const Eigen::Index n = k.rows();
    const Eigen::VectorXd diag = k.diagonal().real();
    if (!(diag.minCoeff() > 0.0)) throw DegenerateEntropyError("variance is not positive");
    if (n == 1) return std::log2(diag(0));
    if (n == 2) {
        const double ad = diag(0) * diag(1);
        const double det = ad - std::norm(k(0, 1));
        if (!(det > kPdTolerance * ad)) throw DegenerateEntropyError("2x2 submatrix is not positive definite");
        return std::log2(det);
    }
    const Eigen::VectorXd s = diag.cwiseSqrt().cwiseInverse();
    const CMatrix corr = s.asDiagonal() * k * s.asDiagonal();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(corr, Eigen::EigenvaluesOnly);
    if (!(es.eigenvalues().minCoeff() > kPdTolerance))
        throw DegenerateEntropyError("submatrix is not positive definite");
    // Cholesky pivots keep full relative accuracy where the smallest eigenvalue does not.
    const Eigen::LLT<CMatrix> llt(k);
    if (llt.info() != Eigen::Success) throw DegenerateEntropyError("Cholesky factorization failed");
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().real().array().log2().sum();
}

} // namespace

std::string_view to_string(Var v) noexcept {
    switch (v) {
    case Var::X1: return "X1";
    case Var::X2: return "X2";
    case Var::X3: return "X3";
    case Var::Y1: return "Y1";
    case Var::Y2: return "Y2";
    case Var::Y3: return "Y3";
    case Var::S1: return "S1";
    case Var::S2: return "S2";
    }
    return "?";
}

Eigen::Index JointGaussian::index_of(Var v) const {
    const auto it = std::find(labels.begin(), labels.end(), v);
    if (it == labels.end()) throw DomainError("label " + std::string(to_string(v)) + " not in joint model");
    return static_cast<Eigen::Index>(it - labels.begin());
}

JointGaussian build_joint(const SnrSextet &snr, const InputConfig &inp, const GenieParams &genie,
                          const ChannelRealization &phases, const LabelSet &outputs) {
    validate(snr);
    validate(inp);
    validate(genie);
    if (outputs.empty() || outputs.size() > 8) throw DomainError("joint model needs 1 to 8 outputs");
    check_disjoint(outputs, {});

    const BaseCov ku = base_covariance(inp, genie);
    Eigen::Matrix<cplx, Eigen::Dynamic, kBaseDim, 0, kMaxDim, kBaseDim> m(
        static_cast<Eigen::Index>(outputs.size()), kBaseDim);
    for (std::size_t i = 0; i < outputs.size(); ++i)
        m.row(static_cast<Eigen::Index>(i)) = row_for(outputs[i], snr, genie, phases);
    const decltype(m) mk = m * ku;
    return {HermitianCov(CMatrix(mk * m.adjoint())), outputs};
}

JointGaussian build_joint(const SnrSextet &snr, const InputConfig &inp, const GenieParams &genie,
                          const ChannelRealization &phases) {
    return build_joint(snr, inp, genie, phases,
                       {Var::X1, Var::X2, Var::X3, Var::Y1, Var::Y2, Var::Y3, Var::S1, Var::S2});
}

CMatrix block(const JointGaussian &jg, const LabelSet &rows, const LabelSet &cols) {
    CMatrix k(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Eigen::Index ri = jg.index_of(rows[i]);
        for (std::size_t j = 0; j < cols.size(); ++j)
            k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jg.cov(ri, jg.index_of(cols[j]));
    }
    return k;
}

double logdet_entropy(const JointGaussian &jg, const LabelSet &subset) {
    if (subset.empty()) throw DomainError("entropy of an empty label set");
    if (subset.size() > kMaxDim) throw DomainError("entropy subset exceeds 8 coordinates");
    check_disjoint(subset, {});
    return static_cast<double>(subset.size()) * kLog2PiE + log2_det_pd(block(jg, subset, subset));
}

double scalar_entropy(double variance) {
    if (!(variance > 0.0)) throw DegenerateEntropyError("variance is not positive");
    return kLog2PiE + std::log2(variance);
}

HermitianCov conditional_covariance(const JointGaussian &jg, const LabelSet &a, const LabelSet &given) {
    if (a.empty()) throw DomainError("conditional covariance of an empty label set");
    check_disjoint(a, given);
    const CMatrix kaa = block(jg, a, a);
    if (given.empty()) return HermitianCov(kaa);
    const CMatrix kcc = block(jg, given, given);
    log2_det_pd(kcc); // rejects a singular conditioning block
    const CMatrix kac = block(jg, a, given);
    const Eigen::LLT<CMatrix> llt(kcc);
    const CMatrix schur = kaa - kac * llt.solve(CMatrix(kac.adjoint()));
    // Clear rounding residue so the Hermitian check sees an exact adjoint pair.
    return HermitianCov(CMatrix(0.5 * (schur + schur.adjoint())));
}

double conditional_entropy(const JointGaussian &jg, const LabelSet &a, const LabelSet &given) {
    check_disjoint(a, given);
    const double joint = logdet_entropy(jg, join(a, given));
    return given.empty() ? joint : joint - logdet_entropy(jg, given);
}

double conditional_mi(const JointGaussian &jg, const LabelSet &a, const LabelSet &b,
                      const LabelSet &given) {
    check_disjoint(a, b);
    check_disjoint(a, given);
    check_disjoint(b, given);
    if (a.empty() || b.empty()) return 0.0;
    const double hc = given.empty() ? 0.0 : logdet_entropy(jg, given);
    const double mi = logdet_entropy(jg, join(a, given)) + logdet_entropy(jg, join(b, given)) -
                      logdet_entropy(jg, join(join(a, b), given)) - hc;
    if (mi < -kMiClamp)
        throw InternalConsistencyError("negative mutual information " + std::to_string(mi));
    return std::max(mi, 0.0);
}

GenieParams make_genie(const SnrSextet &snr, const WiCertificate &cert) {
    validate(snr);
    validate(cert);
    if (cert.beta1 <= 0.0 || cert.beta2 <= 0.0)
        throw GenieDegenerateError("genie needs beta1 > 0 and beta2 > 0");
    if (!wi_conditions_hold(snr, cert))
        throw DomainError("certificate does not satisfy the weak-interference conditions");

    GenieParams g;
    g.vtilde1 = std::sqrt(cert.beta1);
    g.vtilde2 = std::sqrt(cert.beta2);
    g.eta1 = (1.0 + snr.snr21) / g.vtilde1.real();
    g.eta2 = (1.0 + snr.snr32) / g.vtilde2.real();

    // Relative slack absorbs the rounding of sqrt(beta)^2 against beta.
    constexpr double slack = 1e-12;
    const double lhs_a = snr.snr32 * std::norm(g.eta1);
    const double rhs_a = snr.snr31 * (1.0 - std::norm(g.vtilde2)) - 2.0 * snr.snr32 * snr.snr11;
    const double lhs_b = snr.snr21 * std::norm(g.eta2);
    const double rhs_b = snr.snr22 * (1.0 - std::norm(g.vtilde1));
    if (lhs_a > rhs_a + slack * std::max(lhs_a, 1.0) || lhs_b > rhs_b + slack * std::max(lhs_b, 1.0))
        throw InternalConsistencyError("genie parameters violate the magnitude conditions");
    return g;
}

LogdetLegs rate_legs_via_logdet(const SnrSextet &snr, const InputConfig &inp,
                                const ChannelRealization &phases) {
    const JointGaussian jg = build_joint(snr, inp, GenieParams{}, phases,
                                         {Var::X1, Var::X2, Var::X3, Var::Y1, Var::Y2, Var::Y3});
    // Zero-power inputs are deterministic and drop out of every set. A fully
    // correlated X3 is a function of X1 and drops out as well.
    const bool has1 = inp.p1 > 0.0;
    const bool has2 = inp.p2 > 0.0;
    const bool has3 = inp.p3 > 0.0 && !(has1 && std::abs(inp.upsilon) >= 1.0 - 1e-12);

    LabelSet x13;
    if (has1) x13.push_back(Var::X1);
    if (has3) x13.push_back(Var::X3);
    LabelSet x2;
    if (has2) x2.push_back(Var::X2);
    LabelSet x1;
    if (has1) x1.push_back(Var::X1);
    LabelSet x3;
    if (has3) x3.push_back(Var::X3);
    const bool x1_known_from_x3 = has1 && inp.p3 > 0.0 && !has3;

    LogdetLegs legs;
    legs.i_x13_y1 = conditional_mi(jg, x13, {Var::Y1}, {});
    legs.i_x2_y2 = conditional_mi(jg, x2, {Var::Y2}, {});
    legs.i_x1_y3_given_x3 = x1_known_from_x3 ? 0.0 : conditional_mi(jg, x1, {Var::Y3}, x3);
    return legs;
}

ChannelRealization phases_for_theta1(double theta, cplx upsilon) {
    ChannelRealization ph;
    double t = std::fmod(theta - std::arg(upsilon), kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    ph.theta11 = t;
    return ph;
}

double sum_rate_via_logdet(const SnrSextet &snr, const InputConfig &inp, int quadrature_points) {
    validate(inp);
    if (quadrature_points < 1) throw DomainError("quadrature needs at least one point");
    auto at = [&](const ChannelRealization &ph) {
        const LogdetLegs legs = rate_legs_via_logdet(snr, inp, ph);
        return legs.i_x13_y1 + legs.i_x2_y2;
    };
    if (inp.upsilon == cplx(0.0) || inp.p1 == 0.0 || inp.p3 == 0.0) return at(ChannelRealization{});
    return periodic_average([&](double t) { return at(phases_for_theta1(t, inp.upsilon)); },
                            quadrature_points);
}

JointGaussian noisy_pair_joint(const NoisyPairSetup &s) {
    if (s.x_cov.rows() != 2 || s.x_cov.cols() != 2) throw DomainError("noisy pair input covariance must be 2x2");
    Eigen::Matrix4cd ku = Eigen::Matrix4cd::Zero();
    ku.topLeftCorner<2, 2>() = s.x_cov;
    ku(2, 2) = s.z1_var;
    ku(3, 3) = s.z2_var;
    ku(2, 3) = s.z12;
    ku(3, 2) = std::conj(s.z12);
    HermitianCov base{CMatrix(ku)}; // rejects invalid setups

    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 0) = s.c1;
    m(2, 1) = s.c2;
    m(2, 2) = 1.0;
    m(3, 0) = s.c1;
    m(3, 1) = s.c2;
    m(3, 3) = 1.0;
    return {HermitianCov(CMatrix(m * base.entries() * m.adjoint())), {Var::X1, Var::X2, Var::Y1, Var::Y2}};
}

} // namespace zicr
