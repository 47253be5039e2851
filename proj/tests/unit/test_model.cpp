// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/model.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace zicr;

TEST(SnrFromExponents, ZeroExponentsGiveUnitCrossLinks) {
    const SnrSextet s = snr_from_exponents({0, 0, 0, 0}, 10.0);
    EXPECT_EQ(s, (SnrSextet{10, 1, 1, 10, 1, 1}));
}

TEST(SnrFromExponents, MapsExponentsToLinks) {
    const SnrSextet s = snr_from_exponents({0.3, 2, 2, 0.3}, 100.0);
    EXPECT_NEAR(s.snr21, 3.9810717055349725, 1e-14);
    EXPECT_NEAR(s.snr32, 3.9810717055349725, 1e-14);
    EXPECT_NEAR(s.snr31, 1e4, 1e-9);
    EXPECT_NEAR(s.snr13, 1e4, 1e-9);
    EXPECT_EQ(s.snr11, 100.0);
    EXPECT_EQ(s.snr22, 100.0);
}

TEST(SnrFromExponents, UnitSnrIsFixedPoint) {
    EXPECT_EQ(snr_from_exponents({0.7, 1.3, 2.9, 0.1}, 1.0), (SnrSextet{1, 1, 1, 1, 1, 1}));
}

TEST(SnrFromExponents, RejectsBadSnr) {
    EXPECT_THROW(snr_from_exponents({}, std::numeric_limits<double>::infinity()), DomainError);
    EXPECT_THROW(snr_from_exponents({}, std::nan("")), DomainError);
    EXPECT_THROW(snr_from_exponents({}, 0.0), DomainError);
    EXPECT_THROW(snr_from_exponents({-0.1, 0, 0, 0}, 2.0), DomainError);
}

TEST(SnrFromExponents, MonotoneInSnrForPositiveExponents) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.01, 3.0);
    for (int k = 0; k < 200; ++k) {
        const GdofExponents e{u(rng), u(rng), u(rng), u(rng)};
        const double lo = 1.0 + 10.0 * u(rng);
        const SnrSextet a = snr_from_exponents(e, lo);
        const SnrSextet b = snr_from_exponents(e, lo * 1.5);
        EXPECT_LT(a.snr11, b.snr11);
        EXPECT_LT(a.snr21, b.snr21);
        EXPECT_LT(a.snr31, b.snr31);
        EXPECT_LT(a.snr22, b.snr22);
        EXPECT_LT(a.snr32, b.snr32);
        EXPECT_LT(a.snr13, b.snr13);
    }
}

TEST(Validate, RejectsOutOfRangeFields) {
    EXPECT_THROW(validate(SnrSextet{-1, 0, 0, 0, 0, 0}), DomainError);
    EXPECT_THROW(validate(InputConfig{1.5, 1, 1, 0.0}), DomainError);
    EXPECT_THROW(validate(InputConfig{1, 1, 1, cplx(0.8, 0.8)}), DomainError);
    EXPECT_THROW(validate(GenieParams{1.0, 1.0, 1.1, 0.0}), DomainError);
    EXPECT_THROW(validate(WiCertificate{0.5, -0.1}), DomainError);
    EXPECT_THROW(validate(ChannelRealization{kTwoPi, 0, 0, 0, 0, 0}), DomainError);
    EXPECT_NO_THROW(validate(InputConfig{1, 1, 1, cplx(0.6, 0.8)}));
}

TEST(SampleChannel, DeterministicForSeed) {
    const ChannelRealization a = sample_channel(1234);
    const ChannelRealization b = sample_channel(1234);
    EXPECT_EQ(a.theta11, b.theta11);
    EXPECT_EQ(a.theta13, b.theta13);
    EXPECT_NE(a.theta11, sample_channel(1235).theta11);
}

TEST(SampleChannel, UniformMomentsAndIndependence) {
    std::mt19937_64 rng(derive_seed(42, 0));
    constexpr int n = 100000;
    double sum[6] = {};
    double s11 = 0, s21 = 0, s1121 = 0, q11 = 0, q21 = 0;
    for (int k = 0; k < n; ++k) {
        const ChannelRealization r = sample_channel(rng);
        const double t[6] = {r.theta11, r.theta21, r.theta31, r.theta22, r.theta32, r.theta13};
        for (int i = 0; i < 6; ++i) {
            ASSERT_GE(t[i], 0.0);
            ASSERT_LT(t[i], kTwoPi);
            sum[i] += t[i];
        }
        s11 += r.theta11;
        s21 += r.theta21;
        s1121 += r.theta11 * r.theta21;
        q11 += r.theta11 * r.theta11;
        q21 += r.theta21 * r.theta21;
    }
    const double pi = kTwoPi / 2;
    const double three_sigma = 3.0 * (kTwoPi / std::sqrt(12.0)) / std::sqrt(double(n));
    for (double s : sum) EXPECT_NEAR(s / n, pi, three_sigma);
    const double cov = s1121 / n - (s11 / n) * (s21 / n);
    const double corr = cov / std::sqrt((q11 / n - s11 * s11 / n / n) * (q21 / n - s21 * s21 / n / n));
    EXPECT_NEAR(corr, 0.0, 0.01);
}

TEST(HermitianCov, FactorProductIsPsd) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 300; ++k) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int m = 1 + static_cast<int>(rng() % 8);
        Eigen::MatrixXcd a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = cplx(nd(rng), nd(rng));
        const HermitianCov c = HermitianCov::from_factor(a);
        EXPECT_EQ(c.dim(), n);
        const Eigen::VectorXd ev = c.eigenvalues();
        EXPECT_GE(ev.minCoeff(), -1e-10 * ev.cwiseAbs().maxCoeff());
    }
}

TEST(HermitianCov, RejectsNonHermitianAndIndefinite) {
    CMatrix a(2, 2);
    a << 1.0, cplx(0.2, 0.1), cplx(0.2, 0.1), 1.0;
    EXPECT_THROW(HermitianCov{a}, DomainError);
    CMatrix b(2, 2);
    b << 1.0, 2.0, 2.0, 1.0;
    EXPECT_THROW(HermitianCov{b}, DomainError);
    CMatrix c = CMatrix::Zero(3, 3);
    EXPECT_NO_THROW(HermitianCov{c});
}

TEST(DbConversion, RoundTrips) {
    EXPECT_EQ(db_to_linear(0.0), 1.0);
    EXPECT_NEAR(db_to_linear(-20.0), 0.01, 1e-17);
    EXPECT_NEAR(linear_to_db(db_to_linear(3.7)), 3.7, 1e-13);
}
