// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/gdof.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace zicr;

TEST(GdofLower, Examples) {
    EXPECT_DOUBLE_EQ(gdof_lower({0.3, 2, 2, 0.3}), 2.4);
    EXPECT_EQ(gdof_lower({0, 0, 0, 0}), 1.0);
    EXPECT_EQ(gdof_lower({0, 1, 1, 0}), 2.0);
    EXPECT_DOUBLE_EQ(gdof_lower({0.1, 1.2, 1.2, 0.1}), 2.0);
}

TEST(GdofLower, RejectsNegativeExponents) {
    EXPECT_THROW(gdof_lower({-0.1, 1, 1, 0}), DomainError);
}

TEST(GdofUpper, Examples) {
    const GdofUpper a = gdof_upper({0.3, 2, 2, 0.3});
    EXPECT_DOUBLE_EQ(a.value, 2.4);
    EXPECT_TRUE(a.valid);

    const GdofUpper b = gdof_upper({0, 1, 1, 0});
    EXPECT_EQ(b.value, 2.0);
    EXPECT_FALSE(b.valid);

    const GdofUpper c = gdof_upper({0.5, 2, 2, 0.5});
    EXPECT_EQ(c.value, 3.0);
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.formula(), 2.0);
}

TEST(GdofMax, Examples) {
    EXPECT_DOUBLE_EQ(gdof_max({0.3, 2, 2, 0.3}).value(), 2.4);
    EXPECT_FALSE(gdof_max({0.5, 2, 2, 0.5}));
    EXPECT_EQ(gdof_max({0, 2, 2, 0}).value(), 3.0);
    EXPECT_FALSE(gdof_max({0.3, 2, 2, 0.2}));
    EXPECT_FALSE(gdof_max({0.3, 2.4, 2, 0.3}));
    EXPECT_EQ(gdof_zic_upper(), 2.0);
}

TEST(GdofReport, CombinesParts) {
    const GdofReport r = gdof_report({0.3, 2, 2, 0.3});
    EXPECT_TRUE(r.conditions_hold);
    EXPECT_TRUE(r.upper_valid);
    EXPECT_DOUBLE_EQ(r.lower, *r.upper);
    EXPECT_DOUBLE_EQ(r.lower, *r.max_certified);

    const GdofReport s = gdof_report({0.5, 2, 2, 0.5});
    EXPECT_FALSE(s.conditions_hold);
    EXPECT_FALSE(s.max_certified);
}

TEST(GdofBounds, SandwichOnRandomExponents) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> al(0.0, 1.2), bg(0.0, 3.0);
    for (int k = 0; k < 100000; ++k) {
        const GdofExponents e{al(rng), bg(rng), bg(rng), al(rng)};
        const double lo = gdof_lower(e);
        const GdofUpper up = gdof_upper(e);
        EXPECT_GE(lo, 0.0);
        EXPECT_LE(lo, up.cutset_leg + 1e-12);
        if (up.valid) {
            EXPECT_LE(lo, up.value + 1e-12);
        }
        if (const auto m = gdof_max(e)) {
            EXPECT_NEAR(lo, *m, 1e-12);
            EXPECT_NEAR(up.value, *m, 1e-12);
        }
    }
}

TEST(GdofBounds, TightnessOnConditionRegion) {
    int hits = 0;
    for (int i = 0; i <= 50; ++i)
        for (int j = 0; j <= 60; ++j)
            for (int k = 0; k <= 60; ++k) {
                const double a = 0.5 * i / 50.0;
                const GdofExponents e{a, 3.0 * j / 60.0, 3.0 * k / 60.0, a};
                if (const auto m = gdof_max(e)) {
                    ++hits;
                    EXPECT_TRUE(gdof_upper(e).valid);
                    EXPECT_NEAR(gdof_lower(e), 1.0 + e.beta - 2.0 * a, 1e-12);
                    EXPECT_NEAR(gdof_upper(e).value, 1.0 + e.beta - 2.0 * a, 1e-12);
                }
            }
    EXPECT_GT(hits, 1000);
}

TEST(GdofBounds, PiecewiseLinearInAlpha) {
    // Second differences vanish away from a finite set of kinks.
    const double h = 1e-4;
    int smooth = 0;
    for (int i = 1; i < 100; ++i) {
        const double a = i / 100.0 + 0.003;
        const auto f = [](double x) { return gdof_lower({x, 2.0, 2.0, x}); };
        const double d2 = f(a + h) - 2.0 * f(a) + f(a - h);
        if (std::abs(d2) < 1e-12) ++smooth;
    }
    EXPECT_GE(smooth, 95);
}

TEST(SweepAlpha, RowsAndMeetingPoint) {
    const auto rows = sweep_alpha(2.0, 2.0, 101);
    ASSERT_EQ(rows.size(), 101u);
    EXPECT_EQ(rows.front().alpha, 0.0);
    EXPECT_EQ(rows.back().alpha, 1.0);
    EXPECT_EQ(rows.front().lower, 3.0);
    EXPECT_EQ(rows.front().upper, 3.0);
    for (const GdofSweepRow &r : rows) {
        EXPECT_EQ(r.zic_bound, 2.0);
        if (r.alpha <= 0.5) {
            EXPECT_NEAR(r.lower, r.upper, 1e-12) << r.alpha;
        }
        EXPECT_EQ(r.max_certified.has_value(), r.alpha < 0.5) << r.alpha;
    }
    EXPECT_EQ(rows[50].upper, 2.0);
    EXPECT_EQ(rows[50].lower, 2.0);
    EXPECT_THROW(sweep_alpha(2.0, 2.0, 1), DomainError);
}

TEST(SnrFromExponents, GdofScaling) {
    // Capacity over log2(snr) approaches the certified GDoF as snr grows.
    const GdofExponents e{0.3, 2.0, 2.0, 0.3};
    const double snr = 1e12;
    const SnrSextet s = snr_from_exponents(e, snr);
    const double ratio = std::log2(1.0 + (s.snr11 + s.snr31) / (1.0 + s.snr21)) / std::log2(snr) +
                         std::log2(1.0 + s.snr22 / (1.0 + s.snr32)) / std::log2(snr);
    EXPECT_NEAR(ratio, *gdof_max(e), 0.05);
}
