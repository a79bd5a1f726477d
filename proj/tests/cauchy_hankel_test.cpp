#include "tenstruct/cauchy_hankel.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tenstruct/error.hpp"
#include "tenstruct/spectra.hpp"

using namespace tenstruct;

TEST(CauchyHankelBuild, EntryFormula) {
    const auto spec = cauchy_hankel::build(1.0, 1.0, 4, 3);
    EXPECT_DOUBLE_EQ(spec.entry(std::vector<int>{1, 1, 1, 1}), 0.2);
    const auto t = cauchy_hankel::dense(cauchy_hankel::build(0.5, 1.0, 2, 2));
    EXPECT_DOUBLE_EQ(t.entry({1, 1}), 1.0 / 2.5);
    EXPECT_DOUBLE_EQ(t.entry({1, 2}), 1.0 / 3.5);
    EXPECT_DOUBLE_EQ(t.entry({2, 2}), 1.0 / 4.5);
}

TEST(CauchyHankelBuild, SingularDenominatorNamesSum) {
    try {
        (void)cauchy_hankel::build(-4.0, 1.0, 4, 3);
        FAIL() << "expected degenerate_generator_error";
    } catch (const degenerate_generator_error& e) {
        EXPECT_NE(std::string(e.what()).find("s = 4"), std::string::npos);
    }
    EXPECT_THROW((void)cauchy_hankel::build(1.0, 0.0, 4, 3), degenerate_generator_error);
    EXPECT_THROW((void)cauchy_hankel::build(1.0, 1.0, 1, 3), input_error);
}

TEST(CauchyHankelConvert, CauchyGenerator) {
    const auto c = cauchy_hankel::as_cauchy(cauchy_hankel::build(1.0, 1.0, 4, 3));
    EXPECT_EQ(c.c(), (std::vector<double>{1.25, 2.25, 3.25}));
    EXPECT_EQ(c.d(), (std::vector<double>{1.0, 1.0, 1.0}));
    EXPECT_EQ(cauchy_hankel::as_cauchy(cauchy_hankel::build(0.5, 1.0, 2, 2)).c(),
              (std::vector<double>{1.25, 2.25}));
}

TEST(CauchyHankelConvert, HankelGenerator) {
    const auto h = cauchy_hankel::as_hankel(cauchy_hankel::build(1.0, 1.0, 4, 3));
    ASSERT_EQ(h.v().size(), 9u);
    for (int k = 0; k < 9; ++k) EXPECT_DOUBLE_EQ(h.v()[k], 1.0 / (5 + k));
    for (int k = 0; k + 1 < 9; ++k) EXPECT_GT(h.v()[k], h.v()[k + 1]);
}

TEST(CauchyHankelConvert, ThreeExpansionsAgree) {
    oracle::Gen gen(51);
    int built = 0;
    while (built < 50) {
        const int m = gen.integer(1, 2) * 2;
        const int n = gen.integer(2, 4);
        const double g = gen.uniform(-10.0, 10.0);
        const double h = gen.uniform(0.2, 2.0) * (gen.integer(0, 1) ? 1 : -1);
        std::optional<CauchyHankelSpec> spec;
        try {
            spec = cauchy_hankel::build(g, h, m, n);
        } catch (const degenerate_generator_error&) {
            continue;
        }
        ++built;
        const auto direct = cauchy_hankel::dense(*spec);
        // Skip near-singular denominators; all three paths still agree relatively.
        double scale = 1.0;
        for (double v : direct.values()) scale = std::max(scale, std::abs(v));
        EXPECT_LE(max_abs_diff(direct, cauchy::dense(cauchy_hankel::as_cauchy(*spec))), 1e-14 * scale);
        EXPECT_LE(max_abs_diff(direct, hankel::dense(cauchy_hankel::as_hankel(*spec))), 1e-14 * scale);
    }
}

TEST(CauchyHankelPd, ClosedForm) {
    EXPECT_TRUE(cauchy_hankel::is_pd(cauchy_hankel::build(1.0, 1.0, 4, 3)));
    EXPECT_FALSE(cauchy_hankel::is_pd(cauchy_hankel::build(-4.5, 1.0, 4, 3)));
    EXPECT_TRUE(cauchy_hankel::is_pd(cauchy_hankel::build(13.0, -1.0, 4, 3)));
    EXPECT_THROW((void)cauchy_hankel::is_pd(cauchy_hankel::build(1.0, 1.0, 3, 3)), unsupported_query_error);
}

TEST(CauchyHankelPd, NonPdHasNegativeCoordinateValue) {
    const auto spec = cauchy_hankel::build(-4.5, 1.0, 4, 3);
    EXPECT_DOUBLE_EQ(tenstruct::apply(cauchy_hankel::dense(spec), std::vector<double>{1.0, 0.0, 0.0}), -2.0);
}

TEST(CauchyHankelPd, PdSpecHasNoSampledNonpositiveValue) {
    const auto t = cauchy_hankel::dense(cauchy_hankel::build(13.0, -1.0, 4, 3));
    EXPECT_FALSE(psd_probe(t, 10000, 1).violated);
}

TEST(CauchyHankelPd, PdImpliesPositiveDistinctCauchyGenerator) {
    for (int g = -10; g <= 10; ++g) {
        for (double h : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
            std::optional<CauchyHankelSpec> spec;
            try {
                spec = cauchy_hankel::build(g, h, 4, 3);
            } catch (const degenerate_generator_error&) {
                continue;
            }
            if (!cauchy_hankel::is_pd(*spec)) continue;
            const auto c = cauchy_hankel::as_cauchy(*spec);
            EXPECT_TRUE(cauchy::is_pd(c)) << "g=" << g << " h=" << h;
        }
    }
}

TEST(OrthantPair, BoundaryPairsFirstThenStrictlyOrdered) {
    const auto [x0, y0] = cauchy_hankel::orthant_pair(3, 9, 0);
    EXPECT_EQ(x0, (std::vector<double>{1, 0, 0}));
    EXPECT_EQ(y0, (std::vector<double>{0, 0, 0}));
    const auto [x1, y1] = cauchy_hankel::orthant_pair(3, 9, 1);
    EXPECT_EQ(x1, (std::vector<double>{0, 0, 1}));
    for (std::uint64_t k = 2; k < 500; ++k) {
        const auto [x, y] = cauchy_hankel::orthant_pair(3, 9, k);
        bool differs = false;
        for (int i = 0; i < 3; ++i) {
            EXPECT_GE(y[i], 0.0);
            EXPECT_GE(x[i], y[i]);
            differs = differs || x[i] > y[i];
        }
        EXPECT_TRUE(differs);
    }
}

TEST(Monotone, PdSpecHasNoViolation) {
    const auto v = cauchy_hankel::check_strict_monotone_on_orthant(cauchy_hankel::build(1.0, 1.0, 4, 3), 10000, 0);
    EXPECT_FALSE(v.violated);
    EXPECT_EQ(v.pairs_evaluated, 10002u);
}

TEST(Monotone, NonPdSpecFailsAtFirstBoundaryPair) {
    const auto v = cauchy_hankel::check_strict_monotone_on_orthant(cauchy_hankel::build(-4.5, 1.0, 4, 3), 100, 0);
    ASSERT_TRUE(v.violated);
    EXPECT_EQ(v.x, (std::vector<double>{1, 0, 0}));
    EXPECT_EQ(v.y, (std::vector<double>{0, 0, 0}));
}

TEST(Monotone, UpperDenominatorNegativeFailsAtLastCoordinate) {
    // g + mh = 7.5 > 0 but g + nmh = -0.5 < 0.
    const auto v = cauchy_hankel::check_strict_monotone_on_orthant(cauchy_hankel::build(11.5, -1.0, 4, 3), 100, 0);
    ASSERT_TRUE(v.violated);
    EXPECT_EQ(v.x, (std::vector<double>{0, 0, 1}));
}
