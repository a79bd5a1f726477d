#include "tenstruct/unipoly.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tenstruct/error.hpp"

using namespace tenstruct;

namespace {

UnivariatePoly from_roots(const std::vector<double>& roots, double lead = 1.0) {
    std::vector<double> c{lead};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return UnivariatePoly(c);
}

}  // namespace

TEST(UnivariatePoly, TrimsTrailingAndTinyCoefficients) {
    const UnivariatePoly p{1.0, 2.0, 1e-20, 0.0};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(UnivariatePoly{}.is_zero());
    EXPECT_EQ(UnivariatePoly({0.0, 0.0}).degree(), -1);
}

TEST(UnivariatePoly, HornerAndDerivative) {
    const UnivariatePoly p{1.0, -4.0, 10.0};
    EXPECT_DOUBLE_EQ(p(0.2), 0.6);
    EXPECT_EQ(p.derivative(), (UnivariatePoly{-4.0, 20.0}));
}

TEST(UnivariatePoly, RootBoundEnclosesRoots) {
    const auto p = from_roots({-3.0, 0.5, 2.0});
    EXPECT_GT(p.root_bound(), 3.0);
    EXPECT_THROW((void)UnivariatePoly{}.root_bound(), input_error);
}

TEST(RealRoots, SimpleRoots) {
    const auto roots = real_roots(from_roots({-2.0, 0.5, 3.0}));
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_NEAR(roots[0].value, -2.0, 1e-12);
    EXPECT_NEAR(roots[1].value, 0.5, 1e-12);
    EXPECT_NEAR(roots[2].value, 3.0, 1e-12);
    for (const auto& r : roots) EXPECT_EQ(r.multiplicity, 1);
}

TEST(RealRoots, DoubleRootIsReportedOnce) {
    const auto roots = real_roots(from_roots({1.0, 1.0, -2.0}));
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[0].value, -2.0, 1e-12);
    EXPECT_NEAR(roots[1].value, 1.0, 1e-8);
    EXPECT_EQ(roots[1].multiplicity, 2);
}

TEST(RealRoots, NoRealRoots) {
    EXPECT_TRUE(real_roots(UnivariatePoly{1.0, -4.0, 10.0}).empty());
    EXPECT_TRUE(real_roots(UnivariatePoly{3.0}).empty());
}

TEST(RealRoots, ZeroPolynomialThrows) {
    EXPECT_THROW((void)real_roots(UnivariatePoly{}), input_error);
}

TEST(RealRoots, RandomIntegerRootSetsAreRecovered) {
    oracle::Gen gen(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int deg = gen.integer(1, 7);
        auto roots = gen.distinct_integers(deg, -6, 6);
        std::sort(roots.begin(), roots.end());
        const auto found = real_roots(from_roots(roots, gen.uniform(0.5, 3.0) * (trial % 2 ? -1 : 1)));
        ASSERT_EQ(found.size(), roots.size()) << "trial " << trial;
        for (std::size_t k = 0; k < roots.size(); ++k) EXPECT_NEAR(found[k].value, roots[k], 1e-9);
    }
}

TEST(RealRoots, RootsOfMixedRealAndComplexFactors) {
    // (mu^2 + 1)(mu - 1)(mu + 4)
    auto p = from_roots({1.0, -4.0});
    std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
    std::vector<double> q(c.size() + 2, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        q[k] += c[k];
        q[k + 2] += c[k];
    }
    const auto roots = real_roots(UnivariatePoly(q));
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_NEAR(roots[0].value, -4.0, 1e-12);
    EXPECT_NEAR(roots[1].value, 1.0, 1e-12);
}

TEST(NonnegOnReals, PositiveQuadraticReportsMinimum) {
    const auto v = nonneg_on_reals(UnivariatePoly{1.0, -4.0, 10.0});
    EXPECT_TRUE(v.nonnegative);
    EXPECT_NEAR(v.mu, 0.2, 1e-12);
    EXPECT_NEAR(v.value, 0.6, 1e-12);
}

TEST(NonnegOnReals, NegativeSomewhere) {
    const UnivariatePoly p{1.0, -4.0, 3.0};
    const auto v = nonneg_on_reals(p);
    EXPECT_FALSE(v.nonnegative);
    EXPECT_LT(p(v.mu), 0.0);
    EXPECT_DOUBLE_EQ(v.value, p(v.mu));
}

TEST(NonnegOnReals, OddDegreeAndNegativeLeading) {
    const UnivariatePoly odd{1.0, 0.0, 0.0, 1.0};
    const auto a = nonneg_on_reals(odd);
    EXPECT_FALSE(a.nonnegative);
    EXPECT_LT(odd(a.mu), 0.0);
    const UnivariatePoly neg{1.0, 0.0, -1.0};
    const auto b = nonneg_on_reals(neg);
    EXPECT_FALSE(b.nonnegative);
    EXPECT_LT(neg(b.mu), 0.0);
}

TEST(NonnegOnReals, ConstantsAndZero) {
    EXPECT_TRUE(nonneg_on_reals(UnivariatePoly{}).nonnegative);
    EXPECT_TRUE(nonneg_on_reals(UnivariatePoly{2.0}).nonnegative);
    EXPECT_FALSE(nonneg_on_reals(UnivariatePoly{-2.0}).nonnegative);
}

TEST(NonnegOnReals, PerfectSquareTouchingZeroIsNonnegative) {
    // (mu - 1)^2 (mu + 2)^2
    const auto p = from_roots({1.0, 1.0, -2.0, -2.0});
    EXPECT_TRUE(nonneg_on_reals(p).nonnegative);
}

TEST(NonnegOnReals, AgreesWithDenseGridOnRandomQuartics) {
    oracle::Gen gen(22);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> c = gen.vec(5, -2.0, 2.0);
        c[4] = std::abs(c[4]) + 0.1;
        const UnivariatePoly p(c);
        const auto v = nonneg_on_reals(p);
        const double b = p.root_bound();
        double grid_min = 1e300;
        for (int k = 0; k <= 20000; ++k) grid_min = std::min(grid_min, p(-b + 2.0 * b * k / 20000));
        if (v.nonnegative) {
            EXPECT_GE(grid_min, -1e-9) << "trial " << trial;
        } else {
            EXPECT_LT(p(v.mu), 0.0);
        }
        if (grid_min < -1e-6) EXPECT_FALSE(v.nonnegative);
    }
}
