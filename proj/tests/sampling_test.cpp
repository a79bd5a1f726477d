#include "tenstruct/sampling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace tenstruct;

TEST(Sampling, TrialEngineIsDeterministicAndKeyed) {
    auto a = trial_engine(7, streams::kPsdSphere, 3);
    auto b = trial_engine(7, streams::kPsdSphere, 3);
    auto c = trial_engine(7, streams::kPsdSphere, 4);
    auto d = trial_engine(7, streams::kCopositive, 3);
    const auto va = a();
    EXPECT_EQ(va, b());
    EXPECT_NE(va, c());
    EXPECT_NE(va, d());
}

TEST(Sampling, Uniform01StaysInRange) {
    auto rng = trial_engine(1, 0, 0);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = uniform01(rng);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 10000, 0.5, 0.02);
}

TEST(Sampling, SphereSamplesHaveUnitNorm) {
    auto rng = trial_engine(2, 0, 0);
    for (int i = 0; i < 200; ++i) {
        const auto x = unit_sphere_sample(rng, 5);
        EXPECT_NEAR(std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0)), 1.0, 1e-14);
    }
}

TEST(Sampling, SimplexSamplesAreNonnegativeAndSumToOne) {
    auto rng = trial_engine(3, 0, 0);
    for (int i = 0; i < 200; ++i) {
        const auto x = simplex_sample(rng, 4);
        for (double v : x) EXPECT_GE(v, 0.0);
        EXPECT_NEAR(std::accumulate(x.begin(), x.end(), 0.0), 1.0, 1e-14);
    }
}

TEST(Sampling, NormalHasRoughlyUnitVariance) {
    auto rng = trial_engine(4, 0, 0);
    double s = 0.0;
    double s2 = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double z = standard_normal(rng);
        s += z;
        s2 += z * z;
    }
    EXPECT_NEAR(s / n, 0.0, 0.03);
    EXPECT_NEAR(s2 / n, 1.0, 0.05);
}
