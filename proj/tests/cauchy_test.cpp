#include "tenstruct/cauchy.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "tenstruct/error.hpp"
#include "tenstruct/spectra.hpp"

using namespace tenstruct;

namespace {

double cauchy_entry(const std::vector<double>& c, const std::vector<double>& d, const std::vector<int>& idx) {
    double num = 1.0;
    double den = 0.0;
    for (int i : idx) {
        num *= d[i - 1];
        den += c[i - 1];
    }
    return num / den;
}

// Smallest eigenvalue of the expanded 2-tensor (matrix), by Eigen.
double min_matrix_eigenvalue(const SymmetricTensor& t) {
    const int n = t.dim();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = t.entry({i + 1, j + 1});
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().minCoeff();
}

}  // namespace

TEST(CauchyBuild, TwoByTwoMatrix) {
    const auto spec = cauchy::build({1.0, 2.0}, {1.0, 1.0}, 2);
    const auto t = cauchy::dense(spec);
    EXPECT_DOUBLE_EQ(t.entry({1, 1}), 0.5);
    EXPECT_DOUBLE_EQ(t.entry({1, 2}), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(t.entry({2, 2}), 0.25);
}

TEST(CauchyBuild, UniformGeneratorGivesAllOnes) {
    for (int m = 2; m <= 5; ++m) {
        const auto t = cauchy::dense(cauchy::build(std::vector<double>(3, 1.0 / m), m));
        for (double v : t.values()) EXPECT_NEAR(v, 1.0, 1e-15);
    }
}

TEST(CauchyBuild, VanishingDenominatorNamesIndex) {
    try {
        (void)cauchy::build({1.0, -1.0}, 2);
        FAIL() << "expected degenerate_generator_error";
    } catch (const degenerate_generator_error& e) {
        EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos);
    }
}

TEST(CauchyBuild, RejectsMalformedInput) {
    EXPECT_THROW((void)cauchy::build({1.0, 2.0}, {1.0}, 2), input_error);
    EXPECT_THROW((void)cauchy::build({}, 2), input_error);
    EXPECT_THROW((void)cauchy::build({1.0}, 1), input_error);
}

TEST(CauchyBuild, EntriesMatchDirectFormulaOnRandomSpecs) {
    oracle::Gen gen(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = gen.integer(1, 4);
        const int m = gen.integer(2, 5);
        const auto c = gen.vec(n, 0.1, 3.0);
        const auto d = gen.vec(n, -2.0, 2.0);
        const auto spec = cauchy::build(c, d, m);
        const auto t = cauchy::dense(spec);
        oracle::for_each_tuple(m, n, [&](const std::vector<int>& idx) {
            EXPECT_NEAR(t.entry(idx), cauchy_entry(c, d, idx), 1e-15 * std::max(1.0, std::abs(t.entry(idx))));
        });
    }
}

TEST(CauchyBuild, ZeroDSliceIsZero) {
    const auto t = cauchy::dense(cauchy::build({1.0, 2.0, 3.0}, {0.0, 1.0, 2.0}, 3));
    oracle::for_each_tuple(3, 3, [&](const std::vector<int>& idx) {
        if (std::find(idx.begin(), idx.end(), 1) != idx.end()) {
            EXPECT_EQ(t.entry(idx), 0.0);
        }
    });
}

TEST(CauchyPsd, ClosedFormExamples) {
    EXPECT_TRUE(cauchy::is_psd(cauchy::build({1.0, 2.0, 3.0}, 4)));
    const auto bad = cauchy::build({1.0, -0.5, 3.0}, 4);
    EXPECT_FALSE(cauchy::is_psd(bad));
    ASSERT_EQ(cauchy::psd_violation_index(bad), 2);
    EXPECT_NEAR(tenstruct::apply(cauchy::dense(bad), std::vector<double>{0.0, 1.0, 0.0}), 1.0 / (4 * -0.5), 1e-15);
    EXPECT_TRUE(cauchy::is_psd(cauchy::build({-1.0, 2.0}, {0.0, 5.0}, 4)));
}

TEST(CauchyPsd, ZeroDSliceWithNegativeCIsConfirmedBySampling) {
    const auto t = cauchy::dense(cauchy::build({-1.0, 2.0}, {0.0, 5.0}, 4));
    EXPECT_FALSE(psd_probe(t, 10000, 3).violated);
}

TEST(CauchyPsd, OddOrderIsUnsupported) {
    const auto spec = cauchy::build({1.0, 2.0}, 3);
    EXPECT_THROW((void)cauchy::is_psd(spec), unsupported_query_error);
    EXPECT_THROW((void)cauchy::is_pd(spec), unsupported_query_error);
}

TEST(CauchyPd, ClosedFormExamples) {
    EXPECT_TRUE(cauchy::is_pd(cauchy::build({1.0, 2.0, 3.0}, 4)));
    EXPECT_FALSE(cauchy::is_pd(cauchy::build({1.0, 1.0, 2.0}, 4)));
    EXPECT_FALSE(cauchy::is_pd(cauchy::build({1.0, 2.0}, {1.0, 0.0}, 2)));
}

TEST(CauchyPsd, MatrixCaseAgreesWithEigenvalueSign) {
    oracle::Gen gen(32);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 200; ++trial) {
        const int n = gen.integer(2, 4);
        auto c = gen.vec(n, -3.0, 3.0);
        auto d = gen.vec(n, -3.0, 3.0);
        if (trial % 5 == 0) d[0] = 0.0;
        std::optional<GeneralizedCauchySpec> spec;
        try {
            spec = cauchy::build(c, d, 2);
        } catch (const degenerate_generator_error&) {
            continue;
        }
        const auto t = cauchy::dense(*spec);
        // Skip near-singular denominators where the matrix is numerically meaningless.
        double max_entry = 0.0;
        for (double v : t.values()) max_entry = std::max(max_entry, std::abs(v));
        if (max_entry > 1e6) continue;
        ++checked;
        const double lmin = min_matrix_eigenvalue(t);
        const double scale = std::max(1.0, max_entry);
        if (cauchy::is_psd(*spec)) {
            EXPECT_GE(lmin, -1e-10 * scale) << "trial " << trial;
        } else {
            EXPECT_LT(lmin, 0.0) << "trial " << trial;
        }
        if (cauchy::is_pd(*spec)) EXPECT_GT(lmin, 0.0) << "trial " << trial;
    }
    EXPECT_EQ(checked, 200);
}

TEST(CauchyCp, ClosedFormExamples) {
    EXPECT_TRUE(cauchy::is_completely_positive(cauchy::build({1.0, 2.0}, {1.0, 3.0}, 4)));
    const auto mixed = cauchy::build({1.0, 2.0}, {-1.0, 3.0}, 4);
    EXPECT_FALSE(cauchy::is_completely_positive(mixed));
    const auto w = cauchy::negative_entry_witness(mixed);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, (MultiIndex{1, 1, 1, 2}));
    EXPECT_NEAR(mixed.entry(*w), 3.0 * -1.0 / (2.0 + 3.0), 1e-15);
    EXPECT_FALSE(cauchy::is_completely_positive(cauchy::build({-1.0, 2.0}, {1.0, 1.0}, 4)));
}

TEST(CauchyCp, EvenOrderNegatedDIsStillCompletelyPositive) {
    // d and -d give the same tensor when m is even.
    const auto neg = cauchy::build({1.0, 2.0}, {-1.0, -3.0}, 4);
    const auto pos = cauchy::build({1.0, 2.0}, {1.0, 3.0}, 4);
    EXPECT_TRUE(approx_equal(cauchy::dense(neg), cauchy::dense(pos), 0.0));
    EXPECT_TRUE(cauchy::is_completely_positive(neg));
    EXPECT_FALSE(cauchy::is_completely_positive(cauchy::build({1.0, 2.0}, {-1.0, -3.0}, 3)));
}

TEST(CauchyCp, ZeroDIsUnsupported) {
    EXPECT_THROW((void)cauchy::is_completely_positive(cauchy::build({1.0, 2.0}, {0.0, 1.0}, 4)),
                 unsupported_query_error);
}

TEST(CauchyRiemann, ScalarLaw) {
    const auto spec = cauchy::build({1.0}, 2);
    for (int k : {1, 2, 10, 100}) {
        const auto t = from_rank_one_sum(cauchy::riemann_rank_one_approx(spec, k), 1);
        EXPECT_NEAR(t.entry({1, 1}), (k + 1.0) / (2.0 * k), 1e-14) << "k=" << k;
    }
}

TEST(CauchyRiemann, LevelOneIsRankOneInD) {
    const auto spec = cauchy::build({1.0, 2.0, 3.0}, {2.0, -1.0, 0.5}, 3);
    const auto approx = cauchy::riemann_rank_one_approx(spec, 1);
    ASSERT_EQ(approx.terms.size(), 1u);
    for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(approx.terms[0].vector[i], spec.d()[i]);
}

TEST(CauchyRiemann, ErrorShrinksWithLevel) {
    const auto spec = cauchy::build({1.0, 2.0, 3.0}, 4);
    const auto exact = cauchy::dense(spec);
    double previous = 1e300;
    for (int k : {10, 100, 1000}) {
        const double err = max_abs_diff(from_rank_one_sum(cauchy::riemann_rank_one_approx(spec, k), 3), exact);
        EXPECT_LE(err, previous);
        previous = err;
    }
    EXPECT_LE(previous, 1e-3);
}

TEST(CauchyRiemann, NeedsPositiveC) {
    EXPECT_THROW((void)cauchy::riemann_rank_one_approx(cauchy::build({-1.0, 2.0}, {0.0, 1.0}, 4), 10),
                 unsupported_query_error);
    EXPECT_THROW((void)cauchy::riemann_rank_one_approx(cauchy::build({1.0}, 2), 0), input_error);
}

TEST(CauchyHadamard, ProductOfPsdCauchyTensorsHasNoSampledViolation) {
    oracle::Gen gen(33);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = cauchy::dense(cauchy::build(gen.vec(3, 0.1, 3.0), gen.vec(3, -2.0, 2.0), 4));
        const auto b = cauchy::dense(cauchy::build(gen.vec(3, 0.1, 3.0), gen.vec(3, -2.0, 2.0), 4));
        EXPECT_FALSE(psd_probe(hadamard(a, b), 2000, trial).violated);
    }
}
