#include "cli/cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "fixture_corpus.hpp"

using nlohmann::json;

namespace {

const std::string kFixtures = TENSTRUCT_FIXTURE_DIR;

json report_of(const fixture::RunResult& r) {
    return json::parse(r.out);
}

std::vector<std::string> with_spec(std::vector<std::string> args, const std::string& spec) {
    args.push_back("--spec");
    args.push_back(spec);
    return args;
}

const std::string kIndefinite = R"({"kind":"hankel","v":[1,-1,1,0,0,0,0,0,0],"m":4,"n":3})";

}  // namespace

TEST(CliCorpus, ExitCodeContract) {
    const auto cases = fixture::load(kFixtures);
    ASSERT_FALSE(cases.empty());
    for (const auto& c : cases) {
        const auto r = fixture::run(c.args);
        EXPECT_EQ(r.exit_code, c.exit_code) << c.name << "\n" << r.out << r.err;
        const auto report = report_of(r);
        EXPECT_EQ(report.at("exit_code").get<int>(), r.exit_code) << c.name;
        EXPECT_TRUE(report.contains("command")) << c.name;
        if (r.exit_code == 2) {
            EXPECT_TRUE(report.contains("error")) << c.name;
        } else {
            EXPECT_TRUE(report.contains("verdicts")) << c.name;
            EXPECT_TRUE(report.contains("input_digest")) << c.name;
        }
    }
}

TEST(CliCorpus, ReportsAreDeterministicApartFromTimings) {
    for (const auto& c : fixture::load(kFixtures)) {
        const auto a = fixture::run(c.args);
        const auto b = fixture::run(c.args);
        EXPECT_EQ(fixture::without_timings(a.out), fixture::without_timings(b.out)) << c.name;
    }
}

TEST(CliCheck, VpsdRecordsMinimum) {
    const auto r = fixture::run(with_spec({"check", "vpsd"}, kIndefinite));
    ASSERT_EQ(r.exit_code, 0) << r.out;
    const auto v = report_of(r).at("verdicts");
    EXPECT_TRUE(v.at("holds").get<bool>());
    EXPECT_NEAR(v.at("value").get<double>(), 0.6, 1e-10);
    EXPECT_NEAR(v.at("mu").get<double>(), 0.2, 1e-8);
}

TEST(CliCheck, PsdFailureEmbedsWitness) {
    const auto r = fixture::run(with_spec({"check", "psd"}, kIndefinite));
    ASSERT_EQ(r.exit_code, 1) << r.out;
    const auto v = report_of(r).at("verdicts");
    EXPECT_EQ(v.at("witness").get<std::vector<double>>(), (std::vector<double>{1, 1, -1}));
    EXPECT_EQ(v.at("value").get<double>(), -1.0);
}

TEST(CliCheck, SeedChangesDigest) {
    const auto a = report_of(fixture::run(with_spec({"check", "psd", "--seed", "1"}, kIndefinite)));
    const auto b = report_of(fixture::run(with_spec({"check", "psd", "--seed", "2"}, kIndefinite)));
    EXPECT_NE(a.at("input_digest"), b.at("input_digest"));
}

TEST(CliDecompose, MinimalTwoNodes) {
    const auto r = fixture::run({"decompose", "vandermonde", "--file", kFixtures + "/hankel_two_nodes.json"});
    ASSERT_EQ(r.exit_code, 0) << r.out;
    const auto dec = report_of(r).at("artifacts").at("decomposition");
    const auto terms = dec.at("terms");
    ASSERT_EQ(terms.size(), 2u);
    EXPECT_NEAR(terms[0].at("mu").get<double>(), 0.0, 1e-10);
    EXPECT_NEAR(terms[1].at("mu").get<double>(), 1.0, 1e-10);
    EXPECT_LE(dec.at("residual").get<double>(), 1e-10);
}

TEST(CliDecompose, MinimalFailureSuggestsFixedNodes) {
    const auto r = fixture::run({"decompose", "vandermonde", "--file", kFixtures + "/hankel_complex_nodes.json"});
    ASSERT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("fixed"), std::string::npos);
}

TEST(CliDecompose, RiemannResidual) {
    const auto r = fixture::run({"decompose", "riemann", "--k", "1000", "--file", kFixtures + "/cauchy_positive.json"});
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_LE(report_of(r).at("artifacts").at("decomposition").at("residual").get<double>(), 1e-3);
}

TEST(CliEig, UniformLargestH) {
    const auto r = fixture::run({"eig", "h", "--file", kFixtures + "/uniform.json"});
    ASSERT_EQ(r.exit_code, 0);
    const auto pairs = report_of(r).at("artifacts").at("eigenpairs");
    ASSERT_FALSE(pairs.empty());
    EXPECT_NEAR(pairs[0].at("lambda").get<double>(), 27.0, 1e-8);
    EXPECT_EQ(pairs[0].at("kind").get<std::string>(), "H");
}

TEST(CliEig, Dim2OracleIsExhaustiveAndNonnegative) {
    const auto r = fixture::run({"eig", "h", "--file", kFixtures + "/cauchy_pair.json"});
    ASSERT_EQ(r.exit_code, 0);
    for (const auto& p : report_of(r).at("artifacts").at("eigenpairs")) {
        EXPECT_GE(p.at("lambda").get<double>(), -1e-10);
    }
}

TEST(CliEig, ZSortedDescendingWithNegativeMinimum) {
    const auto r = fixture::run(with_spec({"eig", "z"}, kIndefinite));
    ASSERT_EQ(r.exit_code, 0);
    const auto pairs = report_of(r).at("artifacts").at("eigenpairs");
    ASSERT_FALSE(pairs.empty());
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        EXPECT_GE(pairs[k - 1].at("lambda").get<double>(), pairs[k].at("lambda").get<double>());
    }
    EXPECT_LE(pairs.back().at("lambda").get<double>(), -1.0 / 9.0);
}

TEST(CliPlane, IntegerCoefficients) {
    const auto r = fixture::run(with_spec({"plane"}, kIndefinite));
    ASSERT_EQ(r.exit_code, 0);
    const auto plane = report_of(r).at("artifacts").at("plane_form");
    EXPECT_EQ(plane.at("exact_entries").at(2).get<std::string>(), "5/14");
    EXPECT_EQ(plane.at("coeffs").get<std::vector<double>>(), (std::vector<double>{1, -4, 10, 0, 0, 0, 0, 0, 0}));
}

TEST(CliWorkedExamples, AllChecksPass) {
    const auto r = fixture::run({"paper-examples"});
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const auto text = r.out;
    EXPECT_NE(text.find("vpsd_not_psd"), std::string::npos);
    EXPECT_NE(text.find("vpsd_not_copositive"), std::string::npos);
}

TEST(CliErrors, InlineAndFileTogetherIsAnInputError) {
    const auto r = fixture::run(
        {"check", "psd", "--spec", kIndefinite, "--file", kFixtures + "/hankel_indefinite.json"});
    EXPECT_EQ(r.exit_code, 2);
}

TEST(CliErrors, MissingSubcommand) {
    EXPECT_EQ(fixture::run({}).exit_code, 2);
}

TEST(CliErrors, MaxDimGuard) {
    const std::string big = R"({"kind":"cauchy","c":[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17],"m":2})";
    EXPECT_EQ(fixture::run(with_spec({"check", "psd"}, big)).exit_code, 2);
}
