#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "sucoset/verify.hpp"

using namespace sucoset;
namespace g2 = sucoset::golden_su2;

TEST(Golden, SinglePointPasses) {
    const auto r = check_su2_golden({{0.3, 0.4, 0.5}}, 1e-10);
    EXPECT_EQ(r.rows().size(), 18u);
    EXPECT_TRUE(r.passed());
    EXPECT_LT(r.max_metric("golden."), 1e-13);
}

TEST(Golden, QuarterTurnInverseEntries) {
    const g2::Point p{0.2, std::numbers::pi / 4, 0.9};
    const auto inv = frame_result(Side::left, CosetCoordinates(2, {p.eta, p.gamma, p.xi})).inverse;
    const double d = p.xi - p.eta;
    // tan(π/4) = csc(π/2) = 1
    EXPECT_LT(std::abs(inv(1, 0) - (-kI * std::cos(d))), 1e-14);
    EXPECT_LT(std::abs(inv(1, 2) - (-kI * std::cos(d))), 1e-14);
    EXPECT_LT(std::abs(inv(2, 2) - (kI * std::sin(d))), 1e-14);
}

TEST(Golden, RefusesPointsNearSingularities) {
    EXPECT_THROW(check_su2_golden({{0.1, 1e-12, 0.2}}, 1e-10), InvalidArgument);
    EXPECT_THROW(check_su2_golden({{0.1, std::numbers::pi / 2 - 1e-4, 0.2}}, 1e-10), InvalidArgument);
}

TEST(Golden, ThousandRandomPoints) {
    RandomStream rng(51);
    const auto r = check_su2_golden(random_su2_points(1000, rng), 1e-10);
    EXPECT_TRUE(r.passed()) << r.max_metric();
}

TEST(Golden, SignFlippedRightXiTangentIsNotAntiHermitian) {
    const g2::Point p{0.3, 0.4, 0.5};
    EXPECT_GT(antihermiticity_residual(g2::right_a22_sign_flipped(p)), 0.1);
    EXPECT_LT(antihermiticity_residual(g2::right_a22(p)), 1e-15);
}

TEST(Derivatives, PassForSmallRanks) {
    RandomStream rng(52);
    for (int n : {2, 4}) {
        const auto r = check_derivatives(n, random_chart_points(n, 3, rng), 1e-6, 1e-5);
        EXPECT_TRUE(r.passed()) << n << ": " << r.max_metric();
        EXPECT_EQ(r.rows().size(), 3u * 2u * static_cast<std::size_t>(algebra_dimension(n)));
    }
}

TEST(Derivatives, RejectMismatchedInput) {
    EXPECT_THROW(check_derivatives(3, {CosetCoordinates::zero(2)}, 1e-6, 1e-5), InvalidArgument);
    EXPECT_THROW(check_derivatives(2, {CosetCoordinates::zero(2)}, 0.0, 1e-5), InvalidArgument);
}

TEST(Derivatives, ZeroPointCartanTangentIsExactGenerator) {
    const auto c = CosetCoordinates::zero(3);
    const AlgebraBasis b(3);
    for (int a = 0; a < 2; ++a) {
        EXPECT_EQ(left_tangent(a, c).value, kI * b[a]);
        EXPECT_EQ(right_tangent(a, c).value, kI * b[a]);
    }
}

TEST(Duality, PassesAwayFromSingularities) {
    RandomStream rng(53);
    for (int n : {2, 3}) {
        const auto r = check_duality_and_bridge(n, random_chart_points(n, 5, rng), 1e-9);
        EXPECT_TRUE(r.passed()) << n;
        EXPECT_EQ(r.count(CheckStatus::skip), 0u);
    }
}

TEST(Duality, IdentityPointSkipsInverseButChecksTheRest) {
    const auto r = check_duality_and_bridge(2, {CosetCoordinates::zero(2)}, 1e-9);
    EXPECT_EQ(r.count(CheckStatus::skip), 2u);
    EXPECT_EQ(r.count(CheckStatus::fail), 0u);
    EXPECT_TRUE(r.passed());
}

TEST(Report, RecordSemantics) {
    VerificationReport r(5);
    r.record("a.x", 2, {0.1}, 1e-12, 1e-10);
    r.record("a.y", 2, {0.1}, std::numeric_limits<double>::quiet_NaN(), 1e-10);
    r.skip("b", 2, {0.1}, 1e-10, "why");
    EXPECT_EQ(r.count(CheckStatus::pass), 1u);
    EXPECT_EQ(r.count(CheckStatus::fail), 1u);
    EXPECT_EQ(r.count(CheckStatus::skip), 1u);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.max_metric("a.x"), 1e-12);
    const std::string text = r.to_text();
    EXPECT_NE(text.find("FAIL"), std::string::npos);
    EXPECT_NE(text.find("why"), std::string::npos);
    r.record("c", 2, {}, 2.0, 1.0);
    EXPECT_EQ(r.count(CheckStatus::fail), 2u);
}

TEST(Suite, DeterministicAndGreen) {
    SuiteOptions opt;
    opt.ranks = {2};
    const auto a = run_suite(opt);
    const auto b = run_suite(opt);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.to_text(), b.to_text());
    opt.tolerance = 1e-30;
    EXPECT_FALSE(run_suite(opt).passed());
}

TEST(Pairs, AllPairsCountAndRandomPairsDistinctIndices) {
    EXPECT_EQ(all_pairs(3).size(), 28u);
    RandomStream rng(54);
    for (const auto& [i, j] : random_pairs(3, 30, rng)) {
        EXPECT_NE(i, j);
        EXPECT_LT(std::max(i, j), 8);
    }
}
