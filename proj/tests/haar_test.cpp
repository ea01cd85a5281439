#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "sucoset/haar.hpp"
#include "sucoset/verify.hpp"

using namespace sucoset;
using std::numbers::pi;

namespace {

const double kVolume = 16.0 * pi * pi;

double constant(const ComplexMatrix&) { return 1.0; }
double abs_trace_sq(const ComplexMatrix& u) { return std::norm(u.trace()); }
double abs_u11_sq(const ComplexMatrix& u) { return std::norm(u(0, 0)); }

} // namespace

TEST(Density, SU2ClosedForm) {
    RandomStream rng(41);
    for (const auto& p : random_su2_points(50, rng)) {
        const auto d = density(CosetCoordinates(2, {p.eta, p.gamma, p.xi}));
        EXPECT_NEAR(d.value, 2.0 * std::sin(2.0 * p.gamma), 1e-13);
        EXPECT_NEAR(d.right_value, d.value, 1e-13);
        EXPECT_LT(d.relative_difference(), 1e-12);
    }
}

TEST(Density, VanishesAtZeroGamma) {
    const auto d = density(CosetCoordinates(2, {0.4, 0.0, 1.1}));
    EXPECT_EQ(d.value, 0.0);
    EXPECT_EQ(d.relative_difference(), 0.0);
}

TEST(Density, SU3LeftEqualsRight) {
    RandomStream rng(42);
    for (const auto& c : random_chart_points(3, 20, rng)) {
        const auto d = density(c);
        EXPECT_GT(d.value, 0.0);
        EXPECT_LT(d.relative_difference(), 1e-9);
    }
}

TEST(Density, IndependentOfCartanCoordinates) {
    RandomStream rng(43);
    for (int n : {2, 3}) {
        const auto c = random_chart_point(n, rng);
        const double base = left_density(c);
        for (int a = 0; a < n - 1; ++a) {
            EXPECT_NEAR(left_density(c.shifted(a, 0.9)), base, 1e-12 * std::max(1.0, base));
        }
    }
}

TEST(Integrate, ConstantGivesGroupVolume) {
    const auto est = integrate_su2(constant, default_su2_domain(200000, 101));
    EXPECT_EQ(est.samples, 200000);
    EXPECT_LT(std::abs(est.value - kVolume), 3.0 * est.standard_error);
}

TEST(Integrate, RealTraceAveragesToZero) {
    const auto est = integrate_su2([](const ComplexMatrix& u) { return u.trace().real() / 2.0; },
                                   default_su2_domain(200000, 102));
    EXPECT_LT(std::abs(est.value), 3.0 * est.standard_error);
}

TEST(Integrate, AbsTraceSquaredGivesVolume) {
    // the character of the fundamental representation has unit norm under the normalized measure
    const auto est = integrate_su2(abs_trace_sq, default_su2_domain(200000, 103));
    EXPECT_LT(std::abs(est.value - kVolume), 3.0 * est.standard_error);
}

TEST(Integrate, RejectsBadDomain) {
    EXPECT_THROW(integrate_su2(constant, default_su2_domain(0, 1)), InvalidArgument);
    auto d = default_su2_domain(10, 1);
    d.intervals.pop_back();
    EXPECT_THROW(integrate_su2(constant, d), InvalidArgument);
    d = default_su2_domain(10, 1);
    d.intervals[1] = {1.0, 1.0};
    EXPECT_THROW(integrate_su2(constant, d), InvalidArgument);
}

TEST(Integrate, BitIdenticalAcrossWorkerCounts) {
    const auto domain = default_su2_domain(20000, 104);
    const auto one = integrate_su2(abs_trace_sq, domain, 1);
    for (unsigned w : {2u, 3u, 8u}) {
        const auto many = integrate_su2(abs_trace_sq, domain, w);
        EXPECT_EQ(one.value, many.value) << w;
        EXPECT_EQ(one.standard_error, many.standard_error) << w;
    }
}

TEST(Integrate, SeedChangesTheEstimate) {
    const auto a = integrate_su2(constant, default_su2_domain(10000, 1));
    const auto b = integrate_su2(constant, default_su2_domain(10000, 2));
    EXPECT_NE(a.value, b.value);
}

TEST(Integrate, StandardErrorShrinksWithSampleCount) {
    const auto small = integrate_su2(constant, default_su2_domain(20000, 105));
    const auto large = integrate_su2(constant, default_su2_domain(200000, 105));
    const double ratio = small.standard_error / large.standard_error;
    EXPECT_GT(ratio, std::sqrt(10.0) * 0.9);
    EXPECT_LT(ratio, std::sqrt(10.0) * 1.1);
}

TEST(Invariance, IdentityTranslationIsExact) {
    const auto r = invariance_check(identity(2), abs_u11_sq, default_su2_domain(10000, 106));
    EXPECT_EQ(r.deviation, 0.0);
    EXPECT_EQ(r.base.value, r.translated.value);
}

TEST(Invariance, DiagonalTranslationPreservesIntegral) {
    ComplexMatrix g = ComplexMatrix::Zero(2, 2);
    g(0, 0) = kI;
    g(1, 1) = -kI;
    const auto r = invariance_check(g, abs_trace_sq, default_su2_domain(1000000, 107));
    EXPECT_LT(r.deviation, 0.01);
}

TEST(Invariance, GenericTranslationPreservesIntegral) {
    const ComplexMatrix g = group_element(CosetCoordinates(2, {1.3, 0.7, 2.2})).matrix();
    const auto r = invariance_check(g, abs_u11_sq, default_su2_domain(300000, 108));
    EXPECT_LT(r.deviation, 0.01);
    EXPECT_LT(std::abs(r.base.value - kVolume / 2.0), 3.0 * r.base.standard_error);
}

TEST(Invariance, RejectsNonUnitaryTranslation) {
    EXPECT_THROW(invariance_check(2.0 * identity(2), abs_u11_sq, default_su2_domain(10, 1)), InvalidArgument);
    EXPECT_THROW(invariance_check(identity(3), abs_u11_sq, default_su2_domain(10, 1)), InvalidArgument);
}

TEST(RandomStream, UniformRangeAndDeterminism) {
    RandomStream a(9, 3), b(9, 3), c(9, 4);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
        EXPECT_EQ(x, b.uniform());
        differs = differs || x != c.uniform();
    }
    EXPECT_TRUE(differs);
}
