#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "sucoset/coset.hpp"
#include "sucoset/verify.hpp"

using namespace sucoset;

namespace {

ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

} // namespace

TEST(Coordinates, FlatOrderAndAccessors) {
    std::vector<double> v(8);
    for (int k = 0; k < 8; ++k) v[static_cast<std::size_t>(k)] = k;
    const CosetCoordinates c(3, v);
    EXPECT_EQ(c.eta(1), 0);
    EXPECT_EQ(c.eta(2), 1);
    EXPECT_EQ(c.gamma(2, 1), 2);
    EXPECT_EQ(c.xi(2, 1), 3);
    EXPECT_EQ(c.gamma(3, 1), 4);
    EXPECT_EQ(c.gamma(3, 2), 5);
    EXPECT_EQ(c.xi(3, 1), 6);
    EXPECT_EQ(c.xi(3, 2), 7);
    EXPECT_EQ(c.coordinate_label(5), "gamma(3)_2");
    EXPECT_EQ(c.coordinate_label(6), "xi(3)_1");
    EXPECT_THROW(CosetCoordinates(3, std::vector<double>(7)), InvalidArgument);
    EXPECT_THROW(c.gamma(3, 3), InvalidArgument);
    EXPECT_THROW(c.xi(1, 1), InvalidArgument);
}

TEST(SeriesFunctions, ContinuousAcrossSwitchAndAccurate) {
    const double r = detail::kSeriesRadius;
    const double below = std::nextafter(r, 0.0);
    // the closed forms lose about eps/x² to cancellation at the switch
    EXPECT_NEAR(detail::sinc(below), detail::sinc(r), 1e-15);
    EXPECT_NEAR(detail::cosc(below), detail::cosc(r), 1e-13);
    EXPECT_NEAR(detail::sinc_defect(below), detail::sinc_defect(r), 1e-13);
    EXPECT_EQ(detail::sinc(0.0), 1.0);
    EXPECT_EQ(detail::cosc(0.0), 0.5);
    EXPECT_DOUBLE_EQ(detail::sinc_defect(0.0), 1.0 / 6.0);
    // long-double references away from the series region
    const long double x = 0.2L;
    EXPECT_NEAR(detail::cosc(0.2), static_cast<double>((1.0L - std::cos(x)) / (x * x)), 1e-15);
    EXPECT_NEAR(detail::sinc_defect(0.2), static_cast<double>((1.0L - std::sin(x) / x) / (x * x)), 1e-13);
}

TEST(Torus, SU2ClosedForm) {
    const double eta = 0.7;
    const auto t = torus_element(CosetCoordinates(2, {eta, 0.3, 0.1}));
    EXPECT_LT(oracle::max_abs_diff(t.matrix(), m2(std::polar(1.0, eta / 2), 0, 0, std::polar(1.0, -eta / 2))), 1e-15);
}

TEST(Torus, ZeroIsIdentity) {
    for (int n = 2; n <= 5; ++n) EXPECT_EQ(torus_element(CosetCoordinates::zero(n)).matrix(), identity(n));
}

TEST(Torus, MatchesProductOfExponentials) {
    RandomStream rng(21);
    for (int n : {3, 4}) {
        const AlgebraBasis b(n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto c = random_chart_point(n, rng);
            ComplexMatrix ref = identity(n);
            for (int a = 1; a <= n - 1; ++a) {
                ref = ref * oracle::taylor_exp(kI * c.eta(a) * b.at({1, a}), 40);
            }
            EXPECT_LT(oracle::max_abs_diff(torus_element(c).matrix(), ref), 1e-12);
        }
    }
}

TEST(Rotation, SU2ClosedForm) {
    const double g = 0.4;
    const RealMatrix r = rotation_factor(2, CosetCoordinates(2, {0.1, g, 0.2}));
    RealMatrix ref(2, 2);
    ref << std::cos(g), std::sin(g), -std::sin(g), std::cos(g);
    EXPECT_LT((r - ref).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Rotation, ZeroGammaIsIdentity) {
    for (int n = 2; n <= 4; ++n)
        for (int m = 2; m <= n; ++m) EXPECT_EQ(rotation_factor(m, CosetCoordinates::zero(n)), RealMatrix::Identity(n, n));
}

TEST(Rotation, OrthogonalWithUnitDeterminant) {
    RandomStream rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = random_chart_point(3, rng);
        const RealMatrix r = rotation_factor(3, c);
        EXPECT_LT((r * r.transpose() - RealMatrix::Identity(3, 3)).norm(), 1e-13);
        EXPECT_NEAR(r.determinant(), 1.0, 1e-13);
    }
    // the small-radius path, including exactly at and just off the origin
    for (double scale : {0.0, 1e-12, 1e-9, 1e-6, 1e-3, 0.049, 0.051}) {
        std::vector<double> v(15, 0.3);
        v[9] = scale * 0.6;
        v[10] = -scale * 0.8;
        v[11] = scale * 0.0;
        const RealMatrix r = rotation_factor(4, CosetCoordinates(4, v));
        EXPECT_LT((r * r.transpose() - RealMatrix::Identity(4, 4)).norm(), 1e-14) << scale;
        EXPECT_NEAR(r.determinant(), 1.0, 1e-14) << scale;
    }
}

TEST(Phase, Cases) {
    EXPECT_EQ(phase_factor(3, CosetCoordinates::zero(4)), identity(4));
    const double xi = 0.9;
    EXPECT_LT(oracle::max_abs_diff(phase_factor(2, CosetCoordinates(2, {0.1, 0.2, xi})), m2(std::polar(1.0, xi), 0, 0, 1)),
              1e-16);
    std::vector<double> v(15, 0.0);
    const CosetCoordinates c4(4, v);
    const int i1 = c4.xi_index(3, 1), i2 = c4.xi_index(3, 2);
    v[static_cast<std::size_t>(i1)] = 0.5;
    v[static_cast<std::size_t>(i2)] = -1.25;
    const ComplexMatrix x = phase_factor(3, CosetCoordinates(4, v));
    ComplexMatrix ref = identity(4);
    ref(0, 0) = std::polar(1.0, 0.5);
    ref(1, 1) = std::polar(1.0, -1.25);
    EXPECT_LT(oracle::max_abs_diff(x, ref), 1e-16);
    EXPECT_THROW(phase_factor(1, c4), InvalidArgument);
    EXPECT_THROW(phase_factor(5, c4), InvalidArgument);
}

TEST(CosetFactor, SU2ClosedForm) {
    const double g = 0.4, xi = 0.5;
    const auto o = coset_factor(2, CosetCoordinates(2, {0.3, g, xi}));
    const ComplexMatrix ref = m2(std::cos(g), std::polar(1.0, xi) * std::sin(g), -std::polar(1.0, -xi) * std::sin(g), std::cos(g));
    EXPECT_LT(oracle::max_abs_diff(o.matrix(), ref), 1e-15);
}

TEST(CosetFactor, ZeroIsIdentity) {
    for (int m = 2; m <= 4; ++m) EXPECT_EQ(coset_factor(m, CosetCoordinates::zero(4)).matrix(), identity(4));
}

TEST(CosetFactor, MatchesBlockFormula) {
    RandomStream rng(23);
    for (int n : {3, 4, 5}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto c = random_chart_point(n, rng);
            for (int m = 2; m <= n; ++m) {
                std::vector<double> gamma, xi;
                for (int i = 1; i < m; ++i) {
                    gamma.push_back(c.gamma(m, i));
                    xi.push_back(c.xi(m, i));
                }
                const ComplexMatrix ref = oracle::block_formula_coset(n, gamma, xi);
                EXPECT_LT(oracle::max_abs_diff(coset_factor(m, c).matrix(), ref), 1e-12) << n << "," << m;
            }
        }
    }
}

TEST(GroupElement, ZeroIsIdentity) {
    for (int n = 2; n <= 5; ++n) EXPECT_EQ(group_element(CosetCoordinates::zero(n)).matrix(), identity(n));
}

TEST(GroupElement, SU2ProductClosedForm) {
    const double eta = 0.3, g = 0.4, xi = 0.5;
    const auto u = group_element(CosetCoordinates(2, {eta, g, xi}));
    const ComplexMatrix ref = m2(std::cos(g) * std::polar(1.0, eta / 2), std::polar(1.0, xi - eta / 2) * std::sin(g),
                                 -std::polar(1.0, -(xi - eta / 2)) * std::sin(g), std::cos(g) * std::polar(1.0, -eta / 2));
    EXPECT_LT(oracle::max_abs_diff(u.matrix(), ref), 1e-15);
}

TEST(GroupElement, UnitaryWithUnitDeterminant) {
    RandomStream rng(24);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto c = random_chart_point(n, rng);
            const CosetFactorization f(c);
            for (int m = 1; m <= n; ++m) {
                EXPECT_LT(unitarity_residual(f.omega(m)), 1e-12);
                EXPECT_LT(unitarity_residual(f.left(m)), 1e-12);
                EXPECT_LT(unitarity_residual(f.right(m)), 1e-12);
            }
            const auto u = group_element(c);
            EXPECT_LT(u.unitarity_residual(), 1e-12);
            EXPECT_LT(u.determinant_residual(), 1e-12);
        }
    }
}

TEST(GroupElement, OrderedProductOfFactors) {
    RandomStream rng(25);
    const auto c = random_chart_point(4, rng);
    ComplexMatrix ref = identity(4);
    for (int m = 4; m >= 2; --m) ref = ref * coset_factor(m, c).matrix();
    ref = ref * torus_element(c).matrix();
    EXPECT_LT(oracle::max_abs_diff(group_element(c).matrix(), ref), 1e-15);
}

TEST(PartialProducts, SU2Values) {
    const CosetCoordinates c(2, {0.3, 0.4, 0.5});
    EXPECT_EQ(partial_product_right(1, c).matrix(), coset_factor(2, c).matrix());
    EXPECT_EQ(partial_product_right(2, c).matrix(), identity(2));
    EXPECT_EQ(partial_product_left(1, c).matrix(), torus_element(c).matrix());
}

TEST(PartialProducts, FullLeftProductIsGroupElement) {
    RandomStream rng(26);
    for (int n = 2; n <= 5; ++n) {
        const auto c = random_chart_point(n, rng);
        EXPECT_EQ(partial_product_left(n, c).matrix(), group_element(c).matrix());
    }
}

TEST(PartialProducts, RightTimesLeftIsGroupElement) {
    RandomStream rng(27);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto c = random_chart_point(n, rng);
            const auto u = group_element(c).matrix();
            for (int k = 1; k <= n; ++k) {
                const ComplexMatrix prod = partial_product_right(k, c).matrix() * partial_product_left(k, c).matrix();
                EXPECT_LT(oracle::max_abs_diff(prod, u), 1e-12);
                // W̃ = U Wᴴ
                EXPECT_LT(oracle::max_abs_diff(partial_product_right(k, c).matrix(),
                                               u * partial_product_left(k, c).matrix().adjoint()),
                          1e-12);
            }
        }
    }
    EXPECT_THROW(partial_product_left(0, CosetCoordinates::zero(3)), InvalidArgument);
    EXPECT_THROW(partial_product_right(4, CosetCoordinates::zero(3)), InvalidArgument);
}
