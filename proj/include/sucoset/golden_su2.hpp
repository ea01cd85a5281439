#pragma once

// Closed forms for SU(2) in coordinates (η, γ, ξ), written out entry by entry.
// They are independent of the constructive pipeline and serve as reference data.
//
// The (2,1) entry of Ã_2^(2) is +i sinγ cosγ e^{−iξ}. With −i in its place Ã_2^(2) would not
// be anti-Hermitian and would disagree with the third row of Ã.

#include <cmath>

#include "sucoset/matrix.hpp"

namespace sucoset::golden_su2 {

struct Point {
    double eta = 0.0;
    double gamma = 0.0;
    double xi = 0.0;
};

namespace detail {

inline ComplexMatrix m2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline ComplexMatrix m3(std::initializer_list<Complex> v) {
    ComplexMatrix m(3, 3);
    auto it = v.begin();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) = *it++;
    return m;
}

inline Complex e(double angle) { return std::polar(1.0, angle); }

} // namespace detail

inline ComplexMatrix omega1(Point p) {
    using detail::e;
    return detail::m2(e(p.eta / 2), 0.0, 0.0, e(-p.eta / 2));
}

inline ComplexMatrix omega2(Point p) {
    using detail::e;
    const double c = std::cos(p.gamma), s = std::sin(p.gamma);
    return detail::m2(c, e(p.xi) * s, -e(-p.xi) * s, c);
}

inline ComplexMatrix w22(Point p) {
    using detail::e;
    const double c = std::cos(p.gamma), s = std::sin(p.gamma);
    return detail::m2(c * e(p.eta / 2), e(p.xi - p.eta / 2) * s, -e(-(p.xi - p.eta / 2)) * s,
                      c * e(-p.eta / 2));
}

/// A_1^(2), left tangent for γ.
inline ComplexMatrix left_a21(Point p) {
    using detail::e;
    const double d = p.xi - p.eta;
    return detail::m2(0.0, e(d), -e(-d), 0.0);
}

/// A_2^(2), left tangent for ξ.
inline ComplexMatrix left_a22(Point p) {
    using detail::e;
    const double s = std::sin(p.gamma), c = std::cos(p.gamma), d = p.xi - p.eta;
    return detail::m2(-kI * s * s, kI * s * c * e(d), kI * s * c * e(-d), kI * s * s);
}

inline ComplexMatrix left_frame(Point p) {
    const double s2 = std::sin(2 * p.gamma), c2 = std::cos(2 * p.gamma), d = p.xi - p.eta;
    const Complex i = kI;
    return detail::m3({i, 0.0, 0.0,
                       0.0, 2.0 * i * std::sin(d), 2.0 * i * std::cos(d),
                       -i * (1 - c2), i * s2 * std::cos(d), -i * s2 * std::sin(d)});
}

inline ComplexMatrix left_frame_inverse(Point p) {
    const double t = std::tan(p.gamma), csc2 = 1.0 / std::sin(2 * p.gamma), d = p.xi - p.eta;
    const Complex i = kI;
    return detail::m3({-i, 0.0, 0.0,
                       -i * std::cos(d) * t, -i / 2.0 * std::sin(d), -i * std::cos(d) * csc2,
                       i * std::sin(d) * t, -i / 2.0 * std::cos(d), i * std::sin(d) * csc2});
}

/// Rows Λ^(1)_1, Λ^(2)_1, Λ^(2)_2 as coefficients of (∂η, ∂γ, ∂ξ).
inline ComplexMatrix left_fields(Point p) {
    const double t = std::tan(p.gamma), csc2 = 1.0 / std::sin(2 * p.gamma);
    const double cd = std::cos(p.xi - p.eta), sd = std::sin(p.xi - p.eta);
    const Complex i = kI;
    ComplexMatrix f(3, 3);
    f.row(0) << -i, 0.0, 0.0;
    f.row(1) << -i * cd * t, -i / 2.0 * sd, -i * cd * csc2;
    f.row(2) << i * sd * t, -i / 2.0 * cd, i * sd * csc2;
    return f;
}

/// Rows ω^(1)_1, ω^(2)_1, ω^(2)_2 as coefficients of (dη, dγ, dξ).
inline ComplexMatrix left_oneforms(Point p) {
    const double s2 = std::sin(2 * p.gamma), c2 = std::cos(2 * p.gamma);
    const double cd = std::cos(p.xi - p.eta), sd = std::sin(p.xi - p.eta);
    const Complex i = kI;
    ComplexMatrix w(3, 3);
    w.row(0) << i, 0.0, -i * (1 - c2);
    w.row(1) << 0.0, 2.0 * i * sd, i * s2 * cd;
    w.row(2) << 0.0, 2.0 * i * cd, -i * s2 * sd;
    return w;
}

/// Ã_1^(1), right tangent for η.
inline ComplexMatrix right_a11(Point p) {
    using detail::e;
    const double s2 = std::sin(2 * p.gamma), c2 = std::cos(2 * p.gamma);
    return detail::m2(kI / 2.0 * c2, -kI / 2.0 * s2 * e(p.xi), -kI / 2.0 * s2 * e(-p.xi), -kI / 2.0 * c2);
}

/// Ã_1^(2), right tangent for γ.
inline ComplexMatrix right_a21(Point p) {
    using detail::e;
    return detail::m2(0.0, e(p.xi), -e(-p.xi), 0.0);
}

/// Ã_2^(2), right tangent for ξ.
inline ComplexMatrix right_a22(Point p) {
    using detail::e;
    const double s = std::sin(p.gamma), c = std::cos(p.gamma);
    return detail::m2(kI * s * s, kI * s * c * e(p.xi), kI * s * c * e(-p.xi), -kI * s * s);
}

/// Ã_2^(2) with the (2,1) sign flipped; not an algebra element.
inline ComplexMatrix right_a22_sign_flipped(Point p) {
    using detail::e;
    const double s = std::sin(p.gamma), c = std::cos(p.gamma);
    return detail::m2(kI * s * s, kI * s * c * e(p.xi), -kI * s * c * e(-p.xi), -kI * s * s);
}

inline ComplexMatrix right_frame(Point p) {
    const double s2 = std::sin(2 * p.gamma), c2 = std::cos(2 * p.gamma);
    const double cx = std::cos(p.xi), sx = std::sin(p.xi);
    const Complex i = kI;
    return detail::m3({i * c2, -i * s2 * cx, i * s2 * sx,
                       0.0, 2.0 * i * sx, 2.0 * i * cx,
                       i * (1 - c2), i * s2 * cx, -i * s2 * sx});
}

inline ComplexMatrix right_frame_inverse(Point p) {
    const double t = std::tan(p.gamma), cot2 = 1.0 / std::tan(2 * p.gamma);
    const double cx = std::cos(p.xi), sx = std::sin(p.xi);
    const Complex i = kI;
    return detail::m3({-i, 0.0, -i,
                       i * cx * t, -i / 2.0 * sx, -i * cx * cot2,
                       -i * sx * t, -i / 2.0 * cx, i * sx * cot2});
}

/// Rows Λ̃^(1)_1, Λ̃^(2)_1, Λ̃^(2)_2 over (∂η, ∂γ, ∂ξ).
inline ComplexMatrix right_fields(Point p) {
    const double t = std::tan(p.gamma), cot2 = 1.0 / std::tan(2 * p.gamma);
    const double cx = std::cos(p.xi), sx = std::sin(p.xi);
    const Complex i = kI;
    ComplexMatrix f(3, 3);
    f.row(0) << -i, 0.0, -i;
    f.row(1) << i * cx * t, -i / 2.0 * sx, -i * cx * cot2;
    f.row(2) << -i * sx * t, -i / 2.0 * cx, i * sx * cot2;
    return f;
}

/// Rows ω̃^(1)_1, ω̃^(2)_1, ω̃^(2)_2 over (dη, dγ, dξ).
inline ComplexMatrix right_oneforms(Point p) {
    const double s2 = std::sin(2 * p.gamma), c2 = std::cos(2 * p.gamma);
    const double cx = std::cos(p.xi), sx = std::sin(p.xi);
    const Complex i = kI;
    ComplexMatrix w(3, 3);
    w.row(0) << i * c2, 0.0, i * (1 - c2);
    w.row(1) << -i * s2 * cx, 2.0 * i * sx, i * s2 * cx;
    w.row(2) << i * s2 * sx, 2.0 * i * cx, -i * s2 * sx;
    return w;
}

/// dμ = 2 sin 2γ dη dγ dξ
inline double density(Point p) { return 2.0 * std::sin(2 * p.gamma); }

} // namespace sucoset::golden_su2
