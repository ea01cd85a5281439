#pragma once

// Left and right Maurer-Cartan frames in coset coordinates.
//
// For every coordinate θ_α, ∂U/∂θ_α = U A_α = Ã_α U with A_α, Ã_α in su(N). Expanding
// A_α = Σ_β A[α][β] L_β gives the frame matrix A (rows: coordinates, columns: generators).
// Rows of A⁻¹ are the invariant vector fields as coefficients of ∂/∂θ, rows of Aᵀ are the
// invariant one-forms as coefficients of dθ. The same holds for Ã on the right.

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sucoset/algebra.hpp"
#include "sucoset/coset.hpp"
#include "sucoset/errors.hpp"
#include "sucoset/matrix.hpp"

namespace sucoset {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Frames whose condition estimate exceeds this are refused by frame_result().
inline constexpr double kMaxFrameCondition = 1e12;

namespace detail {

inline void require_coset_alpha(int m, int alpha, int n) {
    require_coset_block(m, n);
    if (alpha < 1 || alpha > m - 1) {
        throw InvalidArgument("coset parameter index " + std::to_string(alpha) + " outside 1.." +
                              std::to_string(m - 1) + " for block m = " + std::to_string(m));
    }
}

} // namespace detail

/// (∂Ω^(m)/∂γ^(m)_α) Ω^(m)ᴴ in closed form. Anti-Hermitian, supported on the leading m×m block.
inline ComplexMatrix d_coset_d_gamma(int m, int alpha, const CosetCoordinates& c) {
    const int n = c.n();
    detail::require_coset_alpha(m, alpha, n);
    const double g = c.gamma_radius(m);
    const double s = detail::sinc(g);
    const double q = detail::cosc(g);
    const double d = detail::sinc_defect(g);
    const int a = alpha - 1;
    const double ga = c.gamma(m, alpha);

    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int r = 0; r < m - 1; ++r) {
        const double gr = c.gamma(m, r + 1);
        const Complex pr = detail::phase(c, m, r);
        for (int sidx = 0; sidx < m - 1; ++sidx) {
            const double gs = c.gamma(m, sidx + 1);
            const double w = (sidx == a ? gr : 0.0) - (r == a ? gs : 0.0);
            if (w != 0.0) out(r, sidx) = -q * w * pr * std::conj(detail::phase(c, m, sidx));
        }
        const Complex edge = pr * ((r == a ? s : 0.0) + gr * ga * d);
        out(r, m - 1) = edge;
        out(m - 1, r) = -std::conj(edge);
    }
    return out;
}

/// (∂Ω^(m)/∂ξ^(m)_α) Ω^(m)ᴴ: i e_α e_αᵀ − i (X R e_α)(X R e_α)ᴴ.
inline ComplexMatrix d_coset_d_xi(int m, int alpha, const CosetCoordinates& c) {
    const int n = c.n();
    detail::require_coset_alpha(m, alpha, n);
    const RealMatrix r = rotation_factor(m, c);
    const int a = alpha - 1;
    ComplexVector col(n);
    for (int i = 0; i < n; ++i) col(i) = detail::phase(c, m, i) * r(i, a);
    ComplexMatrix out = -kI * col * col.adjoint();
    out(a, a) += kI;
    return out;
}

/// ∂Ω^(m)/∂θ · Ω^(m)ᴴ for the coordinate at `flat`; for an η coordinate this is i L^(1)_α.
inline ComplexMatrix factor_derivative(int flat, const CosetCoordinates& c, const AlgebraBasis& basis) {
    const auto idx = block_index(c.n(), flat);
    if (idx.block == 1) return kI * basis[flat];
    const int m = idx.block;
    return idx.alpha <= m - 1 ? d_coset_d_gamma(m, idx.alpha, c)
                              : d_coset_d_xi(m, idx.alpha - (m - 1), c);
}

struct TangentMatrix {
    Side side = Side::left;
    int index = 0;  // flat coordinate index
    ComplexMatrix value;
};

namespace detail {

inline ComplexMatrix tangent_value(Side side, int flat, const CosetCoordinates& c,
                                   const CosetFactorization& f, const AlgebraBasis& basis) {
    const auto idx = block_index(c.n(), flat);
    const ComplexMatrix dd = factor_derivative(flat, c, basis);
    if (side == Side::left) {
        if (idx.block == 1) return dd;  // Ω^(1)ᴴ ∂Ω^(1) = i L^(1)_α, Ω^(1) being diagonal
        const ComplexMatrix& w = f.left(idx.block);
        return w.adjoint() * dd * w;
    }
    const ComplexMatrix& w = f.right(idx.block);
    return w * dd * w.adjoint();
}

} // namespace detail

/// A_α with ∂U/∂θ_α = U A_α.
inline TangentMatrix left_tangent(int flat, const CosetCoordinates& c) {
    const CosetFactorization f(c);
    const AlgebraBasis basis(c.n());
    return {Side::left, flat, detail::tangent_value(Side::left, flat, c, f, basis)};
}

/// Ã_α with ∂U/∂θ_α = Ã_α U.
inline TangentMatrix right_tangent(int flat, const CosetCoordinates& c) {
    const CosetFactorization f(c);
    const AlgebraBasis basis(c.n());
    return {Side::right, flat, detail::tangent_value(Side::right, flat, c, f, basis)};
}

inline TangentMatrix tangent(Side side, int flat, const CosetCoordinates& c) {
    return side == Side::left ? left_tangent(flat, c) : right_tangent(flat, c);
}

class FrameMatrix {
public:
    FrameMatrix(Side side, CosetCoordinates coords, ComplexMatrix entries)
        : side_(side), coords_(std::move(coords)), entries_(std::move(entries)) {}

    Side side() const noexcept { return side_; }
    int n() const noexcept { return coords_.n(); }
    const CosetCoordinates& coords() const noexcept { return coords_; }
    const ComplexMatrix& entries() const noexcept { return entries_; }

private:
    Side side_;
    CosetCoordinates coords_;
    ComplexMatrix entries_;
};

/// Row α is the expansion of the tangent matrix of coordinate α over the generator basis.
/// Left η rows are i δ_αβ by construction.
inline FrameMatrix assemble_frame(Side side, const CosetCoordinates& c) {
    const int n = c.n();
    const int dim = algebra_dimension(n);
    const CosetFactorization f(c);
    const AlgebraBasis basis(n);
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int row = 0; row < dim; ++row) {
        if (side == Side::left && row < n - 1) {
            a(row, row) = kI;
            continue;
        }
        a.row(row) = project(detail::tangent_value(side, row, c, f, basis), n).transpose();
    }
    return FrameMatrix(side, c, std::move(a));
}

struct FrameResult {
    FrameMatrix frame;
    ComplexMatrix inverse;    // rows: invariant vector fields over ∂/∂θ
    ComplexMatrix transpose;  // rows: invariant one-forms over dθ
    double condition = 0.0;
};

/// Inverts the frame. Throws SingularFrameError at chart degeneracies (e.g. γ = 0 for SU(2)).
inline FrameResult frame_result(Side side, const CosetCoordinates& c,
                                double max_condition = kMaxFrameCondition) {
    std::vector<std::string> labels;
    for (int k = 0; k < c.size(); ++k) labels.push_back(c.coordinate_label(k));
    FrameMatrix frame = assemble_frame(side, c);
    ComplexMatrix inv;
    try {
        inv = inverse(frame.entries());
    } catch (const SingularMatrixError& e) {
        throw SingularFrameError(c.values(), std::numeric_limits<double>::infinity(),
                                 std::string(to_string(side)) + " frame: " + e.what(), labels);
    }
    const double cond = condition_estimate(frame.entries(), inv);
    if (!std::isfinite(cond) || cond > max_condition || !inv.allFinite()) {
        throw SingularFrameError(c.values(), cond,
                                 std::string(to_string(side)) + " frame exceeds condition limit", labels);
    }
    ComplexMatrix tr = frame.entries().transpose();
    return FrameResult{std::move(frame), std::move(inv), std::move(tr), cond};
}

/// Λf = Σ_α coefficients_α ∂f/∂θ_α.
inline Complex apply_field(std::span<const Complex> coefficients, std::span<const Complex> gradient) {
    if (coefficients.size() != gradient.size()) {
        throw InvalidArgument("apply_field: " + std::to_string(coefficients.size()) +
                              " coefficients against a gradient of length " +
                              std::to_string(gradient.size()));
    }
    Complex acc{};
    for (std::size_t i = 0; i < gradient.size(); ++i) acc += coefficients[i] * gradient[i];
    return acc;
}

inline Complex apply_field(const ComplexVector& coefficients, const ComplexVector& gradient) {
    return apply_field(std::span<const Complex>(coefficients.data(), static_cast<std::size_t>(coefficients.size())),
                       std::span<const Complex>(gradient.data(), static_cast<std::size_t>(gradient.size())));
}

} // namespace sucoset
