#pragma once

// Dense complex matrix arithmetic shared by every other header.
//
// Storage and the Hermitian eigensolver come from Eigen. The LU factorization is
// written out here because callers need the singularity threshold and the offending
// pivot magnitude, which Eigen's PartialPivLU does not report.

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sucoset/errors.hpp"

namespace sucoset {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

/// Default relative pivot threshold for inverse(): a pivot counts as zero when its
/// magnitude is below this factor times the largest row norm of the input.
inline constexpr double kDefaultSingularityThreshold = 1e-12;

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

inline double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw InvalidArgument("multiply: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                              "x" + std::to_string(b.cols()) + ")");
    }
    return a * b;
}

/// ‖a†a − I‖_F
inline double unitarity_residual(const ComplexMatrix& a) {
    return (a.adjoint() * a - identity(a.cols())).norm();
}

/// ‖a + a†‖_F
inline double antihermiticity_residual(const ComplexMatrix& a) { return (a + a.adjoint()).norm(); }

inline double max_abs_real(const ComplexMatrix& a) { return a.real().cwiseAbs().maxCoeff(); }

/// Largest absolute row sum.
inline double max_row_norm(const ComplexMatrix& a) {
    return a.rows() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff();
}

namespace detail {

inline void require_square(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw InvalidArgument(std::string(who) + ": matrix must be square and non-empty, got " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

// In-place LU with partial pivoting, PA = LU packed into `lu`.
struct LuFactors {
    ComplexMatrix lu;
    std::vector<Eigen::Index> perm;  // row i of PA is row perm[i] of A
    int parity = 1;
    // First column whose pivot fell at or below the threshold, if any.
    std::optional<Eigen::Index> failed_column;
    double failed_pivot = 0.0;
};

inline LuFactors lu_factor(const ComplexMatrix& a, double abs_threshold) {
    const Eigen::Index n = a.rows();
    LuFactors f{a, std::vector<Eigen::Index>(static_cast<std::size_t>(n)), 1, std::nullopt, 0.0};
    for (Eigen::Index i = 0; i < n; ++i) f.perm[static_cast<std::size_t>(i)] = i;

    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        double best = std::abs(f.lu(k, k));
        for (Eigen::Index r = k + 1; r < n; ++r) {
            const double v = std::abs(f.lu(r, k));
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (piv != k) {
            f.lu.row(k).swap(f.lu.row(piv));
            std::swap(f.perm[static_cast<std::size_t>(k)], f.perm[static_cast<std::size_t>(piv)]);
            f.parity = -f.parity;
        }
        if (best <= abs_threshold) {
            f.failed_column = k;
            f.failed_pivot = best;
            return f;
        }
        const Complex pivot = f.lu(k, k);
        for (Eigen::Index r = k + 1; r < n; ++r) {
            const Complex factor = f.lu(r, k) / pivot;
            f.lu(r, k) = factor;
            if (factor != Complex{}) {
                f.lu.row(r).tail(n - k - 1) -= factor * f.lu.row(k).tail(n - k - 1);
            }
        }
    }
    return f;
}

} // namespace detail

/// Determinant via partial-pivot elimination. Exactly singular input yields 0.
inline Complex determinant(const ComplexMatrix& a) {
    detail::require_square(a, "determinant");
    const auto f = detail::lu_factor(a, 0.0);
    if (f.failed_column) return Complex{};
    Complex det = static_cast<double>(f.parity);
    for (Eigen::Index i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
    return det;
}

/// Inverse via partial-pivot LU. Throws SingularMatrixError when a pivot is at or below
/// `relative_threshold` times the largest row norm of `a`.
inline ComplexMatrix inverse(const ComplexMatrix& a,
                             double relative_threshold = kDefaultSingularityThreshold) {
    detail::require_square(a, "inverse");
    const double threshold = relative_threshold * max_row_norm(a);
    const auto f = detail::lu_factor(a, threshold);
    if (f.failed_column) {
        throw SingularMatrixError(static_cast<std::size_t>(*f.failed_column), f.failed_pivot,
                                  threshold);
    }
    const Eigen::Index n = a.rows();
    ComplexMatrix inv(n, n);
    ComplexVector col(n);
    for (Eigen::Index c = 0; c < n; ++c) {
        // Solve L y = P e_c, then U x = y.
        for (Eigen::Index i = 0; i < n; ++i) {
            col(i) = f.perm[static_cast<std::size_t>(i)] == c ? Complex{1.0} : Complex{};
        }
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < i; ++j) col(i) -= f.lu(i, j) * col(j);
        }
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            for (Eigen::Index j = i + 1; j < n; ++j) col(i) -= f.lu(i, j) * col(j);
            col(i) /= f.lu(i, i);
        }
        inv.col(c) = col;
    }
    return inv;
}

/// 1-norm condition number ‖a‖₁‖a⁻¹‖₁ given an already computed inverse.
inline double condition_estimate(const ComplexMatrix& a, const ComplexMatrix& a_inv) {
    auto norm1 = [](const ComplexMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); };
    return norm1(a) * norm1(a_inv);
}

/// exp(h) for anti-Hermitian h, through the eigendecomposition of the Hermitian matrix −i·h.
/// The result is unitary up to the accuracy of the eigenvectors.
inline ComplexMatrix expm_antihermitian(const ComplexMatrix& h, double tol = 1e-10) {
    detail::require_square(h, "expm_antihermitian");
    const double scale = h.norm();
    if (antihermiticity_residual(h) > tol * scale) {
        throw InvalidArgument("expm_antihermitian: input is not anti-Hermitian (||h + h^dagger||_F = " +
                              std::to_string(antihermiticity_residual(h)) + ")");
    }
    if (scale == 0.0) return identity(h.rows());

    ComplexMatrix herm = -kI * h;
    herm = 0.5 * (herm + herm.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(herm);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("expm_antihermitian: eigendecomposition did not converge");
    }
    ComplexVector phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) phases(i) = std::exp(kI * eig.eigenvalues()(i));
    const ComplexMatrix& v = eig.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

} // namespace sucoset
