#pragma once

// Canonical coset coordinates on SU(N) and the factors of U = Ω^(N) Ω^(N−1) ··· Ω^(2) Ω^(1).
//
// Ω^(1) is the diagonal torus element. For m ≥ 2, Ω^(m) = X R Xᴴ with X a diagonal phase
// matrix built from ξ^(m) and R a real rotation in the span of e_1..e_m built from γ^(m).
// All maps are entire in the coordinates; γ^(m) = |γ^(m)_·| enters only through the even
// functions in the detail namespace below, so the origin γ^(m) = 0 needs no special case.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "sucoset/algebra.hpp"
#include "sucoset/errors.hpp"
#include "sucoset/matrix.hpp"

namespace sucoset {

namespace detail {

// Below this radius the even functions are evaluated from their Taylor series; the
// closed forms lose relative accuracy to cancellation near zero.
inline constexpr double kSeriesRadius = 0.05;

/// sin(x)/x
inline double sinc(double x) {
    if (std::abs(x) < kSeriesRadius) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
    }
    return std::sin(x) / x;
}

/// (1 − cos x)/x²
inline double cosc(double x) {
    if (std::abs(x) < kSeriesRadius) {
        const double x2 = x * x;
        return 0.5 * (1.0 - x2 / 12.0 * (1.0 - x2 / 30.0 * (1.0 - x2 / 56.0 * (1.0 - x2 / 90.0))));
    }
    return (1.0 - std::cos(x)) / (x * x);
}

/// (1 − sin(x)/x)/x²
inline double sinc_defect(double x) {
    if (std::abs(x) < kSeriesRadius) {
        const double x2 = x * x;
        return (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0 * (1.0 - x2 / 110.0)))) / 6.0;
    }
    return (1.0 - std::sin(x) / x) / (x * x);
}

} // namespace detail

/// The N²−1 real coordinates, stored flat in the order
///   η_1..η_{N−1}; then for m = 2..N: γ^(m)_1..γ^(m)_{m−1}, ξ^(m)_1..ξ^(m)_{m−1}.
/// Coordinate block m occupies the same flat positions as generator block m.
class CosetCoordinates {
public:
    CosetCoordinates(int n, std::vector<double> flat) : n_(n), values_(std::move(flat)) {
        require_rank(n);
        if (static_cast<int>(values_.size()) != algebra_dimension(n)) {
            throw InvalidArgument("expected " + std::to_string(algebra_dimension(n)) +
                                  " coordinates for n = " + std::to_string(n) + ", got " +
                                  std::to_string(values_.size()));
        }
    }

    static CosetCoordinates zero(int n) {
        require_rank(n);
        return CosetCoordinates(n, std::vector<double>(static_cast<std::size_t>(algebra_dimension(n)), 0.0));
    }

    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }
    std::span<const double> flat() const noexcept { return values_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double operator[](int i) const { return values_.at(static_cast<std::size_t>(i)); }

    int eta_index(int alpha) const { return flat_index(n_, {1, alpha}); }
    int gamma_index(int m, int i) const {
        check_coset_component(m, i);
        return block_offset(n_, m) + i - 1;
    }
    int xi_index(int m, int i) const {
        check_coset_component(m, i);
        return block_offset(n_, m) + (m - 1) + i - 1;
    }

    double eta(int alpha) const { return (*this)[eta_index(alpha)]; }
    double gamma(int m, int i) const { return (*this)[gamma_index(m, i)]; }
    double xi(int m, int i) const { return (*this)[xi_index(m, i)]; }

    /// √(Σ_i (γ^(m)_i)²)
    double gamma_radius(int m) const {
        double s = 0.0;
        for (int i = 1; i < m; ++i) s += gamma(m, i) * gamma(m, i);
        return std::sqrt(s);
    }

    CosetCoordinates shifted(int flat, double delta) const {
        auto v = values_;
        v.at(static_cast<std::size_t>(flat)) += delta;
        return CosetCoordinates(n_, std::move(v));
    }

    std::string coordinate_label(int flat) const {
        const auto idx = block_index(n_, flat);
        if (idx.block == 1) return "eta_" + std::to_string(idx.alpha);
        const int m = idx.block;
        if (idx.alpha <= m - 1) return "gamma(" + std::to_string(m) + ")_" + std::to_string(idx.alpha);
        return "xi(" + std::to_string(m) + ")_" + std::to_string(idx.alpha - m + 1);
    }

private:
    void check_coset_component(int m, int i) const {
        if (m < 2 || m > n_ || i < 1 || i > m - 1) {
            throw InvalidArgument("coset component (m = " + std::to_string(m) + ", i = " +
                                  std::to_string(i) + ") out of range for n = " + std::to_string(n_));
        }
    }

    int n_;
    std::vector<double> values_;
};

/// N×N special unitary matrix.
class GroupElement {
public:
    explicit GroupElement(ComplexMatrix u) : u_(std::move(u)) {
        if (u_.rows() != u_.cols() || u_.rows() < 2) {
            throw InvalidArgument("group element must be a square matrix of size >= 2");
        }
    }

    int n() const noexcept { return static_cast<int>(u_.rows()); }
    const ComplexMatrix& matrix() const noexcept { return u_; }

    double unitarity_residual() const { return sucoset::unitarity_residual(u_); }
    double determinant_residual() const { return std::abs(determinant(u_) - Complex{1.0}); }

private:
    ComplexMatrix u_;
};

namespace detail {

inline void require_coset_block(int m, int n) {
    if (m < 2 || m > n) {
        throw InvalidArgument("coset block m = " + std::to_string(m) + " outside 2.." + std::to_string(n));
    }
}

inline Complex phase(const CosetCoordinates& c, int m, int row) {
    return row < m - 1 ? std::polar(1.0, c.xi(m, row + 1)) : Complex{1.0};
}

} // namespace detail

/// Ω^(1): diag(exp(−i√((k−1)/2k) η_{k−1} + i Σ_{j≥k} η_j/√(2j(j+1)))), η_0 = 0.
inline GroupElement torus_element(const CosetCoordinates& c) {
    const int n = c.n();
    ComplexMatrix t = ComplexMatrix::Zero(n, n);
    for (int k = 1; k <= n; ++k) {
        double angle = k > 1 ? -std::sqrt((k - 1.0) / (2.0 * k)) * c.eta(k - 1) : 0.0;
        for (int j = k; j <= n - 1; ++j) angle += c.eta(j) / std::sqrt(2.0 * j * (j + 1));
        t(k - 1, k - 1) = std::polar(1.0, angle);
    }
    return GroupElement(std::move(t));
}

/// R^(m;N): real orthogonal, det +1, acting in the span of e_1..e_m.
inline RealMatrix rotation_factor(int m, const CosetCoordinates& c) {
    const int n = c.n();
    detail::require_coset_block(m, n);
    const double g = c.gamma_radius(m);
    const double s = detail::sinc(g);
    const double q = detail::cosc(g);
    RealMatrix r = RealMatrix::Identity(n, n);
    for (int i = 0; i < m - 1; ++i) {
        const double gi = c.gamma(m, i + 1);
        for (int j = 0; j < m - 1; ++j) r(i, j) -= gi * c.gamma(m, j + 1) * q;
        r(i, m - 1) = gi * s;
        r(m - 1, i) = -gi * s;
    }
    r(m - 1, m - 1) = std::cos(g);
    return r;
}

/// X^(m;N) = diag(e^{iξ^(m)_1}, …, e^{iξ^(m)_{m−1}}, 1, …, 1).
inline ComplexMatrix phase_factor(int m, const CosetCoordinates& c) {
    const int n = c.n();
    detail::require_coset_block(m, n);
    ComplexMatrix x = ComplexMatrix::Identity(n, n);
    for (int i = 0; i < m - 1; ++i) x(i, i) = detail::phase(c, m, i);
    return x;
}

/// Ω^(m;N) = X R Xᴴ.
inline GroupElement coset_factor(int m, const CosetCoordinates& c) {
    const RealMatrix r = rotation_factor(m, c);
    const int n = c.n();
    ComplexMatrix o(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            o(i, j) = detail::phase(c, m, i) * r(i, j) * std::conj(detail::phase(c, m, j));
        }
    }
    return GroupElement(std::move(o));
}

/// All factors Ω^(1)..Ω^(N) with left partial products W^(m) = Ω^(m)···Ω^(1) and right
/// partial products W̃^(k) = Ω^(N)···Ω^(k+1). Indices are 1-based; slot 0 is unused.
class CosetFactorization {
public:
    explicit CosetFactorization(const CosetCoordinates& c) : n_(c.n()) {
        const auto sz = static_cast<std::size_t>(n_ + 1);
        omega_.resize(sz);
        left_.resize(sz);
        right_.resize(sz);
        omega_[1] = torus_element(c).matrix();
        for (int m = 2; m <= n_; ++m) omega_[static_cast<std::size_t>(m)] = coset_factor(m, c).matrix();

        left_[1] = omega_[1];
        for (int m = 2; m <= n_; ++m) {
            left_[static_cast<std::size_t>(m)] = omega_[static_cast<std::size_t>(m)] * left_[static_cast<std::size_t>(m - 1)];
        }
        right_[static_cast<std::size_t>(n_)] = identity(n_);
        for (int k = n_ - 1; k >= 1; --k) {
            right_[static_cast<std::size_t>(k)] = right_[static_cast<std::size_t>(k + 1)] * omega_[static_cast<std::size_t>(k + 1)];
        }
    }

    int n() const noexcept { return n_; }
    const ComplexMatrix& omega(int m) const { return omega_.at(checked(m)); }
    const ComplexMatrix& left(int m) const { return left_.at(checked(m)); }
    const ComplexMatrix& right(int k) const { return right_.at(checked(k)); }
    const ComplexMatrix& group() const { return left_.at(static_cast<std::size_t>(n_)); }

private:
    std::size_t checked(int m) const {
        if (m < 1 || m > n_) {
            throw InvalidArgument("factor index " + std::to_string(m) + " outside 1.." + std::to_string(n_));
        }
        return static_cast<std::size_t>(m);
    }

    int n_;
    std::vector<ComplexMatrix> omega_;
    std::vector<ComplexMatrix> left_;
    std::vector<ComplexMatrix> right_;
};

/// U = Ω^(N;N) ··· Ω^(2;N) Ω^(1;N); Ω^(1;N) acts first.
inline GroupElement group_element(const CosetCoordinates& c) {
    return GroupElement(CosetFactorization(c).group());
}

/// W^(m;N) = Ω^(m;N) ··· Ω^(1;N), 1 ≤ m ≤ N.
inline GroupElement partial_product_left(int m, const CosetCoordinates& c) {
    return GroupElement(CosetFactorization(c).left(m));
}

/// W̃^(k;N) = Ω^(N;N) ··· Ω^(k+1;N), 1 ≤ k ≤ N; the empty product W̃^(N;N) is the identity.
inline GroupElement partial_product_right(int k, const CosetCoordinates& c) {
    return GroupElement(CosetFactorization(c).right(k));
}

} // namespace sucoset
