#pragma once

// Generalized Gell-Mann basis of su(N), normalized to Tr(L_i L_j) = δ_ij / 2.
//
// Flat order: the N−1 Cartan generators L^(1)_1..L^(1)_{N−1}, then for m = 2..N the
// 2(m−1) off-diagonal generators L^(m)_1..L^(m)_{2(m−1)}. The first m−1 of each block are
// symmetric (real), the remaining m−1 antisymmetric (imaginary). Coordinates share
// the same layout, so frame columns line up with frame rows block by block.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sucoset/errors.hpp"
#include "sucoset/matrix.hpp"

namespace sucoset {

/// (m, α_m) pair, both 1-based. Block m = 1 holds the Cartan generators.
struct BlockIndex {
    int block = 1;
    int alpha = 1;

    friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

inline int algebra_dimension(int n) { return n * n - 1; }

inline void require_rank(int n) {
    if (n < 2) throw InvalidArgument("group rank parameter n must be >= 2, got " + std::to_string(n));
}

inline int block_size(int n, int m) { return m == 1 ? n - 1 : 2 * (m - 1); }

inline int block_offset(int n, int m) { return m == 1 ? 0 : (n - 1) + (m - 2) * (m - 1); }

inline int flat_index(int n, BlockIndex idx) {
    if (idx.block < 1 || idx.block > n || idx.alpha < 1 || idx.alpha > block_size(n, idx.block)) {
        throw InvalidArgument("block index (" + std::to_string(idx.block) + ", " +
                              std::to_string(idx.alpha) + ") out of range for n = " +
                              std::to_string(n));
    }
    return block_offset(n, idx.block) + idx.alpha - 1;
}

inline BlockIndex block_index(int n, int flat) {
    if (flat < 0 || flat >= algebra_dimension(n)) {
        throw InvalidArgument("flat index " + std::to_string(flat) + " out of range for n = " +
                              std::to_string(n));
    }
    if (flat < n - 1) return {1, flat + 1};
    for (int m = 2; m <= n; ++m) {
        const int off = block_offset(n, m);
        if (flat < off + block_size(n, m)) return {m, flat - off + 1};
    }
    throw std::logic_error("block_index: unreachable");
}

class AlgebraBasis {
public:
    explicit AlgebraBasis(int n) : n_(n) {
        require_rank(n);
        generators_.reserve(static_cast<std::size_t>(algebra_dimension(n)));
        for (int a = 1; a <= n - 1; ++a) generators_.push_back(cartan(a));
        for (int m = 2; m <= n; ++m) {
            for (int a = 1; a <= 2 * (m - 1); ++a) generators_.push_back(off_diagonal(m, a));
        }
    }

    int n() const noexcept { return n_; }
    int dimension() const noexcept { return algebra_dimension(n_); }
    const std::vector<ComplexMatrix>& generators() const noexcept { return generators_; }
    const ComplexMatrix& operator[](int flat) const { return generators_.at(static_cast<std::size_t>(flat)); }
    const ComplexMatrix& at(BlockIndex idx) const { return (*this)[flat_index(n_, idx)]; }

    /// Σ_k v_k L_k
    ComplexMatrix combine(const ComplexVector& v) const {
        if (v.size() != dimension()) throw InvalidArgument("combine: coefficient vector has wrong length");
        ComplexMatrix x = ComplexMatrix::Zero(n_, n_);
        for (int k = 0; k < dimension(); ++k) x += v(k) * generators_[static_cast<std::size_t>(k)];
        return x;
    }

    std::string label(int flat) const {
        const auto idx = block_index(n_, flat);
        return "L(" + std::to_string(idx.block) + ")_" + std::to_string(idx.alpha);
    }

private:
    ComplexMatrix cartan(int alpha) const {
        ComplexMatrix l = ComplexMatrix::Zero(n_, n_);
        const double norm = 1.0 / std::sqrt(2.0 * alpha * (alpha + 1));
        for (int j = 0; j < alpha; ++j) l(j, j) = norm;
        l(alpha, alpha) = -alpha * norm;
        return l;
    }

    ComplexMatrix off_diagonal(int m, int alpha) const {
        ComplexMatrix l = ComplexMatrix::Zero(n_, n_);
        if (alpha <= m - 1) {
            l(alpha - 1, m - 1) = 0.5;
            l(m - 1, alpha - 1) = 0.5;
        } else {
            const int k = alpha - m;  // 0-based row of the partner entry
            l(k, m - 1) = Complex(0.0, -0.5);
            l(m - 1, k) = Complex(0.0, 0.5);
        }
        return l;
    }

    int n_;
    std::vector<ComplexMatrix> generators_;
};

inline AlgebraBasis build_basis(int n) { return AlgebraBasis(n); }

/// Coefficients v with x = Σ_k v_k L_k for traceless x, read off entrywise:
/// Cartan weights from weighted diagonal sums, off-diagonal pairs from the symmetric and
/// antisymmetric combinations of x(m, b) and x(b, m).
inline ComplexVector project(const ComplexMatrix& x, int n, double trace_tol = 1e-10) {
    require_rank(n);
    if (x.rows() != n || x.cols() != n) {
        throw InvalidArgument("project: expected " + std::to_string(n) + "x" + std::to_string(n) +
                              " matrix");
    }
    const Complex tr = x.trace();
    if (std::abs(tr) > trace_tol * std::max(1.0, x.norm())) {
        throw InvalidArgument("project: matrix is not traceless (|Tr| = " +
                              std::to_string(std::abs(tr)) + ")");
    }
    ComplexVector v(algebra_dimension(n));
    for (int beta = 1; beta <= n - 1; ++beta) {
        Complex diag_sum{};
        for (int j = 0; j < beta; ++j) diag_sum += x(j, j);
        v(beta - 1) = 2.0 / std::sqrt(2.0 * beta * (beta + 1)) * (diag_sum - double(beta) * x(beta, beta));
    }
    for (int m = 2; m <= n; ++m) {
        const int off = block_offset(n, m);
        const int r = m - 1;
        for (int b = 0; b < m - 1; ++b) {
            v(off + b) = x(r, b) + x(b, r);
            v(off + m - 1 + b) = -kI * (x(r, b) - x(b, r));
        }
    }
    return v;
}

inline ComplexVector project(const ComplexMatrix& x, const AlgebraBasis& basis, double trace_tol = 1e-10) {
    return project(x, basis.n(), trace_tol);
}

/// Real structure constants with [L_i, L_j] = i Σ_k c(i,j,k) L_k.
class StructureConstants {
public:
    StructureConstants(int n, std::vector<double> values)
        : n_(n), dim_(algebra_dimension(n)), values_(std::move(values)) {}

    int n() const noexcept { return n_; }
    int dimension() const noexcept { return dim_; }
    double operator()(int i, int j, int k) const {
        return values_[static_cast<std::size_t>((i * dim_ + j) * dim_ + k)];
    }

private:
    int n_;
    int dim_;
    std::vector<double> values_;
};

inline StructureConstants structure_constants(const AlgebraBasis& basis, double imag_tol = 1e-12) {
    const int d = basis.dimension();
    std::vector<double> c(static_cast<std::size_t>(d) * d * d, 0.0);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const ComplexMatrix comm = basis[i] * basis[j] - basis[j] * basis[i];
            for (int k = 0; k < d; ++k) {
                const Complex val = Complex(0.0, -2.0) * (comm * basis[k]).trace();
                if (std::abs(val.imag()) > imag_tol) {
                    throw ConsistencyError("structure constant c(" + std::to_string(i) + "," +
                                           std::to_string(j) + "," + std::to_string(k) +
                                           ") is not real");
                }
                c[static_cast<std::size_t>((i * d + j) * d + k)] = val.real();
                c[static_cast<std::size_t>((j * d + i) * d + k)] = -val.real();
            }
        }
    }
    return StructureConstants(basis.n(), std::move(c));
}

} // namespace sucoset
