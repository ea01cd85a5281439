#pragma once

// Verification checks: SU(2) closed forms, finite-difference derivative oracles, frame
// duality and the conjugation bridge Ã_α = U A_α Uᴴ, and commutator closure of the
// invariant vector fields. Each check produces report rows; failures are rows, not errors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sucoset/algebra.hpp"
#include "sucoset/coset.hpp"
#include "sucoset/errors.hpp"
#include "sucoset/frame.hpp"
#include "sucoset/golden_su2.hpp"
#include "sucoset/haar.hpp"
#include "sucoset/matrix.hpp"
#include "sucoset/random.hpp"

namespace sucoset {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
    }
    return "?";
}

struct ReportRow {
    std::string name;
    int n = 0;
    std::vector<double> point;
    double metric = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::pass;
    std::string note;
};

class VerificationReport {
public:
    explicit VerificationReport(std::uint64_t seed = 0) : seed_(seed) {}

    void record(std::string name, int n, std::vector<double> point, double metric, double tolerance,
                std::string note = {}) {
        const bool ok = std::isfinite(metric) && metric <= tolerance;
        rows_.push_back({std::move(name), n, std::move(point), metric, tolerance,
                         ok ? CheckStatus::pass : CheckStatus::fail, std::move(note)});
    }

    void skip(std::string name, int n, std::vector<double> point, double tolerance, std::string reason) {
        rows_.push_back({std::move(name), n, std::move(point), std::nan(""), tolerance,
                         CheckStatus::skip, std::move(reason)});
    }

    void append(const VerificationReport& other) {
        rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
    }

    const std::vector<ReportRow>& rows() const noexcept { return rows_; }
    std::uint64_t seed() const noexcept { return seed_; }
    void set_seed(std::uint64_t seed) noexcept { seed_ = seed; }

    bool passed() const {
        return std::none_of(rows_.begin(), rows_.end(),
                            [](const ReportRow& r) { return r.status == CheckStatus::fail; });
    }

    std::size_t count(CheckStatus s) const {
        return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(),
                                                      [s](const ReportRow& r) { return r.status == s; }));
    }

    /// Largest metric among rows whose name starts with `prefix` (skips excluded).
    double max_metric(const std::string& prefix = {}) const {
        double worst = 0.0;
        for (const auto& r : rows_) {
            if (r.status == CheckStatus::skip || r.name.rfind(prefix, 0) != 0) continue;
            worst = std::isfinite(r.metric) ? std::max(worst, r.metric) : r.metric;
            if (!std::isfinite(worst)) return worst;
        }
        return worst;
    }

    /// One line per check: name n=.. point=[..] metric=.. tol=.. STATUS [note]
    std::string to_text() const {
        std::ostringstream os;
        os.precision(6);
        for (const auto& r : rows_) {
            os << r.name << " n=" << r.n << " point=[";
            for (std::size_t i = 0; i < r.point.size(); ++i) os << (i ? "," : "") << r.point[i];
            os << "] metric=" << r.metric << " tol=" << r.tolerance << ' ' << to_string(r.status);
            if (!r.note.empty()) os << " (" << r.note << ')';
            os << '\n';
        }
        os << "summary: " << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail)
           << " failed, " << count(CheckStatus::skip) << " skipped, seed=" << seed_ << '\n';
        return os.str();
    }

private:
    std::vector<ReportRow> rows_;
    std::uint64_t seed_;
};

// Random chart points away from the coordinate singularities: every γ^(m)_i in
// [0.1, 1.3/√(m−1)] so that 0.1 ≤ γ^(m) ≤ 1.3 < π/2; η and ξ uniform in [0, 2π).
inline CosetCoordinates random_chart_point(int n, RandomStream& rng) {
    require_rank(n);
    std::vector<double> v(static_cast<std::size_t>(algebra_dimension(n)));
    const double two_pi = 2.0 * std::numbers::pi;
    for (int a = 0; a < n - 1; ++a) v[static_cast<std::size_t>(a)] = rng.uniform(0.0, two_pi);
    for (int m = 2; m <= n; ++m) {
        const int off = block_offset(n, m);
        const double hi = 1.3 / std::sqrt(double(m - 1));
        for (int i = 0; i < m - 1; ++i) v[static_cast<std::size_t>(off + i)] = rng.uniform(0.1, hi);
        for (int i = 0; i < m - 1; ++i) v[static_cast<std::size_t>(off + m - 1 + i)] = rng.uniform(0.0, two_pi);
    }
    return CosetCoordinates(n, std::move(v));
}

inline std::vector<CosetCoordinates> random_chart_points(int n, int count, RandomStream& rng) {
    std::vector<CosetCoordinates> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pts.push_back(random_chart_point(n, rng));
    return pts;
}

/// SU(2) points with γ ∈ [gamma_lo, gamma_hi], η and ξ in [0, 2π).
inline std::vector<golden_su2::Point> random_su2_points(int count, RandomStream& rng,
                                                        double gamma_lo = 0.05,
                                                        double gamma_hi = std::numbers::pi / 2 - 0.05) {
    std::vector<golden_su2::Point> pts;
    pts.reserve(static_cast<std::size_t>(count));
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < count; ++i) {
        const double eta = rng.uniform(0.0, two_pi);
        const double gamma = rng.uniform(gamma_lo, gamma_hi);
        const double xi = rng.uniform(0.0, two_pi);
        pts.push_back({eta, gamma, xi});
    }
    return pts;
}

/// Compares every constructive SU(2) object against its closed form, entrywise (max |Δ|).
/// Points must keep γ at least 1e-3 away from every multiple of π/2.
inline VerificationReport check_su2_golden(const std::vector<golden_su2::Point>& points, double tol) {
    for (const auto& p : points) {
        const double half_pi = std::numbers::pi / 2;
        const double k = std::round(p.gamma / half_pi);
        if (std::abs(p.gamma - k * half_pi) < 1e-3) {
            throw InvalidArgument("check_su2_golden: gamma = " + std::to_string(p.gamma) +
                                  " is within 1e-3 of a chart singularity");
        }
    }
    namespace g = golden_su2;
    VerificationReport report;
    for (const auto& p : points) {
        const CosetCoordinates c(2, {p.eta, p.gamma, p.xi});
        const std::vector<double> pt{p.eta, p.gamma, p.xi};
        auto diff = [](const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); };

        const CosetFactorization f(c);
        report.record("golden.omega1", 2, pt, diff(f.omega(1), g::omega1(p)), tol);
        report.record("golden.omega2", 2, pt, diff(f.omega(2), g::omega2(p)), tol);
        report.record("golden.w22", 2, pt, diff(f.left(2), g::w22(p)), tol);
        report.record("golden.left_tangent.gamma", 2, pt, diff(left_tangent(1, c).value, g::left_a21(p)), tol);
        report.record("golden.left_tangent.xi", 2, pt, diff(left_tangent(2, c).value, g::left_a22(p)), tol);
        report.record("golden.right_tangent.eta", 2, pt, diff(right_tangent(0, c).value, g::right_a11(p)), tol);
        report.record("golden.right_tangent.gamma", 2, pt, diff(right_tangent(1, c).value, g::right_a21(p)), tol);
        report.record("golden.right_tangent.xi", 2, pt, diff(right_tangent(2, c).value, g::right_a22(p)), tol);

        const auto left = frame_result(Side::left, c);
        const auto right = frame_result(Side::right, c);
        report.record("golden.left_frame", 2, pt, diff(left.frame.entries(), g::left_frame(p)), tol);
        report.record("golden.left_frame_inverse", 2, pt, diff(left.inverse, g::left_frame_inverse(p)), tol);
        report.record("golden.left_fields", 2, pt, diff(left.inverse, g::left_fields(p)), tol);
        report.record("golden.left_oneforms", 2, pt, diff(left.transpose, g::left_oneforms(p)), tol);
        report.record("golden.right_frame", 2, pt, diff(right.frame.entries(), g::right_frame(p)), tol);
        report.record("golden.right_frame_inverse", 2, pt, diff(right.inverse, g::right_frame_inverse(p)), tol);
        report.record("golden.right_fields", 2, pt, diff(right.inverse, g::right_fields(p)), tol);
        report.record("golden.right_oneforms", 2, pt, diff(right.transpose, g::right_oneforms(p)), tol);

        const auto d = density(c);
        const double gd = g::density(p);
        report.record("golden.density.left", 2, pt, std::abs(d.value - gd) / std::max(1.0, gd), tol);
        report.record("golden.density.right", 2, pt, std::abs(d.right_value - gd) / std::max(1.0, gd), tol);
    }
    return report;
}

/// Central difference ∂U/∂θ_α with the given step.
inline ComplexMatrix finite_difference_group(const CosetCoordinates& c, int flat, double step) {
    const ComplexMatrix up = group_element(c.shifted(flat, step)).matrix();
    const ComplexMatrix down = group_element(c.shifted(flat, -step)).matrix();
    return (up - down) / (2.0 * step);
}

/// For each coordinate: ‖∂U/∂θ − U A_θ‖_F / max(1, ‖A_θ‖_F) and the right analog.
inline VerificationReport check_derivatives(int n, const std::vector<CosetCoordinates>& points,
                                            double step, double tol) {
    require_rank(n);
    if (!(step > 0.0)) throw InvalidArgument("check_derivatives: step must be positive");
    VerificationReport report;
    const AlgebraBasis basis(n);
    for (const auto& c : points) {
        if (c.n() != n) throw InvalidArgument("check_derivatives: point has wrong rank");
        const CosetFactorization f(c);
        const ComplexMatrix& u = f.group();
        for (int k = 0; k < c.size(); ++k) {
            const ComplexMatrix fd = finite_difference_group(c, k, step);
            const ComplexMatrix a = detail::tangent_value(Side::left, k, c, f, basis);
            const ComplexMatrix at = detail::tangent_value(Side::right, k, c, f, basis);
            const std::string label = c.coordinate_label(k);
            report.record("derivative.left[" + label + "]", n, c.values(),
                          (fd - u * a).norm() / std::max(1.0, a.norm()), tol);
            report.record("derivative.right[" + label + "]", n, c.values(),
                          (fd - at * u).norm() / std::max(1.0, at.norm()), tol);
        }
    }
    return report;
}

/// Duality A⁻¹A = I and Ã⁻¹Ã = I, the bridge Ã_α = U A_α Uᴴ, imaginarity of both frames, and
/// |det A| = |det Ã|. Duality rows are skipped where a frame is singular.
inline VerificationReport check_duality_and_bridge(int n, const std::vector<CosetCoordinates>& points,
                                                   double tol) {
    require_rank(n);
    VerificationReport report;
    const AlgebraBasis basis(n);
    const int dim = algebra_dimension(n);
    for (const auto& c : points) {
        if (c.n() != n) throw InvalidArgument("check_duality_and_bridge: point has wrong rank");
        const auto& pt = c.values();
        const FrameMatrix left = assemble_frame(Side::left, c);
        const FrameMatrix right = assemble_frame(Side::right, c);

        for (const auto& [side, frame] : {std::pair{Side::left, &left}, std::pair{Side::right, &right}}) {
            const std::string name = std::string("duality.") + to_string(side);
            try {
                const auto fr = frame_result(side, c);
                report.record(name, n, pt, (fr.inverse * frame->entries() - identity(dim)).norm(), tol);
            } catch (const SingularFrameError& e) {
                report.skip(name, n, pt, tol, std::string("singular chart point: ") + e.what());
            }
        }

        const CosetFactorization f(c);
        const ComplexMatrix& u = f.group();
        double bridge = 0.0;
        for (int k = 0; k < dim; ++k) {
            const ComplexMatrix a = detail::tangent_value(Side::left, k, c, f, basis);
            const ComplexMatrix at = detail::tangent_value(Side::right, k, c, f, basis);
            bridge = std::max(bridge, (at - u * a * u.adjoint()).norm());
        }
        report.record("bridge", n, pt, bridge, tol);
        report.record("imaginary.left", n, pt, max_abs_real(left.entries()), tol);
        report.record("imaginary.right", n, pt, max_abs_real(right.entries()), tol);

        const double dl = std::abs(determinant(left.entries()));
        const double dr = std::abs(determinant(right.entries()));
        const double scale = std::max(dl, dr);
        report.record("density.left_right", n, pt, scale == 0.0 ? 0.0 : std::abs(dl - dr) / scale, tol);
    }
    return report;
}

/// Outcome of the commutator-closure check together with the sign it settled on.
struct ClosureResult {
    VerificationReport report;
    int sign = 0;  // s with [Λ_i, Λ_j] = s i Σ_k c_ijk Λ_k on the left; right fields use −s
};

/// Commutators of the invariant vector fields, evaluated on the coordinate projections
/// f = θ_p: [Λ_i, Λ_j] θ_p = Σ_α (Λ_i)_α ∂_α (Λ_j)_p − (Λ_j)_α ∂_α (Λ_i)_p, with the field
/// coefficients differentiated by central differences. A single sign s must work for every
/// point and pair on the left, and −s on the right.
inline ClosureResult check_commutator_closure(int n, const std::vector<CosetCoordinates>& points,
                                              const std::vector<std::pair<int, int>>& pairs,
                                              double tol, double step = 1e-6) {
    require_rank(n);
    const AlgebraBasis basis(n);
    const StructureConstants sc = structure_constants(basis);
    const int dim = algebra_dimension(n);

    struct Entry {
        std::vector<double> point;
        Side side;
        std::pair<int, int> pair;
        double residual_plus;   // left with s = +1 (right with −1)
        double residual_minus;  // left with s = −1 (right with +1)
    };
    std::vector<Entry> entries;
    VerificationReport skipped;

    for (const auto& c : points) {
        for (Side side : {Side::left, Side::right}) {
            ComplexMatrix fields;
            std::vector<ComplexMatrix> derivs(static_cast<std::size_t>(dim));
            try {
                fields = frame_result(side, c).inverse;
                for (int a = 0; a < dim; ++a) {
                    const ComplexMatrix up = frame_result(side, c.shifted(a, step)).inverse;
                    const ComplexMatrix down = frame_result(side, c.shifted(a, -step)).inverse;
                    derivs[static_cast<std::size_t>(a)] = (up - down) / (2.0 * step);
                }
            } catch (const SingularFrameError& e) {
                skipped.skip(std::string("closure.") + to_string(side), n, c.values(), tol,
                             std::string("singular chart point: ") + e.what());
                continue;
            }
            for (const auto& [i, j] : pairs) {
                double plus = 0.0, minus = 0.0;
                for (int p = 0; p < dim; ++p) {
                    Complex lhs{};
                    for (int a = 0; a < dim; ++a) {
                        lhs += fields(i, a) * derivs[static_cast<std::size_t>(a)](j, p) -
                               fields(j, a) * derivs[static_cast<std::size_t>(a)](i, p);
                    }
                    Complex comb{};
                    for (int k = 0; k < dim; ++k) comb += sc(i, j, k) * fields(k, p);
                    comb *= kI;
                    const double sl = side == Side::left ? 1.0 : -1.0;
                    plus = std::max(plus, std::abs(lhs - sl * comb));
                    minus = std::max(minus, std::abs(lhs + sl * comb));
                }
                entries.push_back({c.values(), side, {i, j}, plus, minus});
            }
        }
    }

    double worst_plus = 0.0, worst_minus = 0.0;
    for (const auto& e : entries) {
        worst_plus = std::max(worst_plus, e.residual_plus);
        worst_minus = std::max(worst_minus, e.residual_minus);
    }
    ClosureResult out;
    out.sign = worst_plus <= worst_minus ? 1 : -1;
    const std::string sign_note = out.sign > 0 ? "s=+1" : "s=-1";
    for (const auto& e : entries) {
        const double r = out.sign > 0 ? e.residual_plus : e.residual_minus;
        out.report.record(std::string("closure.") + to_string(e.side) + "[" + std::to_string(e.pair.first) +
                              "," + std::to_string(e.pair.second) + "]",
                          n, e.point, r, tol, sign_note);
    }
    out.report.append(skipped);
    return out;
}

inline std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    const int dim = algebra_dimension(n);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
    return pairs;
}

inline std::vector<std::pair<int, int>> random_pairs(int n, int count, RandomStream& rng) {
    const int dim = algebra_dimension(n);
    std::vector<std::pair<int, int>> pairs;
    while (static_cast<int>(pairs.size()) < count) {
        const int i = static_cast<int>(rng.uniform() * dim);
        const int j = static_cast<int>(rng.uniform() * dim);
        if (i != j) pairs.emplace_back(i, j);
    }
    return pairs;
}

struct SuiteOptions {
    std::vector<int> ranks{2, 3};
    std::uint64_t seed = 20240611;
    std::optional<double> tolerance;  // overrides every per-check tolerance when set
};

inline constexpr double kGoldenTolerance = 1e-10;
inline constexpr double kDerivativeTolerance = 1e-5;
inline constexpr double kDerivativeStep = 1e-6;
inline constexpr double kDualityTolerance = 1e-9;
inline constexpr double kClosureTolerance = 1e-4;

/// The default suite run by `verify`.
inline VerificationReport run_suite(const SuiteOptions& opt) {
    VerificationReport report(opt.seed);
    auto tol = [&](double dflt) { return opt.tolerance.value_or(dflt); };
    for (int n : opt.ranks) {
        require_rank(n);
        RandomStream rng(opt.seed, static_cast<std::uint64_t>(n));
        if (n == 2) report.append(check_su2_golden(random_su2_points(100, rng), tol(kGoldenTolerance)));
        const int npts = n <= 3 ? 10 : 3;
        report.append(check_derivatives(n, random_chart_points(n, npts, rng), kDerivativeStep,
                                        tol(kDerivativeTolerance)));
        auto dual_points = random_chart_points(n, npts, rng);
        dual_points.push_back(CosetCoordinates::zero(n));
        report.append(check_duality_and_bridge(n, dual_points, tol(kDualityTolerance)));
        const auto pairs = n == 2 ? all_pairs(n) : random_pairs(n, n == 3 ? 30 : 10, rng);
        report.append(check_commutator_closure(n, random_chart_points(n, n <= 3 ? 3 : 1, rng), pairs,
                                               tol(kClosureTolerance))
                          .report);
    }
    return report;
}

} // namespace sucoset
