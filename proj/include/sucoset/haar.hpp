#pragma once

// Haar measure in coset coordinates: density |det A| with respect to ∏ dθ, and plain Monte
// Carlo integration over the SU(2) fundamental box
//   η ∈ [0, 4π), γ ∈ [0, π/2], ξ ∈ [0, 2π),
// on which U(η, γ, ξ) covers every element of SU(2) once. Total volume 16π².

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "sucoset/coset.hpp"
#include "sucoset/errors.hpp"
#include "sucoset/frame.hpp"
#include "sucoset/matrix.hpp"
#include "sucoset/random.hpp"

namespace sucoset {

struct HaarDensity {
    double value = 0.0;        // |det A|
    double right_value = 0.0;  // |det Ã|
    CosetCoordinates coords;

    double relative_difference() const {
        const double scale = std::max(value, right_value);
        return scale == 0.0 ? 0.0 : std::abs(value - right_value) / scale;
    }
};

/// |det A| only; the cheap path used inside integration loops.
inline double left_density(const CosetCoordinates& c) {
    return std::abs(determinant(assemble_frame(Side::left, c).entries()));
}

/// Left and right densities at a point. They must agree; a mismatch beyond 1e-8 relative
/// indicates a broken frame and raises ConsistencyError.
inline HaarDensity density(const CosetCoordinates& c) {
    const double left = std::abs(determinant(assemble_frame(Side::left, c).entries()));
    const double right = std::abs(determinant(assemble_frame(Side::right, c).entries()));
    HaarDensity d{left, right, c};
    if (std::abs(left - right) > 1e-8 * std::max(left, right) + 1e-12) {
        throw ConsistencyError("left and right Haar densities disagree: " + std::to_string(left) +
                               " vs " + std::to_string(right));
    }
    return d;
}

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    double width() const { return upper - lower; }
};

struct IntegrationDomain {
    std::vector<Interval> intervals;  // flat coordinate order
    std::int64_t samples = 0;
    std::uint64_t seed = 0;

    double volume() const {
        double v = 1.0;
        for (const auto& iv : intervals) v *= iv.width();
        return v;
    }

    void validate(int n) const {
        if (static_cast<int>(intervals.size()) != algebra_dimension(n)) {
            throw InvalidArgument("integration domain needs " + std::to_string(algebra_dimension(n)) +
                                  " intervals");
        }
        for (const auto& iv : intervals) {
            if (!(iv.lower < iv.upper)) throw InvalidArgument("integration interval with lower >= upper");
        }
        if (samples <= 0) throw InvalidArgument("sample count must be positive");
    }
};

inline IntegrationDomain default_su2_domain(std::int64_t samples, std::uint64_t seed) {
    using std::numbers::pi;
    return IntegrationDomain{{{0.0, 4.0 * pi}, {0.0, pi / 2.0}, {0.0, 2.0 * pi}}, samples, seed};
}

struct IntegrationEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    std::int64_t samples = 0;
};

using GroupFunction = std::function<double(const ComplexMatrix&)>;

namespace detail {

// Running mean and M2 for a batch of weighted samples.
struct Moments {
    std::int64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) {
        if (o.count == 0) return;
        const auto total = count + o.count;
        const double d = o.mean - mean;
        mean += d * static_cast<double>(o.count) / static_cast<double>(total);
        m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) /
                         static_cast<double>(total);
        count = total;
    }
};

inline constexpr std::int64_t kShards = 64;

// Evaluates `sample(point, moments...)` over the domain, split into a fixed number of shards.
// Each shard draws from its own (seed, shard) substream and shards are merged in index
// order, so the result does not depend on the number of worker threads.
template <std::size_t K, typename Sampler>
std::array<Moments, K> sharded_moments(const IntegrationDomain& domain, int n, unsigned workers,
                                       Sampler&& sample) {
    const std::int64_t shards = std::min<std::int64_t>(kShards, domain.samples);
    std::vector<std::array<Moments, K>> per_shard(static_cast<std::size_t>(shards));

    auto run_shard = [&](std::int64_t s) {
        const std::int64_t count = domain.samples / shards + (s < domain.samples % shards ? 1 : 0);
        RandomStream rng(domain.seed, static_cast<std::uint64_t>(s));
        std::vector<double> point(domain.intervals.size());
        auto& acc = per_shard[static_cast<std::size_t>(s)];
        for (std::int64_t i = 0; i < count; ++i) {
            for (std::size_t k = 0; k < point.size(); ++k) {
                point[k] = rng.uniform(domain.intervals[k].lower, domain.intervals[k].upper);
            }
            sample(CosetCoordinates(n, point), acc);
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::int64_t>(workers, shards));
    if (workers <= 1) {
        for (std::int64_t s = 0; s < shards; ++s) run_shard(s);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::int64_t s; (s = next.fetch_add(1)) < shards;) run_shard(s);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::array<Moments, K> total{};
    for (const auto& shard : per_shard) {
        for (std::size_t k = 0; k < K; ++k) total[k].merge(shard[k]);
    }
    return total;
}

inline IntegrationEstimate to_estimate(const Moments& m, double volume) {
    const double var = m.count > 1 ? m.m2 / static_cast<double>(m.count - 1) : 0.0;
    return {volume * m.mean, volume * std::sqrt(var / static_cast<double>(m.count)), m.count};
}

} // namespace detail

/// Monte Carlo estimate of ∫ f(U(θ)) |det A(θ)| dθ over an SU(2) coordinate box.
inline IntegrationEstimate integrate_su2(const GroupFunction& f, const IntegrationDomain& domain,
                                         unsigned workers = 0) {
    domain.validate(2);
    const auto m = detail::sharded_moments<1>(domain, 2, workers, [&](const CosetCoordinates& c, auto& acc) {
        acc[0].add(f(group_element(c).matrix()) * left_density(c));
    });
    return detail::to_estimate(m[0], domain.volume());
}

struct InvarianceResult {
    IntegrationEstimate base;        // ∫ f(U) dμ
    IntegrationEstimate translated;  // ∫ f(gU) dμ
    double deviation = 0.0;          // |translated − base| / |base|
};

/// Compares ∫ f(gU) dμ with ∫ f(U) dμ using the same sample points for both integrals.
inline InvarianceResult invariance_check(const ComplexMatrix& g, const GroupFunction& f,
                                         const IntegrationDomain& domain, unsigned workers = 0) {
    domain.validate(2);
    if (g.rows() != 2 || g.cols() != 2) throw InvalidArgument("invariance_check: g must be 2x2");
    if (unitarity_residual(g) > 1e-10) throw InvalidArgument("invariance_check: g is not unitary");
    const auto m = detail::sharded_moments<2>(domain, 2, workers, [&](const CosetCoordinates& c, auto& acc) {
        const ComplexMatrix u = group_element(c).matrix();
        const double w = left_density(c);
        acc[0].add(f(u) * w);
        acc[1].add(f(g * u) * w);
    });
    InvarianceResult r{detail::to_estimate(m[0], domain.volume()),
                       detail::to_estimate(m[1], domain.volume()), 0.0};
    r.deviation = std::abs(r.translated.value - r.base.value) / std::abs(r.base.value);
    return r;
}

} // namespace sucoset
