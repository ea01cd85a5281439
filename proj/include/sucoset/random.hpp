#pragma once

#include <cstdint>
#include <random>

namespace sucoset {

/// SplitMix64 finalizer, used to derive independent substream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic uniform stream. std::mt19937_64 output is fixed by the standard, and the
/// double conversion is done here rather than through std::uniform_real_distribution, so a
/// (seed, stream) pair produces the same numbers on every platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0)
        : engine_(mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL))) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

} // namespace sucoset
