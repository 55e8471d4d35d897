#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace curvmo {

/// splitmix64 step; used to derive independent per-chunk sub-seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seedable generator over mt19937_64 with hand-rolled uniform and normal
/// transforms, so a fixed seed yields the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform01_open_left() { return 1.0 - uniform01(); }

    /// Uniform integer in [lo, hi].
    long long uniform_int(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(engine_() % span);
    }

    /// Standard normal via Box-Muller; generates pairs and caches one value.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01_open_left();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

    /// Gamma(shape, 1) for shape = n or n + 1/2, n integer >= 0.
    /// Integer part as a sum of exponentials, the half as a squared normal.
    double gamma_half_integer(int twice_shape) {
        double value = 0.0;
        for (int i = 0; i < twice_shape / 2; ++i) value += -std::log(uniform01_open_left());
        if (twice_shape % 2 == 1) {
            const double z = normal();
            value += 0.5 * z * z;
        }
        return value;
    }

private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace curvmo
