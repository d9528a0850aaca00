#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "pbwos/vec3.hpp"

namespace pbwos {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// 64-bit finalizer (Stafford mix 13). Bijective, strong avalanche.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace detail

/// Counter-based pseudo-random stream keyed by (seed, walker index).
///
/// Each stream is a Weyl sequence with a per-stream odd increment, mixed
/// through a 64-bit finalizer. The nth output is a pure function of
/// (seed, index, n), so streams can be created on one thread and consumed
/// on another, and a walk replays identically regardless of scheduling.
/// Not cryptographic.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t index) {
        const std::uint64_t h = detail::mix64(seed + detail::kGolden);
        state_ = detail::mix64(h ^ detail::mix64(index + detail::kGolden));
        gamma_ = detail::mix64(h + index) | 1ULL;
    }

    std::uint64_t next_u64() {
        state_ += gamma_;
        ++draws_;
        return detail::mix64(state_);
    }

    /// Uniform draw in [0, 1) with 53 random bits. Advances the stream by one.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Number of draws made so far.
    std::uint64_t draws() const { return draws_; }

private:
    std::uint64_t state_ = 0;
    std::uint64_t gamma_ = 0;
    std::uint64_t draws_ = 0;
};

/// Uniform direction on the unit sphere. Consumes exactly two uniforms in
/// fixed order: u for cos(theta) = 2u - 1, then v for the azimuth 2*pi*v.
template <class Rng>
Vec3 sample_unit_sphere(Rng& rng) {
    const double cos_theta = 2.0 * rng.uniform() - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    return {sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
}

/// Decorrelated seed for auxiliary runs (independent benchmark repetitions,
/// the delta/10 comparison run). Distinct salts give independent streams.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    return detail::mix64(detail::mix64(seed + detail::kGolden) + detail::mix64(salt) + salt);
}

}  // namespace pbwos
