#pragma once

#include <cstdint>
#include <initializer_list>

namespace irplan {

// SplitMix64 (Steele, Lea & Flood; Vigna's fixed-increment variant).
// Small, fast, and good enough for simulation sampling. We use it both as
// a generator and as a mixing function for deriving independent substreams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += UINT64_C(0x9E3779B97F4A7C15));
        z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n). n must be > 0; modulo bias is irrelevant at our scales.
    std::uint64_t next_below(std::uint64_t n) {
        return next() % n;
    }

private:
    std::uint64_t state_;
};

// Derives a substream seed from a base seed and a path of indices. Streams
// with distinct paths are statistically independent, so e.g. transition
// sampling and alert sampling never share draws, and rollout (step,
// candidate, rollout-index) grids are reproducible under any scheduling.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = base;
    for (std::uint64_t x : path) {
        SplitMix64 mixer(s ^ (x + UINT64_C(0x9E3779B97F4A7C15)));
        s = mixer.next();
    }
    return s;
}

// Fixed purpose tags so independently seeded subsystems can never collide
// on a derivation path.
namespace seed_purpose {
inline constexpr std::uint64_t kEnvTransition = 0x01;
inline constexpr std::uint64_t kEnvAlerts     = 0x02;
inline constexpr std::uint64_t kPropose       = 0x03;
inline constexpr std::uint64_t kRollout       = 0x04;
inline constexpr std::uint64_t kExecuteSim    = 0x05;
inline constexpr std::uint64_t kCalibrate     = 0x06;
inline constexpr std::uint64_t kScreening     = 0x07;
inline constexpr std::uint64_t kStateGen      = 0x08;
inline constexpr std::uint64_t kActionGen     = 0x09;
} // namespace seed_purpose

} // namespace irplan
