#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

namespace nfcran {

// Scenario generation must reproduce bit-exactly from a seed on every
// platform, so the generator is pinned here instead of relying on
// std::uniform_real_distribution (whose output is implementation-defined).
// The algorithm is xoshiro256** 1.0 (Blackman & Vigna, public domain),
// seeded through splitmix64. Not for cryptography.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

/// Uniform double in [0, 1), built from the top 53 bits of one output.
inline double uniform_unit(Xoshiro256StarStar& rng) {
  return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

/// Uniform draw from the closed interval [low, high]. The top end is clamped
/// so rounding in low + u*(high-low) can never escape the interval.
inline double uniform_in(Xoshiro256StarStar& rng, double low, double high) {
  const double value = low + uniform_unit(rng) * (high - low);
  return value < high ? value : high;
}

/// Log-uniform draw from [low, high]; requires low > 0.
inline double log_uniform_in(Xoshiro256StarStar& rng, double low, double high) {
  const double value = std::exp(uniform_in(rng, std::log(low), std::log(high)));
  return std::clamp(value, low, high);
}

}  // namespace nfcran
