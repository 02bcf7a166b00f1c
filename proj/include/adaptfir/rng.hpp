#pragma once

// Seeded, reproducible random number generation. The uniform stream is
// xoshiro256++ (Blackman & Vigna) with its state expanded from the seed by
// splitmix64; Gaussian samples come from the Box-Muller transform. The
// generator is pinned here so that a given seed yields the same sample
// stream on every build that shares IEEE-754 double semantics.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace adaptfir {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Xoshiro256PlusPlus {
 public:
  explicit Xoshiro256PlusPlus(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in (0, 1]; never zero, so log() of it is finite.
  double next_unit() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

// Standard normal samples. Each uniform pair yields two normals; the second
// is cached and returned on the following call.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = rng_.next_unit();
    const double u2 = rng_.next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  Xoshiro256PlusPlus rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace adaptfir
