#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace adaptfir {

// A finite real-valued sample stream.
using Sequence = std::vector<double>;

// Coefficients of a FIR plant.
struct FirSystem {
  std::vector<double> h;

  explicit FirSystem(std::vector<double> coefficients);
  std::size_t order() const { return h.size(); }
};

// n standard-normal samples from the seeded generator in rng.hpp. Identical
// (n, seed) pairs yield bit-identical sequences.
Sequence generate_white_gaussian(std::size_t n, std::uint64_t seed);

// Linear convolution of x with the plant coefficients, truncated to
// x.size() samples: y(n) = sum_k h(k) x(n-k) with zero pre-history.
Sequence fir_filter(const FirSystem& system, const Sequence& x);

// The taps most recent samples ending at index n: [x(n), x(n-1), ...],
// zero-filled for indices before the start of the signal.
std::vector<double> tap_vector(const Sequence& x, std::size_t n, std::size_t taps);

// x plus independent zero-mean Gaussian noise of the given variance.
Sequence add_noise(const Sequence& x, double variance, std::uint64_t seed);

}  // namespace adaptfir
