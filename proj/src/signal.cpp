#include "adaptfir/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adaptfir/rng.hpp"

namespace adaptfir {

FirSystem::FirSystem(std::vector<double> coefficients) : h(std::move(coefficients)) {
  if (h.empty()) throw std::invalid_argument("plant needs at least one coefficient");
  for (double c : h) {
    if (!std::isfinite(c)) throw std::invalid_argument("plant coefficients must be finite");
  }
}

Sequence generate_white_gaussian(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample count must be at least 1");
  GaussianSampler gauss(seed);
  Sequence out(n);
  for (auto& s : out) s = gauss.next();
  return out;
}

Sequence fir_filter(const FirSystem& system, const Sequence& x) {
  if (x.empty()) throw std::invalid_argument("input signal must be non-empty");
  Sequence y(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const std::size_t kmax = std::min(system.order() - 1, n);
    double acc = 0.0;
    for (std::size_t k = 0; k <= kmax; ++k) acc += system.h[k] * x[n - k];
    y[n] = acc;
  }
  return y;
}

std::vector<double> tap_vector(const Sequence& x, std::size_t n, std::size_t taps) {
  if (taps == 0) throw std::invalid_argument("tap count must be at least 1");
  if (n >= x.size()) throw std::invalid_argument("sample index out of range");
  std::vector<double> v(taps, 0.0);
  for (std::size_t i = 0; i < taps && i <= n; ++i) v[i] = x[n - i];
  return v;
}

Sequence add_noise(const Sequence& x, double variance, std::uint64_t seed) {
  if (!(variance >= 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("noise variance must be non-negative and finite");
  }
  if (variance == 0.0) return x;
  GaussianSampler gauss(seed);
  const double sigma = std::sqrt(variance);
  Sequence out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + sigma * gauss.next();
  return out;
}

}  // namespace adaptfir
