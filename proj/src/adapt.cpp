#include "adaptfir/adapt.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "adaptfir/errors.hpp"

namespace adaptfir {

namespace {

constexpr double kWeightCeiling = 1e12;

void require_config(const LmsConfig& config) {
  if (!(config.mu > 0.0) || !std::isfinite(config.mu)) {
    throw std::invalid_argument("step size mu must be positive and finite");
  }
  if (config.taps == 0) throw std::invalid_argument("tap count must be at least 1");
}

bool any_over_ceiling(const std::vector<double>& w) {
  return std::any_of(w.begin(), w.end(),
                     [](double v) { return std::abs(v) > kWeightCeiling; });
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 Cooley-Tukey; sign -1 forward, +1 inverse (unscaled).
void fft_pow2(std::vector<std::complex<double>>& a, double sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const auto w = std::polar(1.0, base * static_cast<double>(j));
        const auto u = a[start + j];
        const auto v = a[start + j + len / 2] * w;
        a[start + j] = u + v;
        a[start + j + len / 2] = u - v;
      }
    }
  }
}

// O(L^2) fallback; the k*n product is reduced mod L before the angle is
// formed so large indices do not lose precision.
ComplexSpectrum direct_transform(const std::vector<std::complex<double>>& block,
                                 double sign) {
  const std::size_t n = block.size();
  ComplexSpectrum bins(n);
  const double base = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += block[i] * std::polar(1.0, base * static_cast<double>((k * i) % n));
    }
    bins[k] = acc;
  }
  return bins;
}

ComplexSpectrum transform(std::vector<std::complex<double>> block, double sign) {
  if (block.empty()) throw std::invalid_argument("transform block must be non-empty");
  if (is_power_of_two(block.size())) {
    fft_pow2(block, sign);
    return block;
  }
  return direct_transform(block, sign);
}

}  // namespace

LmsStepResult lms_step(const LmsState& state, const std::vector<double>& regressor,
                       double desired, const LmsConfig& config) {
  require_config(config);
  if (state.w.size() != config.taps) {
    throw std::invalid_argument("state weight vector does not match configured taps");
  }
  if (regressor.size() != config.taps) {
    throw std::invalid_argument("regressor does not match configured taps");
  }

  LmsStepResult result;
  result.state.w.resize(config.taps);
  detail::lms_kernel(state.w, regressor, desired, config.mu, result.state.w,
                     result.output, result.error);
  result.state.n = state.n + 1;
  result.state.diverged = state.diverged || any_over_ceiling(result.state.w);
  return result;
}

RunTrace lms_run(const Sequence& x, const Sequence& d, const LmsConfig& config,
                 const std::vector<double>& w0) {
  require_config(config);
  if (x.size() != d.size()) throw std::invalid_argument("signals must share length");
  if (x.empty()) throw std::invalid_argument("signals must be non-empty");
  if (w0.size() != config.taps) {
    throw std::invalid_argument("initial weights do not match configured taps");
  }

  RunTrace trace;
  trace.output.reserve(x.size());
  trace.error.reserve(x.size());
  trace.squared_error.reserve(x.size());
  trace.weight_history.reserve(x.size() + 1);

  std::vector<double> w = w0;
  std::vector<double> w_next(config.taps);
  trace.weight_history.push_back(w);

  for (std::size_t n = 0; n < x.size(); ++n) {
    const auto xv = tap_vector(x, n, config.taps);
    double y = 0.0;
    double e = 0.0;
    detail::lms_kernel(w, xv, d[n], config.mu, w_next, y, e);
    if (!trace.diverged) {
      w = w_next;
      if (any_over_ceiling(w)) trace.diverged = true;
    }
    trace.output.push_back(y);
    trace.error.push_back(e);
    trace.squared_error.push_back(e * e);
    trace.weight_history.push_back(w);
  }
  return trace;
}

double stability_bound(const Sequence& x, std::size_t taps) {
  if (taps == 0) throw std::invalid_argument("tap count must be at least 1");
  if (x.size() < taps) throw std::invalid_argument("signal shorter than tap count");

  double sum = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const auto xv = tap_vector(x, n, taps);
    for (double v : xv) sum += v * v;
  }
  const double mean_energy = sum / static_cast<double>(x.size());
  if (mean_energy == 0.0) {
    throw std::domain_error("stability bound undefined for an all-zero signal");
  }
  return 2.0 / mean_energy;
}

ComplexSpectrum dft(const std::vector<double>& block) {
  std::vector<std::complex<double>> c(block.begin(), block.end());
  return transform(std::move(c), -1.0);
}

ComplexSpectrum dft(const std::vector<std::complex<double>>& block) {
  return transform(block, -1.0);
}

std::vector<std::complex<double>> idft(const ComplexSpectrum& spectrum) {
  auto out = transform(spectrum, +1.0);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out) v *= scale;
  return out;
}

RunTrace tdlms_run(const Sequence& x, const Sequence& d, std::size_t block_length,
                   double mu) {
  if (block_length == 0) throw std::invalid_argument("block length must be at least 1");
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("step size mu must be positive and finite");
  }
  if (x.size() != d.size()) throw std::invalid_argument("signals must share length");
  const std::size_t nblocks = x.size() / block_length;
  if (nblocks == 0) throw std::invalid_argument("signal shorter than one block");

  const std::size_t kept = nblocks * block_length;
  RunTrace trace;
  trace.block_length = block_length;
  trace.dropped_samples = x.size() - kept;
  trace.output.reserve(kept);
  trace.error.reserve(kept);
  trace.squared_error.reserve(kept);
  trace.weight_history.reserve(nblocks + 1);

  std::vector<std::complex<double>> weights(block_length, 0.0);
  const auto magnitudes = [&] {
    std::vector<double> m(block_length);
    for (std::size_t k = 0; k < block_length; ++k) m[k] = std::abs(weights[k]);
    return m;
  };
  trace.weight_history.push_back(magnitudes());

  for (std::size_t i = 0; i < nblocks; ++i) {
    const std::size_t base = i * block_length;
    const std::vector<double> xb(x.begin() + static_cast<std::ptrdiff_t>(base),
                                 x.begin() + static_cast<std::ptrdiff_t>(base + block_length));
    const std::vector<double> db(d.begin() + static_cast<std::ptrdiff_t>(base),
                                 d.begin() + static_cast<std::ptrdiff_t>(base + block_length));
    const auto u = dft(xb);
    const auto dd = dft(db);

    ComplexSpectrum yk(block_length);
    ComplexSpectrum ek(block_length);
    for (std::size_t k = 0; k < block_length; ++k) {
      yk[k] = weights[k] * u[k];
      ek[k] = dd[k] - yk[k];
    }

    // Real input blocks keep every spectrum conjugate-symmetric, so the
    // inverse transform must come back (numerically) real.
    const auto y_time = idft(yk);
    double peak = 0.0;
    double residue = 0.0;
    for (const auto& v : y_time) {
      peak = std::max(peak, std::abs(v));
      residue = std::max(residue, std::abs(v.imag()));
    }
    if (peak > 0.0 && residue > 1e-6 * peak) {
      throw NumericError("block output has a non-real inverse transform", residue / peak);
    }

    for (std::size_t n = 0; n < block_length; ++n) {
      const double y = y_time[n].real();
      const double e = d[base + n] - y;
      trace.output.push_back(y);
      trace.error.push_back(e);
      trace.squared_error.push_back(e * e);
    }

    if (!trace.diverged) {
      for (std::size_t k = 0; k < block_length; ++k) {
        weights[k] += mu * ek[k] * std::conj(u[k]);
      }
      for (const auto& wv : weights) {
        if (std::abs(wv) > kWeightCeiling) {
          trace.diverged = true;
          break;
        }
      }
    }
    trace.weight_history.push_back(magnitudes());
  }

  trace.final_bin_weights = std::move(weights);
  return trace;
}

}  // namespace adaptfir
