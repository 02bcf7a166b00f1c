#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "adaptfir/signal.hpp"

namespace adaptfir {

struct LmsConfig {
  double mu = 0.01;
  std::size_t taps = 2;
};

struct LmsState {
  std::vector<double> w;
  std::size_t n = 0;
  bool diverged = false;
};

struct LmsStepResult {
  LmsState state;
  double output = 0.0;
  double error = 0.0;
};

// Full per-iteration history of an adaptive run.
struct RunTrace {
  Sequence output;         // y(n)
  Sequence error;          // e(n) = d(n) - y(n)
  Sequence squared_error;  // e(n)^2
  // weight_history[n] is the weight vector before update n; the last entry
  // is the final weight. Block runs store per-bin magnitudes here.
  std::vector<std::vector<double>> weight_history;
  bool diverged = false;
  std::size_t block_length = 1;     // samples per weight update
  std::size_t dropped_samples = 0;  // trailing samples not filling a block
  // Complex per-bin weights after the last block; empty for sample-by-sample
  // runs.
  std::vector<std::complex<double>> final_bin_weights;
};

using ComplexSpectrum = std::vector<std::complex<double>>;

namespace detail {

// One weight update: y = w.x (N multiplies, N-1 adds), e = d - y (1 add),
// w' = w + (mu e) x (N+1 multiplies, N adds). 2N+1 multiplies and 2N adds
// of signal data in total; tests instrument this with a counting scalar.
template <typename T>
void lms_kernel(const std::vector<T>& w, const std::vector<T>& regressor,
                const T& desired, const T& mu, std::vector<T>& w_next,
                T& output, T& error) {
  T y = w[0] * regressor[0];
  for (std::size_t i = 1; i < w.size(); ++i) y = y + w[i] * regressor[i];
  T e = desired - y;
  const T scale = mu * e;
  w_next.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) w_next[i] = w[i] + scale * regressor[i];
  output = y;
  error = e;
}

}  // namespace detail

// One update of w(n+1) = w(n) + mu e(n) x(n). The new state is flagged
// diverged when any weight magnitude passes 1e12.
LmsStepResult lms_step(const LmsState& state, const std::vector<double>& regressor,
                       double desired, const LmsConfig& config);

// Applies lms_step across the whole signal with zero pre-history tap
// vectors. Once the divergence ceiling is hit the weights freeze and the
// rest of the trace is recorded with them unchanged.
RunTrace lms_run(const Sequence& x, const Sequence& d, const LmsConfig& config,
                 const std::vector<double>& w0);

// 2 / (time average of |tap_vector(x, n, taps)|^2): the practical step-size
// ceiling when the eigenvalues of the correlation matrix are unknown.
double stability_bound(const Sequence& x, std::size_t taps);

// bins(k) = sum_n block(n) exp(-j 2 pi k n / L). Radix-2 iterative FFT when
// L is a power of two, direct summation otherwise.
ComplexSpectrum dft(const std::vector<double>& block);
ComplexSpectrum dft(const std::vector<std::complex<double>>& block);

// (1/L) sum_k bins(k) exp(+j 2 pi k n / L); inverse of dft.
std::vector<std::complex<double>> idft(const ComplexSpectrum& spectrum);

// Block transform-domain LMS: per block i, Y_i(k) = W_i(k) U_i(k),
// E_i(k) = D_i(k) - Y_i(k), W_{i+1}(k) = W_i(k) + mu E_i(k) conj(U_i(k)).
// One weight update per block; trailing samples short of a block are
// dropped and counted in the trace. Per-bin multiplication models circular
// convolution of each block.
RunTrace tdlms_run(const Sequence& x, const Sequence& d, std::size_t block_length,
                   double mu);

}  // namespace adaptfir
