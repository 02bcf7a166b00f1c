#pragma once

#include <cstddef>
#include <vector>

#include "adaptfir/linalg.hpp"
#include "adaptfir/signal.hpp"

namespace adaptfir {

// Sample estimates of the quadratic error-surface parameters: the input
// autocorrelation matrix, the input/desired cross-correlation vector, and
// the desired-signal power.
struct CorrelationModel {
  Matrix autocorrelation;
  std::vector<double> cross_correlation;
  double desired_variance = 0.0;

  std::size_t taps() const { return cross_correlation.size(); }
};

// Deterministic iterate history, one cost value per weight vector.
struct Trajectory {
  std::vector<std::vector<double>> weights;
  std::vector<double> costs;
  bool diverged = false;
};

// Iterate norms past this ceiling flag a run as diverged.
inline constexpr double kDivergenceCeiling = 1e12;

// Biased sample averages over all length(x) instants with zero pre-history.
CorrelationModel estimate_correlation(const Sequence& x, const Sequence& d, std::size_t taps);

// J(w) = sigma_d^2 - 2 w'p + w'Rw
double cost(const CorrelationModel& model, const std::vector<double>& w);

// grad J(w) = -2p + 2Rw
std::vector<double> gradient(const CorrelationModel& model, const std::vector<double>& w);

// 2R (the cost is quadratic, so the Hessian is constant).
Matrix hessian(const CorrelationModel& model);

// Direct solve of R w = p; never forms an explicit inverse.
std::vector<double> wiener_solve(const CorrelationModel& model);

// w - H^{-1} grad J(w), computed by solving H s = grad J. One step lands on
// the Wiener solution for this quadratic cost.
std::vector<double> newton_step(const CorrelationModel& model, const std::vector<double>& w);

// Steepest descent: w(n+1) = w(n) + mu (p - R w(n)). The returned trajectory
// holds iterations+1 weight vectors unless a divergence truncates it.
Trajectory sda_run(const CorrelationModel& model, const std::vector<double>& w0,
                   double mu, std::size_t iterations);

// Largest eigenvalue of a symmetric PSD matrix by power iteration from the
// all-ones vector (relative tolerance 1e-9, cap 10000 iterations).
double max_eigenvalue(const Matrix& r);

}  // namespace adaptfir
