#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adaptfir/adapt.hpp"
#include "adaptfir/signal.hpp"

namespace adaptfir {

struct ConvergenceReport {
  std::vector<std::optional<std::size_t>> per_coefficient_iteration;
  std::optional<std::size_t> combined_iteration;
  double tolerance = 0.01;
};

// (1/M) sum e(n)^2
double mse(const Sequence& e);

// Mean squared error over the final `window` iterations of a run.
double steady_state_mse(const RunTrace& trace, std::size_t window);

// (j_ss - j_min) / j_min. Throws when j_min <= epsilon, where the ratio is
// undefined (a noiseless rightly-specified run has j_min = 0).
double misadjustment(double j_ss, double j_min, double epsilon = 1e-12);

// For each coefficient, the first iteration from which the weight stays
// inside the relative tolerance band around the plant coefficient for the
// rest of the history (sustained entry, not first touch). Combined is the
// max across coefficients when all converged.
ConvergenceReport convergence_iteration(const std::vector<std::vector<double>>& weight_history,
                                        const FirSystem& h, double tol);

// 100 (1/N) sum_i (1 - |w_i - h_i| / |h_i|): mean per-coefficient relative
// accuracy in percent.
double accuracy(const std::vector<double>& w_final, const FirSystem& h);

}  // namespace adaptfir
