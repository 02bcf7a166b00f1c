#include "adaptfir/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace adaptfir {

double mse(const Sequence& e) {
  if (e.empty()) throw std::invalid_argument("mse of an empty sequence is undefined");
  double acc = 0.0;
  for (double v : e) acc += v * v;
  return acc / static_cast<double>(e.size());
}

double steady_state_mse(const RunTrace& trace, std::size_t window) {
  if (window == 0) throw std::invalid_argument("window must be at least 1");
  if (window > trace.squared_error.size()) {
    throw std::invalid_argument("window exceeds run length");
  }
  double acc = 0.0;
  for (std::size_t n = trace.squared_error.size() - window; n < trace.squared_error.size(); ++n) {
    acc += trace.squared_error[n];
  }
  return acc / static_cast<double>(window);
}

double misadjustment(double j_ss, double j_min, double epsilon) {
  if (j_ss < 0.0) throw std::invalid_argument("steady-state MSE must be non-negative");
  if (!(j_min > epsilon)) {
    throw std::domain_error("misadjustment undefined: minimum MSE is at or below epsilon");
  }
  return (j_ss - j_min) / j_min;
}

ConvergenceReport convergence_iteration(const std::vector<std::vector<double>>& weight_history,
                                        const FirSystem& h, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (weight_history.empty()) throw std::invalid_argument("weight history is empty");
  const std::size_t taps = h.h.size();
  for (const auto& w : weight_history) {
    if (w.size() != taps) {
      throw std::invalid_argument("weight history width does not match plant order");
    }
  }
  for (double hi : h.h) {
    if (hi == 0.0) {
      throw std::invalid_argument("relative tolerance undefined for a zero plant coefficient");
    }
  }

  ConvergenceReport report;
  report.tolerance = tol;
  report.per_coefficient_iteration.assign(taps, std::nullopt);

  // Scan backwards: the sustained-entry iteration is one past the last
  // history entry outside the band.
  for (std::size_t i = 0; i < taps; ++i) {
    const double band = tol * std::abs(h.h[i]);
    std::optional<std::size_t> entry;
    if (std::abs(weight_history.back()[i] - h.h[i]) <= band) {
      entry = 0;
      for (std::size_t m = weight_history.size(); m-- > 0;) {
        if (std::abs(weight_history[m][i] - h.h[i]) > band) {
          entry = m + 1;
          break;
        }
      }
    }
    report.per_coefficient_iteration[i] = entry;
  }

  bool all = true;
  std::size_t combined = 0;
  for (const auto& it : report.per_coefficient_iteration) {
    if (!it) {
      all = false;
      break;
    }
    combined = std::max(combined, *it);
  }
  if (all) report.combined_iteration = combined;
  return report;
}

double accuracy(const std::vector<double>& w_final, const FirSystem& h) {
  if (w_final.size() != h.h.size()) {
    throw std::invalid_argument("weight vector does not match plant order");
  }
  for (double hi : h.h) {
    if (hi == 0.0) {
      throw std::invalid_argument("accuracy undefined for a zero plant coefficient");
    }
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < w_final.size(); ++i) {
    acc += 1.0 - std::abs(w_final[i] - h.h[i]) / std::abs(h.h[i]);
  }
  return 100.0 * acc / static_cast<double>(w_final.size());
}

}  // namespace adaptfir
