#include "adaptfir/estimation.hpp"

#include <cmath>
#include <stdexcept>

#include "adaptfir/errors.hpp"

namespace adaptfir {

namespace {

void require_taps(const CorrelationModel& model, const std::vector<double>& w) {
  if (w.size() != model.taps()) {
    throw std::invalid_argument("weight vector does not match model tap count");
  }
}

}  // namespace

CorrelationModel estimate_correlation(const Sequence& x, const Sequence& d, std::size_t taps) {
  if (taps == 0) throw std::invalid_argument("tap count must be at least 1");
  if (x.size() != d.size()) throw std::invalid_argument("signals must share length");
  if (x.size() < taps) throw std::invalid_argument("signal shorter than tap count");

  const std::size_t m = x.size();
  Matrix acf(taps, taps, 0.0);
  std::vector<double> ccf(taps, 0.0);
  double power = 0.0;

  for (std::size_t n = 0; n < m; ++n) {
    const auto xv = tap_vector(x, n, taps);
    for (std::size_t i = 0; i < taps; ++i) {
      ccf[i] += d[n] * xv[i];
      for (std::size_t j = 0; j < taps; ++j) acf(i, j) += xv[i] * xv[j];
    }
    power += d[n] * d[n];
  }

  const double inv_m = 1.0 / static_cast<double>(m);
  for (auto& v : acf.data) v *= inv_m;
  for (auto& v : ccf) v *= inv_m;

  // Symmetrize exactly; accumulation order can leave off-diagonal pairs a
  // few ulps apart.
  for (std::size_t i = 0; i < taps; ++i) {
    for (std::size_t j = i + 1; j < taps; ++j) {
      const double avg = 0.5 * (acf(i, j) + acf(j, i));
      acf(i, j) = avg;
      acf(j, i) = avg;
    }
  }

  return CorrelationModel{std::move(acf), std::move(ccf), power * inv_m};
}

double cost(const CorrelationModel& model, const std::vector<double>& w) {
  require_taps(model, w);
  const auto rw = mat_vec(model.autocorrelation, w);
  return model.desired_variance - 2.0 * dot(w, model.cross_correlation) + dot(w, rw);
}

std::vector<double> gradient(const CorrelationModel& model, const std::vector<double>& w) {
  require_taps(model, w);
  auto g = mat_vec(model.autocorrelation, w);
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = 2.0 * g[i] - 2.0 * model.cross_correlation[i];
  }
  return g;
}

Matrix hessian(const CorrelationModel& model) {
  Matrix h = model.autocorrelation;
  for (auto& v : h.data) v *= 2.0;
  return h;
}

std::vector<double> wiener_solve(const CorrelationModel& model) {
  return solve_linear(model.autocorrelation, model.cross_correlation);
}

std::vector<double> newton_step(const CorrelationModel& model, const std::vector<double>& w) {
  require_taps(model, w);
  const auto step = solve_linear(hessian(model), gradient(model, w));
  std::vector<double> next(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) next[i] = w[i] - step[i];
  return next;
}

Trajectory sda_run(const CorrelationModel& model, const std::vector<double>& w0,
                   double mu, std::size_t iterations) {
  require_taps(model, w0);
  if (!(mu > 0.0) || !std::isfinite(mu)) throw std::invalid_argument("mu must be positive");
  if (iterations == 0) throw std::invalid_argument("iterations must be at least 1");

  Trajectory traj;
  traj.weights.reserve(iterations + 1);
  traj.costs.reserve(iterations + 1);
  std::vector<double> w = w0;
  traj.weights.push_back(w);
  traj.costs.push_back(cost(model, w));

  for (std::size_t it = 0; it < iterations; ++it) {
    const auto rw = mat_vec(model.autocorrelation, w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] += mu * (model.cross_correlation[i] - rw[i]);
    }
    traj.weights.push_back(w);
    traj.costs.push_back(cost(model, w));
    if (norm2(w) > kDivergenceCeiling) {
      traj.diverged = true;
      break;
    }
  }
  return traj;
}

double max_eigenvalue(const Matrix& r) {
  if (r.rows == 0 || r.rows != r.cols) {
    throw std::invalid_argument("max_eigenvalue: matrix must be square and non-empty");
  }
  if (r.rows == 1) return r(0, 0);

  double magnitude = 0.0;
  for (double v : r.data) magnitude = std::max(magnitude, std::abs(v));
  if (magnitude == 0.0) return 0.0;

  constexpr std::size_t kMaxIterations = 10000;
  constexpr double kRelTol = 1e-9;

  std::vector<double> v(r.rows, 1.0 / std::sqrt(static_cast<double>(r.rows)));
  double lambda = 0.0;
  bool have_estimate = false;

  for (std::size_t it = 0; it < kMaxIterations; ++it) {
    const auto rv = mat_vec(r, v);
    const double estimate = dot(v, rv);  // Rayleigh quotient, v is unit norm
    if (have_estimate &&
        std::abs(estimate - lambda) <= kRelTol * std::max(std::abs(estimate), 1e-300)) {
      return estimate;
    }
    lambda = estimate;
    have_estimate = true;
    const double nrm = norm2(rv);
    if (nrm == 0.0) {
      throw NumericError("power iteration broke down: iterate entered the null space", lambda);
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = rv[i] / nrm;
  }
  throw NumericError("power iteration did not converge within 10000 iterations", lambda);
}

}  // namespace adaptfir
