#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "adaptfir/adapt.hpp"
#include "adaptfir/metrics.hpp"
#include "adaptfir/signal.hpp"
#include "oracles.hpp"

using adaptfir::FirSystem;
using adaptfir::RunTrace;
using adaptfir::Sequence;

namespace {

RunTrace trace_with_errors(std::vector<double> e) {
  RunTrace t;
  t.error = std::move(e);
  t.squared_error.resize(t.error.size());
  for (std::size_t i = 0; i < t.error.size(); ++i) {
    t.squared_error[i] = t.error[i] * t.error[i];
  }
  t.output.assign(t.error.size(), 0.0);
  t.weight_history.assign(t.error.size() + 1, {0.0});
  return t;
}

}  // namespace

TEST_CASE("mse hand values") {
  CHECK(adaptfir::mse({0.0, 0.0, 0.0}) == 0.0);
  CHECK(adaptfir::mse({1.0, -1.0, 2.0}) == 2.0);
  CHECK(adaptfir::mse(Sequence(17, 3.0)) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK_THROWS_AS(adaptfir::mse({}), std::invalid_argument);
}

TEST_CASE("mse is permutation invariant and scales quadratically") {
  Sequence e{0.5, -1.5, 2.5, 0.25};
  Sequence perm{2.5, 0.25, 0.5, -1.5};
  CHECK(adaptfir::mse(e) == doctest::Approx(adaptfir::mse(perm)).epsilon(1e-15));
  Sequence scaled(e.size());
  const double c = -3.0;
  for (std::size_t i = 0; i < e.size(); ++i) scaled[i] = c * e[i];
  CHECK(std::abs(adaptfir::mse(scaled) - c * c * adaptfir::mse(e)) <=
        1e-12 * c * c * adaptfir::mse(e));
}

TEST_CASE("steady_state_mse averages the tail window") {
  const auto t = trace_with_errors({3.0, 3.0, 1.0, 2.0, 4.0});
  CHECK(adaptfir::steady_state_mse(t, 3) == 7.0);
  CHECK(adaptfir::steady_state_mse(t, 5) == adaptfir::mse(t.error));
  CHECK_THROWS_AS(adaptfir::steady_state_mse(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(adaptfir::steady_state_mse(t, 6), std::invalid_argument);
}

TEST_CASE("a converged noiseless run has a tiny steady-state error") {
  const auto x = adaptfir::generate_white_gaussian(1000, 1);
  const auto d = adaptfir::fir_filter(FirSystem({1.0, 2.0}), x);
  const auto trace = adaptfir::lms_run(x, d, adaptfir::LmsConfig{0.05, 2}, {0.0, 0.0});
  CHECK(adaptfir::steady_state_mse(trace, 100) < 1e-6);
}

TEST_CASE("misadjustment evaluates the excess-error ratio") {
  CHECK(adaptfir::misadjustment(0.5, 0.5) == 0.0);
  CHECK(std::abs(adaptfir::misadjustment(0.6, 0.5) - 0.2) <= 1e-12);
  for (double j : {1e-6, 0.1, 2.0, 50.0}) {
    CHECK(adaptfir::misadjustment(j, j) == 0.0);
  }
}

TEST_CASE("misadjustment guards the singular noiseless case") {
  CHECK_THROWS_AS(adaptfir::misadjustment(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(adaptfir::misadjustment(1.0, 1e-13), std::domain_error);
  CHECK_THROWS_AS(adaptfir::misadjustment(-0.1, 0.5), std::invalid_argument);
  CHECK_NOTHROW(adaptfir::misadjustment(1.0, 1e-13, 1e-14));
}

TEST_CASE("convergence_iteration reports zero for a history that starts converged") {
  const FirSystem h({1.0, 2.0});
  const std::vector<std::vector<double>> history(5, {1.0, 2.0});
  const auto report = adaptfir::convergence_iteration(history, h, 0.01);
  CHECK(report.per_coefficient_iteration[0] == 0);
  CHECK(report.per_coefficient_iteration[1] == 0);
  CHECK(report.combined_iteration == 0);
}

TEST_CASE("convergence_iteration requires sustained entry, not first touch") {
  const FirSystem h({1.0});
  // inside at 5..6, outside again at 7..8, inside for good from 9
  std::vector<std::vector<double>> history;
  for (int n = 0; n < 12; ++n) history.push_back({0.5});
  history[5][0] = 1.0;
  history[6][0] = 0.995;
  for (int n = 9; n < 12; ++n) history[static_cast<std::size_t>(n)][0] = 1.002;
  const auto report = adaptfir::convergence_iteration(history, h, 0.01);
  CHECK(report.per_coefficient_iteration[0] == 9);
  CHECK(report.combined_iteration == 9);
}

TEST_CASE("convergence_iteration reports none when the band is never held") {
  const FirSystem h({1.0, 2.0});
  std::vector<std::vector<double>> history(10, {1.0, 0.0});  // second tap never near 2
  const auto report = adaptfir::convergence_iteration(history, h, 0.01);
  CHECK(report.per_coefficient_iteration[0].has_value());
  CHECK_FALSE(report.per_coefficient_iteration[1].has_value());
  CHECK_FALSE(report.combined_iteration.has_value());
}

TEST_CASE("combined iteration is the max across coefficients") {
  const FirSystem h({1.0, 2.0});
  std::vector<std::vector<double>> history(10, {1.0, 2.0});
  history[3][0] = 0.0;  // first tap re-enters at 4
  history[6][1] = 0.0;  // second tap re-enters at 7
  const auto report = adaptfir::convergence_iteration(history, h, 0.01);
  CHECK(report.per_coefficient_iteration[0] == 4);
  CHECK(report.per_coefficient_iteration[1] == 7);
  CHECK(report.combined_iteration == 7);
}

TEST_CASE("a looser tolerance never reports a later iteration") {
  oracles::TestRand rand(61);
  const FirSystem h({1.0, 2.0});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<double>> history;
    std::vector<double> w{0.0, 0.0};
    for (int n = 0; n < 60; ++n) {
      w[0] += (1.0 - w[0]) * 0.1 + rand.uniform() * 0.05;
      w[1] += (2.0 - w[1]) * 0.1 + rand.uniform() * 0.05;
      history.push_back(w);
    }
    const auto tight = adaptfir::convergence_iteration(history, h, 0.02);
    const auto loose = adaptfir::convergence_iteration(history, h, 0.2);
    for (std::size_t i = 0; i < 2; ++i) {
      if (tight.per_coefficient_iteration[i].has_value()) {
        REQUIRE(loose.per_coefficient_iteration[i].has_value());
        CHECK(*loose.per_coefficient_iteration[i] <= *tight.per_coefficient_iteration[i]);
      }
    }
  }
}

TEST_CASE("convergence_iteration rejects invalid input") {
  const FirSystem h({1.0, 0.0});
  const std::vector<std::vector<double>> history(3, {1.0, 0.0});
  CHECK_THROWS_AS(adaptfir::convergence_iteration(history, h, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(adaptfir::convergence_iteration({}, FirSystem({1.0}), 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      adaptfir::convergence_iteration(history, FirSystem({1.0, 2.0}), 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      adaptfir::convergence_iteration({{1.0}}, FirSystem({1.0, 2.0}), 0.01),
      std::invalid_argument);
}

TEST_CASE("combined convergence at mu 0.01 falls in the expected band") {
  std::vector<double> iters;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto x = adaptfir::generate_white_gaussian(1000, seed);
    const auto d = adaptfir::fir_filter(FirSystem({1.0, 2.0}), x);
    const auto trace = adaptfir::lms_run(x, d, adaptfir::LmsConfig{0.01, 2}, {0.0, 0.0});
    const auto report =
        adaptfir::convergence_iteration(trace.weight_history, FirSystem({1.0, 2.0}), 0.01);
    REQUIRE(report.combined_iteration.has_value());
    iters.push_back(static_cast<double>(*report.combined_iteration));
  }
  std::sort(iters.begin(), iters.end());
  const double median = 0.5 * (iters[9] + iters[10]);
  CHECK(median >= 250.0);
  CHECK(median <= 750.0);
}

TEST_CASE("accuracy reproduces both reference anchor values to 4 decimals") {
  const FirSystem h({1.0, 2.0});
  CHECK(std::abs(adaptfir::accuracy({0.7027, 1.3269}, h) - 68.3075) < 5e-5);
  CHECK(std::abs(adaptfir::accuracy({0.9854, 1.9648}, h) - 98.39) < 5e-5);
}

TEST_CASE("accuracy is 100 exactly when the weights match the plant") {
  const FirSystem h({1.0, 2.0});
  CHECK(adaptfir::accuracy({1.0, 2.0}, h) == 100.0);
  CHECK(adaptfir::accuracy({1.0, 2.0001}, h) < 100.0);
}

TEST_CASE("accuracy is symmetric under simultaneous permutation") {
  const double a = adaptfir::accuracy({0.9, 2.2}, FirSystem({1.0, 2.0}));
  const double b = adaptfir::accuracy({2.2, 0.9}, FirSystem({2.0, 1.0}));
  CHECK(a == doctest::Approx(b).epsilon(1e-15));
}

TEST_CASE("accuracy validates its input") {
  CHECK_THROWS_AS(adaptfir::accuracy({1.0}, FirSystem({1.0, 2.0})), std::invalid_argument);
  CHECK_THROWS_AS(adaptfir::accuracy({1.0, 2.0}, FirSystem({1.0, 0.0})),
                  std::invalid_argument);
}
