#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adaptfir/adapt.hpp"
#include "adaptfir/signal.hpp"

namespace adaptfir {

enum class Algorithm { kLms, kSda, kNewton, kTdlms };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

// The full step-size sweep: 0.001..0.009, 0.01..0.09, 0.1..0.9, 1.0.
std::vector<double> default_mu_sweep();

struct ExperimentSpec {
  FirSystem plant{std::vector<double>{1.0, 2.0}};
  std::size_t taps = 2;
  std::vector<double> mu_list = default_mu_sweep();
  std::size_t iterations = 1000;
  std::vector<std::uint64_t> seeds = {1};
  Algorithm algorithm = Algorithm::kLms;
  std::size_t block_length = 8;  // tdlms only
  double noise_variance = 0.0;
  double tolerance = 0.01;  // convergence band, relative
};

struct SummaryRow {
  double mu = 0.0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  double mse = 0.0;
  std::vector<double> final_weights;
  double final_squared_error = 0.0;
  std::vector<std::optional<std::size_t>> per_coefficient_convergence;
  std::optional<std::size_t> combined_convergence;
  std::optional<double> accuracy_percent;
  double elapsed_seconds = 0.0;
  bool diverged = false;
};

struct RunResult {
  SummaryRow row;
  RunTrace trace;
};

// One experiment: seeded white-noise input, desired signal from the plant
// (optionally noise-corrupted), the selected algorithm from zero initial
// weights. Only the adaptation loop is timed. A diverged run yields a
// flagged row rather than an error.
RunResult run_single(const ExperimentSpec& spec, double mu, std::uint64_t seed);

// Cartesian product of mu_list x seeds, each run independent, rows ordered
// by (mu, seed).
std::vector<SummaryRow> run_sweep(const ExperimentSpec& spec);

// Same sweep, handing each finished run (row plus full trace) to `sink` in
// row order before moving on.
std::vector<SummaryRow> run_sweep(
    const ExperimentSpec& spec,
    const std::function<void(const SummaryRow&, const RunTrace&)>& sink);

enum class SummaryFormat { kCsv, kJson };

std::string summary_csv_header(std::size_t taps);

void write_summary(const std::vector<SummaryRow>& rows, SummaryFormat format,
                   std::ostream& out);
void emit_summary(const std::vector<SummaryRow>& rows, SummaryFormat format,
                  const std::string& path);

// CSV columns n,y,e,squared_error,w_0..w_{N-1}, one row per iteration; the
// weight columns in row n hold the weights before update n.
void write_trace(const RunTrace& trace, std::ostream& out);
void emit_trace(const RunTrace& trace, const std::string& path);

}  // namespace adaptfir
