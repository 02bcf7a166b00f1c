#include "adaptfir/harness.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "adaptfir/errors.hpp"
#include "adaptfir/estimation.hpp"
#include "adaptfir/metrics.hpp"
#include "adaptfir/rng.hpp"

namespace adaptfir {

namespace {

std::string format_real(double v) {
  std::array<char, 64> buf;
  const auto [p, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), p);
}

void require_spec(const ExperimentSpec& spec) {
  if (spec.taps == 0) throw std::invalid_argument("taps must be at least 1");
  if (spec.iterations == 0) throw std::invalid_argument("iterations must be at least 1");
  if (spec.mu_list.empty()) throw std::invalid_argument("mu list must be non-empty");
  for (double mu : spec.mu_list) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
      throw std::invalid_argument("every mu must be positive and finite");
    }
  }
  if (spec.seeds.empty()) throw std::invalid_argument("seed list must be non-empty");
  if (!(spec.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (spec.noise_variance < 0.0 || !std::isfinite(spec.noise_variance)) {
    throw std::invalid_argument("noise variance must be non-negative and finite");
  }
  if (spec.algorithm == Algorithm::kTdlms && spec.block_length == 0) {
    throw std::invalid_argument("block length must be at least 1");
  }
}

// Weight trajectories from the deterministic algorithms are replayed against
// the signal so every trace carries the same y/e/squared-error record as a
// stochastic run: y(n) uses the weights in force before update n.
RunTrace trace_from_weights(std::vector<std::vector<double>> weights, bool diverged,
                            const Sequence& x, const Sequence& d) {
  RunTrace trace;
  trace.diverged = diverged;
  const std::size_t steps = weights.size() - 1;
  const std::size_t taps = weights.front().size();
  trace.output.reserve(steps);
  trace.error.reserve(steps);
  trace.squared_error.reserve(steps);
  for (std::size_t n = 0; n < steps && n < x.size(); ++n) {
    const auto xv = tap_vector(x, n, taps);
    double y = 0.0;
    for (std::size_t i = 0; i < taps; ++i) y += weights[n][i] * xv[i];
    const double e = d[n] - y;
    trace.output.push_back(y);
    trace.error.push_back(e);
    trace.squared_error.push_back(e * e);
  }
  trace.weight_history = std::move(weights);
  return trace;
}

std::string format_optional(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "lms") return Algorithm::kLms;
  if (name == "sda") return Algorithm::kSda;
  if (name == "newton") return Algorithm::kNewton;
  if (name == "tdlms") return Algorithm::kTdlms;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "': expected lms, sda, newton, or tdlms");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kLms: return "lms";
    case Algorithm::kSda: return "sda";
    case Algorithm::kNewton: return "newton";
    case Algorithm::kTdlms: return "tdlms";
  }
  throw std::invalid_argument("unknown algorithm value");
}

std::vector<double> default_mu_sweep() {
  std::vector<double> mus;
  for (int i = 1; i <= 9; ++i) mus.push_back(i * 0.001);
  for (int i = 1; i <= 9; ++i) mus.push_back(i * 0.01);
  for (int i = 1; i <= 9; ++i) mus.push_back(i * 0.1);
  mus.push_back(1.0);
  return mus;
}

RunResult run_single(const ExperimentSpec& spec, double mu, std::uint64_t seed) {
  require_spec(spec);
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("mu must be positive and finite");
  }

  const Sequence x = generate_white_gaussian(spec.iterations, seed);
  Sequence d = fir_filter(spec.plant, x);
  if (spec.noise_variance > 0.0) {
    std::uint64_t stream = seed;
    const std::uint64_t noise_seed = splitmix64_next(stream);
    d = add_noise(d, spec.noise_variance, noise_seed);
  }

  const std::vector<double> w0(spec.taps, 0.0);
  RunTrace trace;
  double elapsed = 0.0;
  const auto timed = [&elapsed](auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    const auto t1 = std::chrono::steady_clock::now();
    elapsed = std::chrono::duration<double>(t1 - t0).count();
    return result;
  };

  switch (spec.algorithm) {
    case Algorithm::kLms: {
      const LmsConfig config{mu, spec.taps};
      trace = timed([&] { return lms_run(x, d, config, w0); });
      break;
    }
    case Algorithm::kSda: {
      const auto model = estimate_correlation(x, d, spec.taps);
      auto traj = timed([&] { return sda_run(model, w0, mu, spec.iterations); });
      trace = trace_from_weights(std::move(traj.weights), traj.diverged, x, d);
      break;
    }
    case Algorithm::kNewton: {
      const auto model = estimate_correlation(x, d, spec.taps);
      auto w1 = timed([&] { return newton_step(model, w0); });
      trace = trace_from_weights({w0, std::move(w1)}, false, x, d);
      break;
    }
    case Algorithm::kTdlms: {
      trace = timed([&] { return tdlms_run(x, d, spec.block_length, mu); });
      break;
    }
  }

  SummaryRow row;
  row.mu = mu;
  row.seed = seed;
  row.iterations = spec.iterations;
  row.mse = mse(trace.error);
  row.final_weights = trace.weight_history.back();
  row.final_squared_error = trace.squared_error.back();
  row.elapsed_seconds = elapsed;
  row.diverged = trace.diverged;
  row.per_coefficient_convergence.assign(row.final_weights.size(), std::nullopt);

  // Weight-vs-plant metrics only make sense for time-domain weights of the
  // plant's own order, and a diverged row reports none of them.
  const bool comparable = spec.algorithm != Algorithm::kTdlms &&
                          spec.taps == spec.plant.h.size() && !trace.diverged;
  if (comparable) {
    const auto report =
        convergence_iteration(trace.weight_history, spec.plant, spec.tolerance);
    row.per_coefficient_convergence = report.per_coefficient_iteration;
    row.combined_convergence = report.combined_iteration;
    row.accuracy_percent = accuracy(row.final_weights, spec.plant);
  }

  return RunResult{std::move(row), std::move(trace)};
}

std::vector<SummaryRow> run_sweep(const ExperimentSpec& spec) {
  return run_sweep(spec, [](const SummaryRow&, const RunTrace&) {});
}

std::vector<SummaryRow> run_sweep(
    const ExperimentSpec& spec,
    const std::function<void(const SummaryRow&, const RunTrace&)>& sink) {
  require_spec(spec);
  auto mus = spec.mu_list;
  std::sort(mus.begin(), mus.end());
  auto seeds = spec.seeds;
  std::sort(seeds.begin(), seeds.end());

  std::vector<SummaryRow> rows;
  rows.reserve(mus.size() * seeds.size());
  for (double mu : mus) {
    for (std::uint64_t seed : seeds) {
      auto result = run_single(spec, mu, seed);
      sink(result.row, result.trace);
      rows.push_back(std::move(result.row));
    }
  }
  return rows;
}

std::string summary_csv_header(std::size_t taps) {
  std::string header = "mu,seed,iterations,mse";
  for (std::size_t i = 0; i < taps; ++i) header += ",w_final_" + std::to_string(i);
  header += ",final_squared_error";
  for (std::size_t i = 0; i < taps; ++i) header += ",conv_iter_" + std::to_string(i);
  header += ",conv_combined,accuracy_pct,elapsed_s,diverged";
  return header;
}

void write_summary(const std::vector<SummaryRow>& rows, SummaryFormat format,
                   std::ostream& out) {
  if (rows.empty()) throw std::invalid_argument("summary requires at least one row");
  const std::size_t width = rows.front().final_weights.size();
  for (const auto& row : rows) {
    if (row.final_weights.size() != width ||
        row.per_coefficient_convergence.size() != width) {
      throw std::invalid_argument("summary rows must share one weight width");
    }
  }

  if (format == SummaryFormat::kCsv) {
    out << summary_csv_header(width) << '\n';
    for (const auto& row : rows) {
      out << format_real(row.mu) << ',' << row.seed << ',' << row.iterations << ','
          << format_real(row.mse);
      for (double w : row.final_weights) out << ',' << format_real(w);
      out << ',' << format_real(row.final_squared_error);
      for (const auto& it : row.per_coefficient_convergence) {
        out << ',' << format_optional(it);
      }
      out << ',' << format_optional(row.combined_convergence) << ','
          << (row.accuracy_percent ? format_real(*row.accuracy_percent) : std::string())
          << ',' << format_real(row.elapsed_seconds) << ','
          << (row.diverged ? "true" : "false") << '\n';
    }
    return;
  }

  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json item;
    item["mu"] = row.mu;
    item["seed"] = row.seed;
    item["iterations"] = row.iterations;
    item["mse"] = row.mse;
    item["w_final"] = row.final_weights;
    item["final_squared_error"] = row.final_squared_error;
    auto conv = nlohmann::ordered_json::array();
    for (const auto& it : row.per_coefficient_convergence) {
      if (it) {
        conv.push_back(*it);
      } else {
        conv.push_back(nullptr);
      }
    }
    item["conv_iter"] = std::move(conv);
    if (row.combined_convergence) {
      item["conv_combined"] = *row.combined_convergence;
    } else {
      item["conv_combined"] = nullptr;
    }
    if (row.accuracy_percent) {
      item["accuracy_pct"] = *row.accuracy_percent;
    } else {
      item["accuracy_pct"] = nullptr;
    }
    item["elapsed_s"] = row.elapsed_seconds;
    item["diverged"] = row.diverged;
    doc.push_back(std::move(item));
  }
  out << doc.dump(2) << '\n';
}

void emit_summary(const std::vector<SummaryRow>& rows, SummaryFormat format,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  write_summary(rows, format, out);
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

void write_trace(const RunTrace& trace, std::ostream& out) {
  if (trace.weight_history.empty()) {
    throw std::invalid_argument("trace has no weight history");
  }
  const std::size_t width = trace.weight_history.front().size();
  out << "n,y,e,squared_error";
  for (std::size_t i = 0; i < width; ++i) out << ",w_" << i;
  out << '\n';
  const std::size_t block = trace.block_length == 0 ? 1 : trace.block_length;
  for (std::size_t n = 0; n < trace.output.size(); ++n) {
    out << n << ',' << format_real(trace.output[n]) << ',' << format_real(trace.error[n])
        << ',' << format_real(trace.squared_error[n]);
    const auto& w = trace.weight_history[n / block];
    for (double v : w) out << ',' << format_real(v);
    out << '\n';
  }
}

void emit_trace(const RunTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  write_trace(trace, out);
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

}  // namespace adaptfir
