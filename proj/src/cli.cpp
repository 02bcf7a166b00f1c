#include "adaptfir/cli.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adaptfir/errors.hpp"
#include "adaptfir/harness.hpp"

namespace adaptfir {

namespace {

std::string format_real(double v) {
  std::array<char, 64> buf;
  const auto [p, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), p);
}

std::string trace_filename(Algorithm algorithm, double mu, std::uint64_t seed) {
  return "trace_" + algorithm_name(algorithm) + "_mu" + format_real(mu) + "_seed" +
         std::to_string(seed) + ".csv";
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Adaptive FIR system identification: LMS, SDA, Newton, and "
               "block transform-domain LMS step-size sweeps"};

  std::vector<double> plant{1.0, 2.0};
  std::size_t taps = 2;
  std::vector<double> mu_list = default_mu_sweep();
  std::size_t iterations = 1000;
  std::vector<std::uint64_t> seeds{1};
  std::string algorithm = "lms";
  std::size_t block_length = 8;
  double noise_variance = 0.0;
  double tolerance = 0.01;
  std::string out_path;
  std::string trace_dir;
  std::string format = "csv";

  app.add_option("--plant", plant, "Plant impulse response, comma separated")
      ->delimiter(',');
  app.add_option("--taps", taps, "Adaptive filter order");
  app.add_option("--mu", mu_list, "Step sizes to sweep, comma separated")->delimiter(',');
  app.add_option("--iterations", iterations, "Samples per run");
  app.add_option("--seeds", seeds, "Input generator seeds, comma separated")
      ->delimiter(',');
  app.add_option("--algorithm", algorithm, "One of lms, sda, newton, tdlms");
  app.add_option("--block-length", block_length, "Block length for tdlms");
  app.add_option("--noise-variance", noise_variance,
                 "Variance of white noise added to the desired signal");
  app.add_option("--tolerance", tolerance, "Relative convergence band");
  app.add_option("--out", out_path, "Summary file path (stdout when omitted)");
  app.add_option("--trace-dir", trace_dir, "Directory for per-run trace CSVs");
  app.add_option("--format", format, "Summary format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    ExperimentSpec spec{FirSystem(plant)};
    spec.taps = taps;
    spec.mu_list = mu_list;
    spec.iterations = iterations;
    spec.seeds = seeds;
    spec.algorithm = algorithm_from_name(algorithm);
    spec.block_length = block_length;
    spec.noise_variance = noise_variance;
    spec.tolerance = tolerance;

    std::vector<SummaryRow> rows;
    if (trace_dir.empty()) {
      rows = run_sweep(spec);
    } else {
      std::error_code ec;
      std::filesystem::create_directories(trace_dir, ec);
      if (ec) throw IoError(trace_dir, ec.message());
      rows = run_sweep(spec, [&](const SummaryRow& row, const RunTrace& trace) {
        const auto path = std::filesystem::path(trace_dir) /
                          trace_filename(spec.algorithm, row.mu, row.seed);
        emit_trace(trace, path.string());
      });
    }

    const auto summary_format =
        format == "json" ? SummaryFormat::kJson : SummaryFormat::kCsv;
    if (out_path.empty()) {
      write_summary(rows, summary_format, std::cout);
    } else {
      emit_summary(rows, summary_format, out_path);
    }
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const SingularMatrixError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace adaptfir
