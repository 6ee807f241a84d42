// Command-line front end: experiment sweeps, theory curves, the classical
// Lyapunov estimator and the oracle suite.
//
// Exit codes: 0 success, 1 config/usage error, 2 oracle or invariant failure.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "decho/classical.hpp"
#include "decho/config.hpp"
#include "decho/manifest.hpp"
#include "decho/oracle.hpp"
#include "decho/sweep.hpp"
#include "decho/theory.hpp"

namespace {

void report_run(const decho::SweepResult& result) {
  std::cout << "run directory: " << result.run_dir.string() << "\n";
  for (const auto& csv : result.csv_files) {
    std::cout << "  wrote " << csv.filename().string() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decho " + std::string(decho::kVersion) +
               " - displacement echoes in the quantized kicked rotator"};
  app.require_subcommand(1);

  decho::SweepOptions sweep_options;
  std::string config_path;

  auto add_sweep_options = [&](CLI::App* cmd) {
    cmd->add_option("config", config_path, "experiment config file")
        ->required();
    cmd->add_option("--out-root", sweep_options.output_root,
                    "directory that receives runs/<timestamp>-<tag>/")
        ->envname("DECHO_OUTPUT_ROOT");
    cmd->add_option("--workers", sweep_options.workers,
                    "ensemble worker threads (results are identical for any "
                    "worker count)")
        ->envname("DECHO_WORKERS");
    cmd->add_option("--tag", sweep_options.tag, "run-directory name tag");
  };

  CLI::App* echo_cmd =
      app.add_subcommand("echo-sweep", "echo time series per (K, P) pair");
  add_sweep_options(echo_cmd);

  CLI::App* sat_cmd = app.add_subcommand(
      "saturation-scan", "late-time echo plateau vs rescaled displacement");
  add_sweep_options(sat_cmd);

  CLI::App* theory_cmd =
      app.add_subcommand("theory-curve", "closed-form prediction curves");
  add_sweep_options(theory_cmd);

  double lyap_K = 0.0;
  long lyap_steps = 1000000;
  long lyap_transient = 1000;
  std::uint64_t lyap_seed = 0;
  CLI::App* lyap_cmd = app.add_subcommand(
      "lyapunov", "Benettin estimate for the classical standard map");
  lyap_cmd->add_option("--K", lyap_K, "kicking strength")->required();
  lyap_cmd->add_option("--steps", lyap_steps, "tangent-map steps");
  lyap_cmd->add_option("--transient", lyap_transient, "discarded steps");
  lyap_cmd->add_option("--seed", lyap_seed, "orbit seed");

  decho::OracleOptions oracle_options;
  std::string report_path;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-suite", "dense-vs-fast, unitarity and echo equivalence checks");
  oracle_cmd->add_option("--report", report_path, "also write the report CSV here");
  oracle_cmd
      ->add_option("--corrupt-kinetic-phase", oracle_options.corrupt_kinetic_phase,
                   "negative control: rotate one kinetic phase entry (radians)")
      ->group("");  // hidden; validation hook

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(echo_cmd)) {
      report_run(decho::run_echo_sweep(config_path, sweep_options));
    } else if (app.got_subcommand(sat_cmd)) {
      report_run(decho::run_saturation_scan(config_path, sweep_options));
    } else if (app.got_subcommand(theory_cmd)) {
      report_run(decho::run_theory_curve(config_path, sweep_options));
    } else if (app.got_subcommand(lyap_cmd)) {
      const auto est =
          decho::benettin_lyapunov(lyap_K, lyap_steps, lyap_transient, lyap_seed);
      std::cout << "lambda = " << est.value << " +/- " << est.std_error
                << "   (ln(K/2) = " << decho::lyapunov_rate(lyap_K) << ")\n";
    } else if (app.got_subcommand(oracle_cmd)) {
      const decho::OracleReport report =
          decho::run_oracle_suite(oracle_options);
      decho::write_report(report, std::cout);
      if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        decho::write_report(report, out);
      }
      if (!report.all_pass()) {
        std::cerr << "oracle suite failed\n";
        return 2;
      }
    }
  } catch (const decho::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
