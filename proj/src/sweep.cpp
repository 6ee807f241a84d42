#include "decho/sweep.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "decho/analysis.hpp"
#include "decho/config.hpp"
#include "decho/csv.hpp"
#include "decho/echo.hpp"
#include "decho/manifest.hpp"
#include "decho/theory.hpp"

namespace decho {

namespace {

std::string compact_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void write_config_snapshot(const ConfigFile& file,
                           const std::filesystem::path& run_dir) {
  std::ofstream out(run_dir / "config.cfg", std::ios::binary);
  out << file.text();
}

// Default policy: the spec log-linear fit on the plateau-bounded window.
// Asymptotic policy: late-time exponential-plus-constant fit (plateau
// subtracted) on an onset-aligned window, for comparing rates across
// displacements.
DecayFit run_fit(const EchoSeries& series, const SweepConfig& cfg) {
  const double plateau = plateau_estimate(series);
  FitWindow window;
  double baseline = 0.0;
  if (cfg.fit_policy == "asymptotic") {
    window = asymptotic_fit_window(series, plateau);
    baseline = plateau;
  } else {
    window = default_fit_window(series, plateau);
  }
  if (cfg.fit_window) {
    window = {cfg.fit_window->first, cfg.fit_window->second};
  }
  for (int n = window.n_start; n <= window.n_end; ++n) {
    if (!(series.mean_MD[n] - baseline > 0.0)) {
      baseline = 0.0;
      break;
    }
  }
  return fit_decay(series, window, baseline);
}

double effective_sigma(const SweepConfig& cfg) {
  return cfg.sigma > 0.0 ? cfg.sigma
                         : std::sqrt(kTwoPi / static_cast<double>(cfg.N));
}

RunManifest start_manifest(const std::string& command, const SweepConfig& cfg,
                           const SweepOptions& options) {
  RunManifest manifest;
  manifest.command = command;
  manifest.config_file = "config.cfg";
  manifest.seed = cfg.seed;
  manifest.workers = options.workers;
  manifest.started_utc = utc_timestamp_now();
  return manifest;
}

void finish_manifest(RunManifest& manifest, const SweepResult& result) {
  manifest.finished_utc = utc_timestamp_now();
  for (const auto& csv : result.csv_files) {
    manifest.outputs.push_back(
        {csv.filename().string(), fnv1a64_file(csv)});
  }
  manifest.write(result.run_dir / "manifest.txt");
}

}  // namespace

SweepResult run_echo_sweep(const std::filesystem::path& config_path,
                           const SweepOptions& options) {
  ConfigFile file = ConfigFile::parse_file(config_path);
  SweepConfig cfg = load_sweep_config(file);  // validates before any output

  SweepResult result;
  result.run_dir = create_run_dir(options.output_root,
                                  options.tag.empty() ? "echo" : options.tag);
  write_config_snapshot(file, result.run_dir);
  RunManifest manifest = start_manifest("echo-sweep", cfg, options);

  const double sigma = effective_sigma(cfg);

  CsvWriter fits(result.run_dir / "fits.csv",
                 {"K", "NP_over_2pi", "n_start", "n_end", "baseline", "rate",
                  "rate_stderr", "intercept", "residual_rms",
                  "touches_saturation"});

  for (double K : cfg.K_values) {
    ExperimentConfig run;
    run.N = cfg.N;
    run.K = K;
    run.P_list = cfg.P_list;
    run.n_max = cfg.steps;
    run.ensemble_size = cfg.ensemble_size;
    run.sigma = cfg.sigma;
    run.seed = cfg.seed;
    run.workers = options.workers;

    const std::vector<EchoSeries> all = ensemble_echo(run);
    const double rate = cfg.theory_rate ? *cfg.theory_rate : lyapunov_rate(K);

    for (const EchoSeries& series : all) {
      TheoryParams theory{cfg.N, sigma, series.P, cfg.alpha, 1};
      const double freeze = freeze_term(theory);
      const double prefactor =
          std::exp(-0.5 * std::pow(series.np_over_2pi * sigma, 2));

      const std::filesystem::path csv_path =
          result.run_dir / ("echo_K" + compact_real(K) + "_NP" +
                            compact_real(series.np_over_2pi) + ".csv");
      CsvWriter csv(csv_path, {"n", "mean_MD", "stderr_MD", "re_mean_I",
                               "im_mean_I", "theory_decay", "theory_freeze"});
      for (Index n = 0; n < series.size(); ++n) {
        const double decay =
            prefactor * cfg.alpha * std::exp(-rate * static_cast<double>(n));
        csv.row({std::to_string(n), format_real(series.mean_MD[n]),
                 format_real(series.stderr_MD[n]),
                 format_real(series.mean_I[n].real()),
                 format_real(series.mean_I[n].imag()), format_real(decay),
                 format_real(freeze)});
      }
      csv.close();
      result.csv_files.push_back(csv_path);

      const DecayFit fit = run_fit(series, cfg);
      fits.row({format_real(K), format_real(series.np_over_2pi),
                std::to_string(fit.window.n_start),
                std::to_string(fit.window.n_end), format_real(fit.baseline),
                format_real(fit.rate), format_real(fit.rate_std_error),
                format_real(fit.intercept), format_real(fit.residual_rms),
                fit.touches_saturation ? "1" : "0"});
    }
  }
  fits.close();
  result.csv_files.push_back(result.run_dir / "fits.csv");

  finish_manifest(manifest, result);
  return result;
}

SweepResult run_saturation_scan(const std::filesystem::path& config_path,
                                const SweepOptions& options) {
  ConfigFile file = ConfigFile::parse_file(config_path);
  SweepConfig cfg = load_sweep_config(file);
  if (cfg.K_values.size() != 1) {
    throw ConfigError(file.name(), 0,
                      "saturation-scan expects a single K in [dynamics]");
  }

  SweepResult result;
  result.run_dir = create_run_dir(
      options.output_root, options.tag.empty() ? "saturation" : options.tag);
  write_config_snapshot(file, result.run_dir);
  RunManifest manifest = start_manifest("saturation-scan", cfg, options);

  const double sigma = effective_sigma(cfg);
  FitWindow tail{};
  if (cfg.tail_window) {
    tail = {cfg.tail_window->first, cfg.tail_window->second};
  } else {
    tail = {std::max(1, (2 * cfg.steps) / 5), cfg.steps};
  }

  ExperimentConfig run;
  run.N = cfg.N;
  run.K = cfg.K_values.front();
  run.P_list = cfg.P_list;
  run.n_max = cfg.steps;
  run.ensemble_size = cfg.ensemble_size;
  run.sigma = cfg.sigma;
  run.seed = cfg.seed;
  run.workers = options.workers;
  const std::vector<EchoSeries> all = ensemble_echo(run);

  CsvWriter sat(result.run_dir / "saturation.csv",
                {"NP_over_2pi", "tail_mean", "tail_stderr", "theory"});
  CsvWriter ycorr(result.run_dir / "ycorr.csv",
                  {"NP_over_2pi", "y_tail_mean", "y_theory"});
  for (const EchoSeries& series : all) {
    const TailEstimate estimate = tail_saturation(series, tail);
    if (!estimate.decayed) {
      std::cerr << "warning: tail window [" << tail.n_start << ", "
                << tail.n_end << "] still decaying at NP/2pi = "
                << series.np_over_2pi << "\n";
    }
    TheoryParams theory{cfg.N, sigma, series.P, cfg.alpha, 1};
    sat.row({format_real(series.np_over_2pi), format_real(estimate.mean),
             format_real(estimate.std_error),
             format_real(saturation_prediction(theory))});

    double y_tail = 0.0;
    for (int n = tail.n_start; n <= tail.n_end; ++n) {
      y_tail += std::abs(series.mean_I_aligned[n]);
    }
    y_tail /= (tail.n_end - tail.n_start + 1);
    ycorr.row({format_real(series.np_over_2pi), format_real(y_tail),
               format_real(y_correlation_prediction(theory))});
  }
  sat.close();
  ycorr.close();
  result.csv_files.push_back(result.run_dir / "saturation.csv");
  result.csv_files.push_back(result.run_dir / "ycorr.csv");

  finish_manifest(manifest, result);
  return result;
}

SweepResult run_theory_curve(const std::filesystem::path& config_path,
                             const SweepOptions& options) {
  ConfigFile file = ConfigFile::parse_file(config_path);
  file.restrict_sections(
      {"grid", "dynamics", "ensemble", "displacements", "analysis"});

  const Index N = file.get_int("grid", "N");
  if (N < 1) throw ConfigError(file.name(), 0, "[grid] N must be >= 1");
  const double K = file.get_real("dynamics", "K");
  const int steps = static_cast<int>(file.get_int("dynamics", "steps"));
  if (steps < 1) throw ConfigError(file.name(), 0, "[dynamics] steps must be >= 1");

  double sigma = std::sqrt(kTwoPi / static_cast<double>(N));
  if (file.has("ensemble", "sigma")) {
    const std::string s = file.get_string("ensemble", "sigma");
    if (s != "default") sigma = std::stod(s);
  }
  std::vector<double> us;
  if (file.has("displacements", "m")) {
    for (long long m : file.get_int_list("displacements", "m")) {
      us.push_back(static_cast<double>(m));
    }
  } else {
    us = file.get_real_list("displacements", "np_over_2pi");
  }
  const double alpha = file.get_or<double>("analysis", "alpha", 1.0);
  const int d = static_cast<int>(file.get_or<long long>("analysis", "d", 1));
  double rate = lyapunov_rate(K);
  if (file.has("analysis", "theory_rate")) {
    rate = file.get_real("analysis", "theory_rate");
  }
  file.check_consumed();

  SweepResult result;
  result.run_dir = create_run_dir(options.output_root,
                                  options.tag.empty() ? "theory" : options.tag);
  write_config_snapshot(file, result.run_dir);
  RunManifest manifest = start_manifest("theory-curve", SweepConfig{}, options);

  CsvWriter csv(result.run_dir / "theory.csv",
                {"np_over_2pi", "n", "decay_term", "freeze_term", "echo_raw",
                 "echo_floored", "echo_clamped", "y_correlation"});
  for (double u : us) {
    const double P = u * kTwoPi / static_cast<double>(N);
    const TheoryParams theory{N, sigma, P, alpha, d};
    const double freeze = freeze_term(theory);
    const double y = y_correlation_prediction(theory);
    const double prefactor = std::exp(-0.5 * std::pow(u * sigma, 2));
    for (int n = 0; n <= steps; ++n) {
      const double t = static_cast<double>(n);
      csv.row({format_real(u), std::to_string(n),
               format_real(prefactor * alpha * std::exp(-rate * t)),
               format_real(freeze), format_real(predicted_echo_raw(theory, rate, t)),
               format_real(predicted_echo(theory, rate, t)),
               format_real(predicted_echo_clamped(theory, rate, t)),
               format_real(y)});
    }
  }
  csv.close();
  result.csv_files.push_back(result.run_dir / "theory.csv");

  finish_manifest(manifest, result);
  return result;
}

}  // namespace decho
