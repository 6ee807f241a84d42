#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace decho {

struct SweepOptions {
  std::filesystem::path output_root = "runs";
  std::string tag;  // appended to the run-directory name
  int workers = 1;
};

struct SweepResult {
  std::filesystem::path run_dir;
  std::vector<std::filesystem::path> csv_files;
};

// Echo time series per (K, P): one CSV per pair with columns
//   n, mean_MD, stderr_MD, re_mean_I, im_mean_I, theory_decay, theory_freeze
// plus fits.csv with one decay fit per pair, a config snapshot and a manifest.
SweepResult run_echo_sweep(const std::filesystem::path& config_path,
                           const SweepOptions& options);

// Saturation plateau vs rescaled displacement: saturation.csv with columns
//   NP_over_2pi, tail_mean, tail_stderr, theory
// and ycorr.csv with the tail of the aligned kernel mean against the
// freeze-only correlation prediction.
SweepResult run_saturation_scan(const std::filesystem::path& config_path,
                                const SweepOptions& options);

// Closed-form curves only (no simulation): theory.csv with columns
//   np_over_2pi, n, decay_term, freeze_term, echo_raw, echo_floored,
//   echo_clamped, y_correlation
SweepResult run_theory_curve(const std::filesystem::path& config_path,
                             const SweepOptions& options);

}  // namespace decho
