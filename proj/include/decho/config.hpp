#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decho/types.hpp"

namespace decho {

// Config-file problems carry the file name and 1-based line number; the CLI
// maps them to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& file, int line, const std::string& message)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Flat, line-oriented `key = value` text with [section] headers and '#'
// comments.  Values are scalars or comma-separated lists.  Unknown sections,
// unknown keys and duplicate keys are hard errors.
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::filesystem::path& path);
  static ConfigFile parse_string(const std::string& text,
                                 const std::string& name = "<config>");

  // Getters mark keys as consumed; check_consumed() then rejects leftovers,
  // which is how typos surface as errors instead of silently defaulting.
  bool has(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key);
  double get_real(const std::string& section, const std::string& key);
  long long get_int(const std::string& section, const std::string& key);
  std::uint64_t get_u64(const std::string& section, const std::string& key);
  std::vector<double> get_real_list(const std::string& section,
                                    const std::string& key);
  std::vector<long long> get_int_list(const std::string& section,
                                      const std::string& key);

  template <typename T>
  T get_or(const std::string& section, const std::string& key, T fallback);

  void restrict_sections(const std::vector<std::string>& allowed) const;
  void check_consumed() const;

  const std::string& name() const { return name_; }
  const std::string& text() const { return text_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };

  const Entry& lookup(const std::string& section, const std::string& key);

  std::string name_;
  std::string text_;  // verbatim copy, for run-directory snapshots
  std::map<std::string, std::map<std::string, Entry>> sections_;
  std::map<std::string, int> section_lines_;
};

// Schema shared by the echo-sweep and saturation-scan commands.
struct SweepConfig {
  Index N = 0;
  std::vector<double> K_values;
  int steps = 0;
  int ensemble_size = 0;
  std::uint64_t seed = 0;
  double sigma = 0.0;  // 0 -> default sqrt(2*pi/N)
  std::vector<double> P_list;
  std::vector<double> np_over_2pi;  // same displacements, rescaled N*P/(2*pi)

  // [analysis]
  std::string fit_policy = "default";  // "default" | "asymptotic"
  std::optional<std::pair<int, int>> fit_window;
  std::optional<std::pair<int, int>> tail_window;
  std::optional<double> theory_rate;  // overlay decay rate; default ln(K/2)
  double alpha = 1.0;
};

SweepConfig load_sweep_config(ConfigFile& file);

}  // namespace decho
