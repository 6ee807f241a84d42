#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace decho {

inline constexpr const char* kVersion = "0.1.0";

// One manifest per run directory: config snapshot reference, seed, wall-clock
// bounds and a checksum per output file.  Timestamps make manifests differ
// between reruns; determinism is defined over the CSV payloads.
struct RunManifest {
  std::string command;
  std::string version = kVersion;
  std::string config_file;  // path of the snapshot inside the run directory
  std::uint64_t seed = 0;
  int workers = 1;
  std::string started_utc;
  std::string finished_utc;

  struct Output {
    std::string path;  // relative to the run directory
    std::uint64_t fnv1a64 = 0;
  };
  std::vector<Output> outputs;

  void write(const std::filesystem::path& path) const;
};

std::string utc_timestamp_now();  // e.g. 20260809T101530Z

// Creates runs_root/<timestamp>-<tag>/ and never reuses an existing directory
// (a numeric suffix is appended instead).
std::filesystem::path create_run_dir(const std::filesystem::path& runs_root,
                                     const std::string& tag);

}  // namespace decho
