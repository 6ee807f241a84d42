#include "decho/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace decho {

std::string utc_timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

std::filesystem::path create_run_dir(const std::filesystem::path& runs_root,
                                     const std::string& tag) {
  std::filesystem::create_directories(runs_root);
  const std::string stem = utc_timestamp_now() + "-" + tag;
  std::filesystem::path dir = runs_root / stem;
  for (int suffix = 2; std::filesystem::exists(dir); ++suffix) {
    dir = runs_root / (stem + "-" + std::to_string(suffix));
  }
  std::filesystem::create_directory(dir);
  return dir;
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest: " + path.string());
  out << "command = " << command << '\n';
  out << "version = " << version << '\n';
  out << "config = " << config_file << '\n';
  out << "seed = " << seed << '\n';
  out << "workers = " << workers << '\n';
  out << "started_utc = " << started_utc << '\n';
  out << "finished_utc = " << finished_utc << '\n';
  for (const Output& o : outputs) {
    char hex[24];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(o.fnv1a64));
    out << "output = " << o.path << " fnv1a64=" << hex << '\n';
  }
}

}  // namespace decho
