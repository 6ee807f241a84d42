#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "decho/config.hpp"
#include "decho/csv.hpp"
#include "decho/oracle.hpp"
#include "decho/sweep.hpp"

using namespace decho;
namespace fs = std::filesystem;

namespace {

fs::path write_temp_config(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "decho_sweep_tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First data row of a CSV as column -> cell.
std::map<std::string, std::string> first_row(const fs::path& path) {
  std::ifstream in(path);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::vector<std::string> names, cells;
  std::stringstream hs(header), rs(row);
  std::string item;
  while (std::getline(hs, item, ',')) names.push_back(item);
  while (std::getline(rs, item, ',')) cells.push_back(item);
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < names.size() && i < cells.size(); ++i) {
    out[names[i]] = cells[i];
  }
  return out;
}

}  // namespace

TEST_CASE("echo sweep writes CSVs, fits and a manifest") {
  const fs::path cfg = write_temp_config("small_sweep.cfg",
                                         "[grid]\nN = 64\n"
                                         "[dynamics]\nK = 10.09\nsteps = 6\n"
                                         "[ensemble]\nsize = 4\nseed = 11\n"
                                         "[displacements]\nm = 0, 2\n");
  SweepOptions options;
  options.output_root = fs::temp_directory_path() / "decho_sweep_tests" / "runs";
  options.tag = "unit";
  const SweepResult result = run_echo_sweep(cfg, options);

  REQUIRE(fs::exists(result.run_dir / "manifest.txt"));
  REQUIRE(fs::exists(result.run_dir / "config.cfg"));
  REQUIRE(fs::exists(result.run_dir / "echo_K10.09_NP0.csv"));
  REQUIRE(fs::exists(result.run_dir / "echo_K10.09_NP2.csv"));
  REQUIRE(fs::exists(result.run_dir / "fits.csv"));
  CHECK(slurp(result.run_dir / "config.cfg") == slurp(cfg));

  const auto header = [&](const fs::path& p) {
    std::ifstream in(p);
    std::string h;
    std::getline(in, h);
    return h;
  };
  CHECK(header(result.run_dir / "echo_K10.09_NP2.csv") ==
        "n,mean_MD,stderr_MD,re_mean_I,im_mean_I,theory_decay,theory_freeze");

  // P = 0 row: echo pinned at 1.
  const auto row = first_row(result.run_dir / "echo_K10.09_NP0.csv");
  CHECK(std::stod(row.at("mean_MD")) == doctest::Approx(1.0).epsilon(1e-10));

  // Manifest lists every CSV with its checksum.
  const std::string manifest = slurp(result.run_dir / "manifest.txt");
  CHECK(manifest.find("command = echo-sweep") != std::string::npos);
  CHECK(manifest.find("echo_K10.09_NP2.csv fnv1a64=") != std::string::npos);
  CHECK(manifest.find("fits.csv fnv1a64=") != std::string::npos);
}

TEST_CASE("sweep reruns with one seed are bit-identical across worker counts") {
  const fs::path cfg = write_temp_config("determinism.cfg",
                                         "[grid]\nN = 128\n"
                                         "[dynamics]\nK = 10.09\nsteps = 8\n"
                                         "[ensemble]\nsize = 10\nseed = 5\n"
                                         "[displacements]\nm = 1, 3\n");
  SweepOptions options;
  options.output_root = fs::temp_directory_path() / "decho_sweep_tests" / "runs";
  options.tag = "det1";
  options.workers = 1;
  const SweepResult serial = run_echo_sweep(cfg, options);
  options.tag = "det2";
  options.workers = 4;
  const SweepResult parallel = run_echo_sweep(cfg, options);

  REQUIRE(serial.csv_files.size() == parallel.csv_files.size());
  for (std::size_t i = 0; i < serial.csv_files.size(); ++i) {
    CHECK(fnv1a64_file(serial.csv_files[i]) == fnv1a64_file(parallel.csv_files[i]));
  }
}

TEST_CASE("invalid config leaves no run directory behind") {
  const fs::path cfg = write_temp_config("broken.cfg",
                                         "[grid]\nN = 64\n"
                                         "[dynamics]\nK = 10.09\nsteps = 6\n"
                                         "[ensemble]\nsize = 4\nsead = 11\n"
                                         "[displacements]\nm = 0\n");
  SweepOptions options;
  options.output_root =
      fs::temp_directory_path() / "decho_sweep_tests" / "runs_broken";
  CHECK_THROWS_AS(run_echo_sweep(cfg, options), ConfigError);
  CHECK_FALSE(fs::exists(options.output_root));
}

TEST_CASE("saturation scan output") {
  const fs::path cfg = write_temp_config("sat.cfg",
                                         "[grid]\nN = 128\n"
                                         "[dynamics]\nK = 10.09\nsteps = 30\n"
                                         "[ensemble]\nsize = 16\nseed = 3\n"
                                         "[displacements]\nnp_over_2pi = 0, 0.5, 1\n"
                                         "[analysis]\ntail_window = 15, 30\n");
  SweepOptions options;
  options.output_root = fs::temp_directory_path() / "decho_sweep_tests" / "runs";
  options.tag = "sat";
  options.workers = 2;
  const SweepResult result = run_saturation_scan(cfg, options);

  REQUIRE(fs::exists(result.run_dir / "saturation.csv"));
  REQUIRE(fs::exists(result.run_dir / "ycorr.csv"));

  std::ifstream in(result.run_dir / "saturation.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "NP_over_2pi,tail_mean,tail_stderr,theory");
  auto split = [](const std::string& row) {
    std::stringstream ss(row);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  std::getline(in, line);  // u = 0 row
  const auto u0 = split(line);
  REQUIRE(u0.size() == 4);
  CHECK(std::stod(u0[0]) == 0.0);
  CHECK(std::stod(u0[1]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::stod(u0[3]) == doctest::Approx(1.0).epsilon(1e-12));
  std::getline(in, line);  // u = 0.5 row: theory = 4/pi^2 * exp[-(u sigma)^2/2]
  const auto u5 = split(line);
  const double sigma = std::sqrt(kTwoPi / 128.0);
  const double expected =
      4.0 / (kPi * kPi) * std::exp(-0.5 * std::pow(0.5 * sigma, 2));
  CHECK(std::stod(u5[3]) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("run directories are never reused") {
  const fs::path cfg = write_temp_config("tc.cfg",
                                         "[grid]\nN = 64\n"
                                         "[dynamics]\nK = 10.09\nsteps = 3\n"
                                         "[displacements]\nnp_over_2pi = 0.5\n");
  SweepOptions options;
  options.output_root = fs::temp_directory_path() / "decho_sweep_tests" / "runs";
  options.tag = "collide";
  const SweepResult a = run_theory_curve(cfg, options);
  const SweepResult b = run_theory_curve(cfg, options);
  CHECK(a.run_dir != b.run_dir);
  CHECK(fs::exists(a.run_dir / "theory.csv"));
  CHECK(fs::exists(b.run_dir / "theory.csv"));
}

TEST_CASE("theory curve output") {
  const fs::path cfg = write_temp_config("theory.cfg",
                                         "[grid]\nN = 16384\n"
                                         "[dynamics]\nK = 10.09\nsteps = 10\n"
                                         "[displacements]\nnp_over_2pi = 0.5\n"
                                         "[analysis]\ntheory_rate = 1.1\n");
  SweepOptions options;
  options.output_root = fs::temp_directory_path() / "decho_sweep_tests" / "runs";
  options.tag = "theory";
  const SweepResult result = run_theory_curve(cfg, options);
  REQUIRE(fs::exists(result.run_dir / "theory.csv"));
  const auto row = first_row(result.run_dir / "theory.csv");  // n = 0
  CHECK(std::stod(row.at("echo_clamped")) == doctest::Approx(1.0));
  CHECK(std::stod(row.at("freeze_term")) == doctest::Approx(0.4053).epsilon(1e-3));
  CHECK(std::stod(row.at("y_correlation")) == doctest::Approx(0.6366).epsilon(1e-3));
}

TEST_CASE("oracle suite passes clean and fails the negative control") {
  const OracleReport clean = run_oracle_suite({});
  CHECK(clean.all_pass());
  CHECK(clean.checks.size() > 10);

  OracleOptions corrupt;
  corrupt.corrupt_kinetic_phase = 1e-6;
  const OracleReport bad = run_oracle_suite(corrupt);
  CHECK_FALSE(bad.all_pass());
  bool found = false;
  for (const auto& check : bad.checks) {
    if (!check.pass && check.name.rfind("dense_vs_fast", 0) == 0) {
      found = true;
      CHECK(check.observed > check.bound);  // max deviation is reported
    }
  }
  CHECK(found);
}
