#include "decho/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace decho {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) items.push_back(trim(item));
  return items;
}

double parse_real(const std::string& file, int line, const std::string& raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(file, line, "expected a real number, got '" + s + "'");
  }
  return v;
}

long long parse_int(const std::string& file, int line, const std::string& raw) {
  const std::string s = trim(raw);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(file, line, "expected an integer, got '" + s + "'");
  }
  return v;
}

}  // namespace

ConfigFile ConfigFile::parse_string(const std::string& text,
                                    const std::string& name) {
  ConfigFile cfg;
  cfg.name_ = name;
  cfg.text_ = text;

  std::stringstream ss(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) {
        throw ConfigError(name, line_no, "malformed section header '" + line + "'");
      }
      section = trim(line.substr(1, line.size() - 2));
      cfg.section_lines_.emplace(section, line_no);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(name, line_no, "expected 'key = value', got '" + line + "'");
    }
    if (section.empty()) {
      throw ConfigError(name, line_no, "key outside of any [section]");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(name, line_no, "empty key");
    auto [it, inserted] =
        cfg.sections_[section].emplace(key, Entry{value, line_no});
    if (!inserted) {
      throw ConfigError(name, line_no,
                        "duplicate key '" + key + "' in [" + section + "]");
    }
  }
  return cfg;
}

ConfigFile ConfigFile::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError(path.string(), 0, "cannot open config file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path.string());
}

bool ConfigFile::has(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

const ConfigFile::Entry& ConfigFile::lookup(const std::string& section,
                                            const std::string& key) {
  const auto s = sections_.find(section);
  if (s == sections_.end()) {
    throw ConfigError(name_, 0, "missing required section [" + section + "]");
  }
  const auto k = s->second.find(key);
  if (k == s->second.end()) {
    throw ConfigError(name_, section_lines_.at(section),
                      "missing required key '" + key + "' in [" + section + "]");
  }
  k->second.consumed = true;
  return k->second;
}

std::string ConfigFile::get_string(const std::string& section,
                                   const std::string& key) {
  return lookup(section, key).value;
}

double ConfigFile::get_real(const std::string& section, const std::string& key) {
  const Entry& e = lookup(section, key);
  return parse_real(name_, e.line, e.value);
}

long long ConfigFile::get_int(const std::string& section,
                              const std::string& key) {
  const Entry& e = lookup(section, key);
  return parse_int(name_, e.line, e.value);
}

std::uint64_t ConfigFile::get_u64(const std::string& section,
                                  const std::string& key) {
  const Entry& e = lookup(section, key);
  std::uint64_t v = 0;
  const std::string s = trim(e.value);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError(name_, e.line, "expected an unsigned integer, got '" + s + "'");
  }
  return v;
}

std::vector<double> ConfigFile::get_real_list(const std::string& section,
                                              const std::string& key) {
  const Entry& e = lookup(section, key);
  std::vector<double> out;
  for (const auto& item : split_list(e.value)) {
    out.push_back(parse_real(name_, e.line, item));
  }
  if (out.empty()) throw ConfigError(name_, e.line, "empty list for '" + key + "'");
  return out;
}

std::vector<long long> ConfigFile::get_int_list(const std::string& section,
                                                const std::string& key) {
  const Entry& e = lookup(section, key);
  std::vector<long long> out;
  for (const auto& item : split_list(e.value)) {
    out.push_back(parse_int(name_, e.line, item));
  }
  if (out.empty()) throw ConfigError(name_, e.line, "empty list for '" + key + "'");
  return out;
}

template <typename T>
T ConfigFile::get_or(const std::string& section, const std::string& key,
                     T fallback) {
  if (!has(section, key)) return fallback;
  if constexpr (std::is_same_v<T, double>) {
    return get_real(section, key);
  } else if constexpr (std::is_same_v<T, long long>) {
    return get_int(section, key);
  } else if constexpr (std::is_same_v<T, std::uint64_t>) {
    return get_u64(section, key);
  } else {
    return get_string(section, key);
  }
}

template double ConfigFile::get_or<double>(const std::string&,
                                           const std::string&, double);
template long long ConfigFile::get_or<long long>(const std::string&,
                                                 const std::string&, long long);
template std::uint64_t ConfigFile::get_or<std::uint64_t>(const std::string&,
                                                         const std::string&,
                                                         std::uint64_t);
template std::string ConfigFile::get_or<std::string>(const std::string&,
                                                     const std::string&,
                                                     std::string);

void ConfigFile::restrict_sections(const std::vector<std::string>& allowed) const {
  for (const auto& [section, entries] : sections_) {
    if (std::find(allowed.begin(), allowed.end(), section) == allowed.end()) {
      throw ConfigError(name_, section_lines_.at(section),
                        "unknown section [" + section + "]");
    }
  }
}

void ConfigFile::check_consumed() const {
  for (const auto& [section, entries] : sections_) {
    for (const auto& [key, entry] : entries) {
      if (!entry.consumed) {
        throw ConfigError(name_, entry.line,
                          "unknown key '" + key + "' in [" + section + "]");
      }
    }
  }
}

SweepConfig load_sweep_config(ConfigFile& file) {
  file.restrict_sections(
      {"grid", "dynamics", "ensemble", "displacements", "analysis"});

  SweepConfig cfg;
  cfg.N = file.get_int("grid", "N");
  if (cfg.N < 2 || cfg.N % 2 != 0) {
    throw ConfigError(file.name(), 0,
                      "[grid] N must be even and >= 2, got " +
                          std::to_string(cfg.N));
  }
  cfg.K_values = file.get_real_list("dynamics", "K");
  for (double K : cfg.K_values) {
    if (!(K > 0.0)) throw ConfigError(file.name(), 0, "[dynamics] K must be > 0");
  }
  cfg.steps = static_cast<int>(file.get_int("dynamics", "steps"));
  if (cfg.steps < 1) throw ConfigError(file.name(), 0, "[dynamics] steps must be >= 1");

  cfg.ensemble_size = static_cast<int>(file.get_int("ensemble", "size"));
  if (cfg.ensemble_size < 1) {
    throw ConfigError(file.name(), 0, "[ensemble] size must be >= 1");
  }
  cfg.seed = file.get_or<std::uint64_t>("ensemble", "seed", 0);
  if (file.has("ensemble", "sigma")) {
    const std::string sigma = file.get_string("ensemble", "sigma");
    cfg.sigma = sigma == "default" ? 0.0 : parse_real(file.name(), 0, sigma);
  }

  // Displacements: integer lattice multiples or a real N*P/(2*pi) grid.
  const bool has_m = file.has("displacements", "m");
  const bool has_u = file.has("displacements", "np_over_2pi");
  if (has_m == has_u) {
    throw ConfigError(file.name(), 0,
                      "[displacements] needs exactly one of 'm' or 'np_over_2pi'");
  }
  if (has_m) {
    for (long long m : file.get_int_list("displacements", "m")) {
      cfg.np_over_2pi.push_back(static_cast<double>(m));
    }
  } else {
    cfg.np_over_2pi = file.get_real_list("displacements", "np_over_2pi");
  }
  for (double u : cfg.np_over_2pi) {
    cfg.P_list.push_back(u * kTwoPi / static_cast<double>(cfg.N));
  }

  cfg.fit_policy = file.get_or<std::string>("analysis", "fit", "default");
  if (cfg.fit_policy != "default" && cfg.fit_policy != "asymptotic") {
    throw ConfigError(file.name(), 0,
                      "[analysis] fit must be 'default' or 'asymptotic'");
  }
  auto read_window = [&](const char* key) -> std::optional<std::pair<int, int>> {
    if (!file.has("analysis", key)) return std::nullopt;
    const auto w = file.get_int_list("analysis", key);
    if (w.size() != 2 || w[0] < 0 || w[1] <= w[0]) {
      throw ConfigError(file.name(), 0,
                        std::string("[analysis] ") + key +
                            " must be 'first, last' with first < last");
    }
    return std::make_pair(static_cast<int>(w[0]), static_cast<int>(w[1]));
  };
  cfg.fit_window = read_window("fit_window");
  cfg.tail_window = read_window("tail_window");
  if (file.has("analysis", "theory_rate")) {
    cfg.theory_rate = file.get_real("analysis", "theory_rate");
  }
  cfg.alpha = file.get_or<double>("analysis", "alpha", 1.0);

  file.check_consumed();
  return cfg;
}

}  // namespace decho
