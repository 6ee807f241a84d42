#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decho {

// Self-contained correctness battery: fast split-operator step against the
// dense kernel, unitarity, adjoint inversion, brute-force echo equivalence
// and global-phase invariance.  Each check reports the observed deviation
// against its bound.
struct OracleCheck {
  std::string name;
  double observed = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct OracleReport {
  std::vector<OracleCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

struct OracleOptions {
  // Nonzero rotates one kinetic phase-table entry by this angle before the
  // dense-vs-fast comparison; negative control for the suite itself.
  double corrupt_kinetic_phase = 0.0;
};

OracleReport run_oracle_suite(const OracleOptions& options = {});

// One CSV line per check: status,name,observed,bound.
void write_report(const OracleReport& report, std::ostream& out);

}  // namespace decho
