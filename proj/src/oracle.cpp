#include "decho/oracle.hpp"

#include <cmath>
#include <ostream>

#include "decho/csv.hpp"
#include "decho/echo.hpp"
#include "decho/floquet.hpp"
#include "decho/torus.hpp"

namespace decho {

namespace {

void add(OracleReport& report, const std::string& name, double observed,
         double bound) {
  report.checks.push_back({name, observed, bound, observed <= bound});
}

std::string tag(Index N, double K) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "N%lld_K%g", static_cast<long long>(N), K);
  return buf;
}

void dense_vs_fast_checks(OracleReport& report, const OracleOptions& options) {
  std::uint64_t seed = 7;
  for (Index N : {8, 16, 32, 64}) {
    const GridPtr grid = make_grid(N);
    for (double K : {0.5, 10.09, 200.09}) {
      const KickedRotatorParams params{K, grid};
      const ComplexMatrix U = dense_floquet(params);

      const ComplexMatrix gram = U.adjoint() * U;
      const double unitarity =
          (gram - ComplexMatrix::Identity(N, N)).cwiseAbs().maxCoeff();
      add(report, "dense_unitarity_" + tag(N, K), unitarity, 1e-10);

      FloquetPropagator prop(params);
      if (options.corrupt_kinetic_phase != 0.0) {
        prop.perturb_kinetic_phase(options.corrupt_kinetic_phase);
      }
      double worst = 0.0;
      for (int trial = 0; trial < 5; ++trial) {
        const QuantumState psi = random_state(grid, seed++);
        ComplexVector fast = psi.amp;
        prop.apply(fast);
        const ComplexVector dense = U * psi.amp;
        worst = std::max(worst, (fast - dense).cwiseAbs().maxCoeff());
      }
      add(report, "dense_vs_fast_" + tag(N, K), worst, 1e-10);
    }
  }
}

void unitarity_checks(OracleReport& report) {
  const GridPtr grid = make_grid(4096);
  const KickedRotatorParams params{10.09, grid};
  FloquetPropagator prop(params);
  QuantumState psi = random_state(grid, 11);
  for (int n = 0; n < 100; ++n) prop.apply(psi.amp);
  add(report, "norm_drift_100_steps_N4096", std::abs(psi.norm() - 1.0), 1e-10);

  const GridPtr small = make_grid(1024);
  const KickedRotatorParams p2{50.09, small};
  FloquetPropagator prop2(p2);
  const QuantumState start = random_state(small, 12);
  QuantumState roundtrip = start;
  prop2.evolve_in_place(roundtrip, 5, Direction::Forward);
  prop2.evolve_in_place(roundtrip, 5, Direction::Adjoint);
  add(report, "adjoint_inverts_n5_N1024",
      (roundtrip.amp - start.amp).cwiseAbs().maxCoeff(), 1e-9);
}

void echo_checks(OracleReport& report) {
  {
    // Brute force via dense matrix powers, N = 16.
    const GridPtr grid = make_grid(16);
    const KickedRotatorParams params{10.09, grid};
    const double P = kTwoPi * 3.0 / 16.0;
    const QuantumState psi0 =
        coherent_state(grid, {1.0, 2.0, default_sigma(*grid)});

    const ComplexMatrix U = dense_floquet(params);
    ComplexVector a = psi0.amp, b = psi0.amp;
    const ComplexVector d = displacement_phases(*grid, P);
    a = d.cwiseProduct(a);
    const int n_max = 3;
    const StateEchoSeries fast = echo_series(psi0, params, P, n_max);
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      if (n > 0) {
        a = U * a;
        b = U * b;
      }
      const Complex brute = (a.conjugate().array() * d.array() * b.array()).sum();
      worst = std::max(worst, std::abs(brute - fast.I[n]));
    }
    add(report, "echo_vs_dense_powers_N16", worst, 1e-10);
  }
  {
    const GridPtr grid = make_grid(256);
    const KickedRotatorParams params{10.09, grid};
    const QuantumState psi0 =
        coherent_state(grid, {0.3, 4.0, default_sigma(*grid)});

    const StateEchoSeries zero = echo_series(psi0, params, 0.0, 10);
    double worst = 0.0;
    for (Index n = 0; n < zero.MD.size(); ++n) {
      worst = std::max(worst, std::abs(zero.MD[n] - 1.0));
    }
    add(report, "echo_P0_identity_N256", worst, 1e-10);

    double worst0 = 0.0;
    for (double u : {1.0, 3.0, 0.37, 100.0}) {
      const StateEchoSeries s =
          echo_series(psi0, params, u * kTwoPi / 256.0, 1);
      worst0 = std::max(worst0, std::abs(s.MD[0] - 1.0));
    }
    add(report, "echo_MD0_equals_1_N256", worst0, 1e-12);

    // Multiplying U by a unit phase must leave I(n) untouched.
    const double P = kTwoPi * 0.4 / 256.0;
    const StateEchoSeries base = echo_series(psi0, params, P, 8);
    FloquetPropagator rotated(params);
    rotated.scale_global_phase(std::polar(1.0, -kPi / 4.0));
    const ComplexVector d = displacement_phases(*grid, P);
    ComplexVector a = d.cwiseProduct(psi0.amp), b = psi0.amp;
    double worst_phase = 0.0;
    for (int n = 1; n <= 8; ++n) {
      rotated.apply(a);
      rotated.apply(b);
      const Complex I = (a.conjugate().array() * d.array() * b.array()).sum();
      worst_phase = std::max(worst_phase, std::abs(I - base.I[n]));
    }
    add(report, "global_phase_invariance_N256", worst_phase, 1e-12);
  }
}

}  // namespace

OracleReport run_oracle_suite(const OracleOptions& options) {
  OracleReport report;
  dense_vs_fast_checks(report, options);
  unitarity_checks(report);
  echo_checks(report);
  return report;
}

void write_report(const OracleReport& report, std::ostream& out) {
  out << "status,name,observed,bound\n";
  for (const OracleCheck& c : report.checks) {
    out << (c.pass ? "PASS" : "FAIL") << ',' << c.name << ','
        << format_real(c.observed) << ',' << format_real(c.bound) << '\n';
  }
}

}  // namespace decho
