#pragma once

#include <cstdint>
#include <vector>

#include "decho/floquet.hpp"
#include "decho/torus.hpp"
#include "decho/types.hpp"

namespace decho {

struct ExperimentConfig {
  Index N = 0;
  double K = 0.0;
  std::vector<double> P_list;  // displacements (radians per site)
  int n_max = 0;
  int ensemble_size = 0;
  double sigma = 0.0;  // 0 -> default sqrt(2*pi/N)
  std::uint64_t seed = 0;
  int workers = 1;
};

// Per-timestep ensemble averages for one displacement.
//
// mean_I is the plain complex mean of the kernel I(n).  mean_I_aligned is the
// mean of I(n) * exp(+i P r0) with r0 = x0*N/(2*pi) the packet center in
// sites: the displacement phase at the center is member-specific and averages
// the plain mean toward zero; removing it first makes the kernels add
// coherently, which is the single-particle correlation the saturation scans
// report.
struct EchoSeries {
  double P = 0.0;
  double np_over_2pi = 0.0;
  int ensemble_size = 0;
  RealVector mean_MD;
  RealVector stderr_MD;  // sample std dev / sqrt(ensemble_size)
  ComplexVector mean_I;
  ComplexVector mean_I_aligned;

  Index size() const { return mean_MD.size(); }  // n_max + 1
};

// Kernel and echo for a single initial state:
//   I(n)   = <a_n| e^{iP x} |b_n>,  a_n = U^n e^{iP x} psi0,  b_n = U^n psi0,
//   M_D(n) = |I(n)|^2.
// Two Floquet steps, one diagonal phase and one inner product per time step.
struct StateEchoSeries {
  ComplexVector I;
  RealVector MD;
};

StateEchoSeries echo_series(const QuantumState& psi0,
                            const KickedRotatorParams& params, double P,
                            int n_max);

// Ensemble average over wavepacket centers drawn uniformly on [0, 2pi)^2 with
// the counter RNG (member k reads slots 2k, 2k+1).  Members may be computed in
// parallel; per-member series are buffered and reduced serially in member
// order, so results are bit-identical for a given (config, seed) regardless of
// the worker count.  One EchoSeries per entry of P_list.
std::vector<EchoSeries> ensemble_echo(const ExperimentConfig& config);

}  // namespace decho
