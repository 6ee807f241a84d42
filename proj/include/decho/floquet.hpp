#pragma once

#include <memory>

#include "decho/torus.hpp"
#include "decho/types.hpp"

namespace decho {

struct KickedRotatorParams {
  double K = 0.0;  // kicking strength, > 0 (fully chaotic regime needs K > 7)
  GridPtr grid;
};

enum class Direction { Forward, Adjoint };

// Immutable per-(N, K) phase tables for the split-operator step.
struct FloquetPhases {
  ComplexVector kick;     // exp(-i (N K / 2pi) cos(2 pi l / N))
  ComplexVector kinetic;  // exp(-i pi m^2 / N)
  Complex global;         // e^{i pi/4}, from the even-N quadratic Gauss sum
};

// Process-wide cache keyed on (N, bit pattern of K).
std::shared_ptr<const FloquetPhases> floquet_phases(const TorusGrid& grid,
                                                    double K);

// One-kick propagator U (and adjoint) applied spectrally:
//   forward: kick phase -> DFT -> kinetic phase -> inverse DFT -> global phase,
// which reproduces the dense position-space kernel
//   U_{l,l'} = N^{-1/2} exp[i pi (l-l')^2 / N] exp[-i (N K / 2pi) cos(2 pi l'/N)]
// exactly for even N.  O(N log N) per step.
//
// Phase tables are shared and immutable; the scratch buffer is per instance,
// so use one propagator per thread for concurrent evolutions.
class FloquetPropagator {
 public:
  explicit FloquetPropagator(KickedRotatorParams params);

  void apply(ComplexVector& amp, Direction dir = Direction::Forward) const;
  void step_in_place(QuantumState& state, Direction dir = Direction::Forward) const;
  void evolve_in_place(QuantumState& state, int n,
                       Direction dir = Direction::Forward) const;

  const KickedRotatorParams& params() const { return params_; }

  // Validation hooks for the oracle suite; not for production use.
  void perturb_kinetic_phase(double delta);      // kinetic[1] *= exp(i*delta)
  void scale_global_phase(Complex unit_factor);  // U -> unit_factor * U

 private:
  KickedRotatorParams params_;
  std::shared_ptr<const FloquetPhases> phases_;
  mutable ComplexVector scratch_;
};

// Dense oracle built verbatim from the position-space kernel; N <= 4096.
ComplexMatrix dense_floquet(const KickedRotatorParams& params);

// Convenience wrappers (construct a propagator per call).
QuantumState floquet_step(const QuantumState& state,
                          const KickedRotatorParams& params,
                          Direction dir = Direction::Forward);
QuantumState evolve(const QuantumState& state, const KickedRotatorParams& params,
                    int n, Direction dir = Direction::Forward);

}  // namespace decho
