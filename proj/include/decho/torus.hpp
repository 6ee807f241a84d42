#pragma once

#include <memory>

#include "decho/types.hpp"

namespace decho {

// Discretized unit torus: N sites with positions x_l = 2*pi*l/N and momenta
// p_m = 2*pi*m/N, effective Planck constant h_eff = 2*pi/N.  N must be even;
// the split-operator kinetic factor exp(-i*pi*m^2/N) is N-periodic in m only
// for even N.
//
// Unit conventions.  Positions and widths are measured on [0, 2*pi).
// Momentum-like quantities (packet center p0, displacement P) live on the
// same [0, 2*pi) lattice as p_m and enter phases per *site*: a boost by P
// multiplies amplitude l by exp(i*P*l), i.e. exp(i*P*x_l/h_eff).  With the
// ring length counted in sites (L = N), P = m*2*pi/N shifts the momentum
// index by exactly m.
struct TorusGrid {
  Index N = 0;
  double h_eff = 0.0;  // 2*pi/N
  RealVector x;        // x[l] = 2*pi*l/N
  RealVector p;        // p[m] = 2*pi*m/N
};

using GridPtr = std::shared_ptr<const TorusGrid>;

// Throws std::invalid_argument unless N is even and >= 2.
GridPtr make_grid(Index N);

// Minimal-uncertainty default width sqrt(h_eff); gives equal position and
// momentum spreads on the torus.
double default_sigma(const TorusGrid& grid);

struct CoherentParams {
  double x0 = 0.0;     // center position, any real (2*pi periodic)
  double p0 = 0.0;     // center momentum
  double sigma = 0.0;  // width; 0 < sigma <= 2*pi/8
};

// Amplitude vector in the position representation, unit norm.
struct QuantumState {
  GridPtr grid;
  ComplexVector amp;

  double norm() const { return amp.norm(); }
};

// Periodized Gaussian wavepacket centered at (x0, p0):
//   amp[l] ~ sum_{w=-3..3} exp[ i p0 (N/2pi) dw - dw^2 / (2 sigma^2) ],
// dw = wrap(x_l - x0) + 2*pi*w, normalized afterwards.  Seven images keep the
// truncation error below 1e-14 for sigma <= 2*pi/8.
QuantumState coherent_state(const GridPtr& grid, const CoherentParams& params);

// Unitary DFT pair, convention phi[m] = (1/sqrt(N)) sum_l e^{-i 2pi m l/N} amp[l].
ComplexVector to_momentum(const QuantumState& state);
QuantumState to_position(const GridPtr& grid, const ComplexVector& momentum_amp);

// Momentum boost: amp[l] *= exp(i*P*l).  Any real P is accepted.
QuantumState displace(const QuantumState& state, double P);
void displace_in_place(QuantumState& state, double P);

// Phase table exp(i*P*l), l = 0..N-1.
ComplexVector displacement_phases(const TorusGrid& grid, double P);

// sum_l conj(a[l]) b[l]; throws on dimension mismatch.
Complex inner_product(const QuantumState& a, const QuantumState& b);

// Unit-norm state with iid Gaussian components (Haar direction), generated
// from the counter RNG; used by oracle checks and tests.
QuantumState random_state(const GridPtr& grid, std::uint64_t seed);

}  // namespace decho
