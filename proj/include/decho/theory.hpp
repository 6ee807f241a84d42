#pragma once

#include "decho/types.hpp"

namespace decho {

// Closed-form predictions for the displacement echo:
//   <M_D(t)> = exp[-(P_eff*sigma)^2/2] * (alpha*e^{-rate*t} + g(PL)/(PL)^2),
// with PL = N*P (ring length in sites), P_eff = N*P/(2*pi) the boost in units
// of h_eff, g(z) = 4 sin^2(z/2) in d=1 and 4 J1(z)^2 in d=2, and a floor at
// 1/N from the finite Hilbert space.
struct TheoryParams {
  Index N = 0;         // Hilbert dimension; ring length L = N sites
  double sigma = 0.0;  // wavepacket width (position units)
  double P = 0.0;      // displacement, same units as the experiments
  double alpha = 1.0;  // order-one prefactor of the decay term
  int d = 1;           // spatial dimension, 1 or 2
};

// ln(K/2); throws for K <= 0.
double lyapunov_rate(double K);

// First-order Bessel function: power series below z = 12, Hankel asymptotic
// expansion beyond; absolute error below 1e-11 everywhere.
double bessel_j1(double z);

// d=1: 4 sin^2(z/2); d=2: 4 J1(z)^2.  z >= 0; d=3 has no closed form here and
// is rejected.
double g_function(int d, double z);

// exp[-(P_eff*sigma)^2/2] * g(|N*P|) / (N*P)^2; the P -> 0 limit is 1.
double freeze_term(const TheoryParams& params);

// Bare two-term formula; can exceed 1 near t = 0 where alpha saturates.
double predicted_echo_raw(const TheoryParams& params, double rate, double t);

// Floored at 1/N.
double predicted_echo(const TheoryParams& params, double rate, double t);

// Clamped to [1/N, 1]; what the CLI writes for overlay curves.
double predicted_echo_clamped(const TheoryParams& params, double rate, double t);

// max(freeze_term, 1/N); d = 1 only.
double saturation_prediction(const TheoryParams& params);

// |Y(P, t->inf)| = exp[-(P_eff*sigma)^2/4] * sqrt(g(|N*P|)) / |N*P|; 1 at P=0.
double y_correlation_prediction(const TheoryParams& params);

}  // namespace decho
