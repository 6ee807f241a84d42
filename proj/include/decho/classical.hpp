#pragma once

#include <cstdint>

#include "decho/types.hpp"

namespace decho {

// Classical kicked rotator (standard map), both coordinates on [0, 2*pi):
//   p' = p + K sin(x)  (mod 2*pi)
//   x' = x + p'        (mod 2*pi)
// Area preserving; the sign convention makes the tangent-map stretching ~ K
// at large K, so the Lyapunov exponent approaches ln(K/2).
struct PhasePoint {
  double x = 0.0;
  double p = 0.0;
};

PhasePoint standard_map_step(const PhasePoint& pt, double K);
PhasePoint standard_map_inverse(const PhasePoint& pt, double K);

struct LyapunovEstimate {
  double value = 0.0;
  double std_error = 0.0;  // from block averages
};

// Benettin estimator: iterate the tangent map along one orbit, renormalize
// the tangent vector every step and average the log stretch factors after
// discarding n_transient steps.  Error bar from 100 block means.
LyapunovEstimate benettin_lyapunov(double K, long n_steps,
                                   long n_transient = 1000,
                                   std::uint64_t seed = 0);

}  // namespace decho
