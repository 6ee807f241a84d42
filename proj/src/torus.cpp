#include "decho/torus.hpp"

#include <cmath>
#include <stdexcept>

#include "decho/rng.hpp"
#include "src/fft_util.hpp"

namespace decho {

namespace {

// Wrap to [-pi, pi).
double wrap_pm_pi(double d) {
  d = std::fmod(d, kTwoPi);
  if (d < -kPi) d += kTwoPi;
  if (d >= kPi) d -= kTwoPi;
  return d;
}

}  // namespace

GridPtr make_grid(Index N) {
  if (N < 2 || N % 2 != 0) {
    throw std::invalid_argument("make_grid: N must be even and >= 2, got " +
                                std::to_string(N));
  }
  auto grid = std::make_shared<TorusGrid>();
  grid->N = N;
  grid->h_eff = kTwoPi / static_cast<double>(N);
  grid->x = RealVector::LinSpaced(N, 0.0, kTwoPi * (N - 1) / N);
  grid->p = grid->x;
  return grid;
}

double default_sigma(const TorusGrid& grid) { return std::sqrt(grid.h_eff); }

QuantumState coherent_state(const GridPtr& grid, const CoherentParams& params) {
  if (!grid) throw std::invalid_argument("coherent_state: null grid");
  if (!(params.sigma > 0.0) || !(params.sigma <= kTwoPi / 8.0)) {
    throw std::invalid_argument(
        "coherent_state: sigma must satisfy 0 < sigma <= 2*pi/8");
  }
  if (!std::isfinite(params.x0) || !std::isfinite(params.p0)) {
    throw std::invalid_argument("coherent_state: non-finite center");
  }

  const Index N = grid->N;
  const double inv_two_sigma2 = 1.0 / (2.0 * params.sigma * params.sigma);
  const double momentum_per_theta = params.p0 * static_cast<double>(N) / kTwoPi;
  constexpr int kImages = 3;

  QuantumState state{grid, ComplexVector(N)};
  for (Index l = 0; l < N; ++l) {
    const double base = wrap_pm_pi(grid->x[l] - params.x0);
    Complex acc = 0.0;
    for (int w = -kImages; w <= kImages; ++w) {
      const double dw = base + kTwoPi * w;
      acc += std::polar(std::exp(-dw * dw * inv_two_sigma2),
                        momentum_per_theta * dw);
    }
    state.amp[l] = acc;
  }
  state.amp /= state.amp.norm();
  return state;
}

ComplexVector to_momentum(const QuantumState& state) {
  ComplexVector phi;
  tls_fft().fwd(phi, state.amp);
  phi *= 1.0 / std::sqrt(static_cast<double>(state.amp.size()));
  return phi;
}

QuantumState to_position(const GridPtr& grid, const ComplexVector& momentum_amp) {
  if (!grid || grid->N != momentum_amp.size()) {
    throw std::invalid_argument("to_position: grid/amplitude size mismatch");
  }
  QuantumState state{grid, ComplexVector()};
  tls_fft().inv(state.amp, momentum_amp);
  state.amp *= std::sqrt(static_cast<double>(momentum_amp.size()));
  return state;
}

ComplexVector displacement_phases(const TorusGrid& grid, double P) {
  ComplexVector d(grid.N);
  for (Index l = 0; l < grid.N; ++l) d[l] = std::polar(1.0, P * l);
  return d;
}

void displace_in_place(QuantumState& state, double P) {
  for (Index l = 0; l < state.amp.size(); ++l) {
    state.amp[l] *= std::polar(1.0, P * l);
  }
}

QuantumState displace(const QuantumState& state, double P) {
  QuantumState out = state;
  displace_in_place(out, P);
  return out;
}

Complex inner_product(const QuantumState& a, const QuantumState& b) {
  if (!a.grid || !b.grid || a.grid->N != b.grid->N) {
    throw std::invalid_argument("inner_product: states live on different grids");
  }
  return a.amp.dot(b.amp);
}

QuantumState random_state(const GridPtr& grid, std::uint64_t seed) {
  QuantumState state{grid, ComplexVector(grid->N)};
  for (Index l = 0; l < grid->N; ++l) {
    // Box-Muller from two counter draws per amplitude.
    const double u1 =
        1.0 - to_unit_interval(counter_rand(seed, 2 * l));  // (0, 1]
    const double u2 = to_unit_interval(counter_rand(seed, 2 * l + 1));
    const double r = std::sqrt(-2.0 * std::log(u1));
    state.amp[l] = std::polar(r, kTwoPi * u2);
  }
  state.amp /= state.amp.norm();
  return state;
}

}  // namespace decho
