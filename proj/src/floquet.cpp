#include "decho/floquet.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

#include "src/fft_util.hpp"

namespace decho {

namespace {

void validate(const KickedRotatorParams& params) {
  if (!params.grid) throw std::invalid_argument("kicked rotator: null grid");
  // K = 0 degenerates to the free kinetic kernel, still a valid unitary.
  if (!(params.K >= 0.0) || !std::isfinite(params.K)) {
    throw std::invalid_argument("kicked rotator: K must be >= 0 and finite");
  }
}

std::shared_ptr<const FloquetPhases> build_phases(const TorusGrid& grid, double K) {
  const Index N = grid.N;
  auto ph = std::make_shared<FloquetPhases>();
  ph->kick.resize(N);
  ph->kinetic.resize(N);
  const double kick_strength = static_cast<double>(N) * K / kTwoPi;  // K / h_eff
  for (Index l = 0; l < N; ++l) {
    ph->kick[l] = std::polar(1.0, -kick_strength * std::cos(kTwoPi * l / N));
    // pi*m^2/N reduced mod 2*pi via integer arithmetic: m^2 mod 2N keeps the
    // argument small and exact (m^2 itself stays below 2^53 anyway).
    const std::int64_t m2 = (static_cast<std::int64_t>(l) * l) % (2 * N);
    ph->kinetic[l] = std::polar(1.0, -kPi * static_cast<double>(m2) / N);
  }
  ph->global = std::polar(1.0, kPi / 4.0);
  return ph;
}

}  // namespace

std::shared_ptr<const FloquetPhases> floquet_phases(const TorusGrid& grid,
                                                    double K) {
  using Key = std::pair<Index, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::weak_ptr<const FloquetPhases>> cache;

  const Key key{grid.N, std::bit_cast<std::uint64_t>(K)};
  std::lock_guard lock(mutex);
  if (auto hit = cache[key].lock()) return hit;
  auto ph = build_phases(grid, K);
  cache[key] = ph;
  return ph;
}

FloquetPropagator::FloquetPropagator(KickedRotatorParams params)
    : params_(std::move(params)) {
  validate(params_);
  phases_ = floquet_phases(*params_.grid, params_.K);
}

void FloquetPropagator::apply(ComplexVector& amp, Direction dir) const {
  const FloquetPhases& ph = *phases_;
  if (amp.size() != ph.kick.size()) {
    throw std::invalid_argument("floquet step: state size mismatch");
  }
  auto& fft = tls_fft();
  if (dir == Direction::Forward) {
    amp.array() *= ph.kick.array();
    fft.fwd(scratch_, amp);
    scratch_.array() *= ph.kinetic.array();
    fft.inv(amp, scratch_);
    amp *= ph.global;
  } else {
    fft.fwd(scratch_, amp);
    scratch_.array() *= ph.kinetic.conjugate().array();
    fft.inv(amp, scratch_);
    amp.array() *= ph.kick.conjugate().array();
    amp *= std::conj(ph.global);
  }
}

void FloquetPropagator::step_in_place(QuantumState& state, Direction dir) const {
  apply(state.amp, dir);
}

void FloquetPropagator::evolve_in_place(QuantumState& state, int n,
                                        Direction dir) const {
  if (n < 0) throw std::invalid_argument("evolve: n must be >= 0");
  for (int i = 0; i < n; ++i) apply(state.amp, dir);
}

void FloquetPropagator::perturb_kinetic_phase(double delta) {
  auto copy = std::make_shared<FloquetPhases>(*phases_);
  if (copy->kinetic.size() > 1) copy->kinetic[1] *= std::polar(1.0, delta);
  phases_ = std::move(copy);
}

void FloquetPropagator::scale_global_phase(Complex unit_factor) {
  auto copy = std::make_shared<FloquetPhases>(*phases_);
  copy->global *= unit_factor;
  phases_ = std::move(copy);
}

ComplexMatrix dense_floquet(const KickedRotatorParams& params) {
  validate(params);
  const Index N = params.grid->N;
  if (N > 4096) {
    throw std::invalid_argument(
        "dense_floquet: oracle limited to N <= 4096 (use the fast path)");
  }
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(N));
  const double kick_strength = static_cast<double>(N) * params.K / kTwoPi;

  ComplexMatrix U(N, N);
  for (Index lp = 0; lp < N; ++lp) {
    const Complex kick =
        std::polar(inv_sqrt_n, -kick_strength * std::cos(kTwoPi * lp / N));
    for (Index l = 0; l < N; ++l) {
      const double diff = static_cast<double>(l - lp);
      U(l, lp) = std::polar(1.0, kPi * diff * diff / N) * kick;
    }
  }
  return U;
}

QuantumState floquet_step(const QuantumState& state,
                          const KickedRotatorParams& params, Direction dir) {
  FloquetPropagator prop(params);
  QuantumState out = state;
  prop.step_in_place(out, dir);
  return out;
}

QuantumState evolve(const QuantumState& state, const KickedRotatorParams& params,
                    int n, Direction dir) {
  FloquetPropagator prop(params);
  QuantumState out = state;
  prop.evolve_in_place(out, n, dir);
  return out;
}

}  // namespace decho
