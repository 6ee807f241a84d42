#include <cmath>
#include <doctest.h>

#include "decho/floquet.hpp"
#include "decho/torus.hpp"

using namespace decho;

TEST_CASE("dense Floquet matrix structure") {
  const auto grid = make_grid(8);

  for (double K : {0.5, 10.09}) {
    const ComplexMatrix U = dense_floquet({K, grid});
    const ComplexMatrix gram = U.adjoint() * U;
    CHECK((gram - ComplexMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
    // Both factors are pure phases.
    for (Index l = 0; l < 8; ++l) {
      for (Index lp = 0; lp < 8; ++lp) {
        CHECK(std::abs(std::abs(U(l, lp)) - 1.0 / std::sqrt(8.0)) < 1e-13);
      }
    }
  }

  // K = 0: pure kinetic kernel keeps states normalized.
  const ComplexMatrix U = dense_floquet({0.0, grid});
  ComplexVector uniform = ComplexVector::Constant(8, 1.0 / std::sqrt(8.0));
  CHECK(std::abs((U * uniform).norm() - 1.0) < 1e-12);

  const auto big = make_grid(8192);
  CHECK_THROWS_AS(dense_floquet({10.09, big}), std::invalid_argument);
}

TEST_CASE("fast split-operator step equals the dense oracle") {
  std::uint64_t seed = 100;
  for (Index N : {8, 16, 32, 64}) {
    const auto grid = make_grid(N);
    for (double K : {0.5, 10.09, 200.09}) {
      const KickedRotatorParams params{K, grid};
      const ComplexMatrix U = dense_floquet(params);
      FloquetPropagator prop(params);
      for (int trial = 0; trial < 3; ++trial) {
        const QuantumState psi = random_state(grid, seed++);
        ComplexVector fast = psi.amp;
        prop.apply(fast);
        CHECK((fast - U * psi.amp).cwiseAbs().maxCoeff() < 1e-10);

        // Adjoint against the dense adjoint as well.
        ComplexVector fast_adj = psi.amp;
        prop.apply(fast_adj, Direction::Adjoint);
        CHECK((fast_adj - U.adjoint() * psi.amp).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}

TEST_CASE("unitarity and adjoint inversion at large N") {
  const auto grid = make_grid(1024);
  const KickedRotatorParams params{10.09, grid};
  FloquetPropagator prop(params);

  QuantumState psi = random_state(grid, 8);
  prop.apply(psi.amp);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);

  const KickedRotatorParams strong{50.09, grid};
  FloquetPropagator prop_strong(strong);
  const QuantumState start = random_state(grid, 9);
  QuantumState roundtrip = start;
  prop_strong.apply(roundtrip.amp, Direction::Forward);
  prop_strong.apply(roundtrip.amp, Direction::Adjoint);
  CHECK((roundtrip.amp - start.amp).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("evolve composes steps") {
  const auto grid = make_grid(4096);
  const KickedRotatorParams params{10.09, grid};

  const QuantumState psi = random_state(grid, 21);
  const QuantumState same = evolve(psi, params, 0);
  CHECK((same.amp - psi.amp).cwiseAbs().maxCoeff() == 0.0);

  QuantumState forward = evolve(psi, params, 5, Direction::Forward);
  QuantumState back = evolve(forward, params, 5, Direction::Adjoint);
  CHECK((back.amp - psi.amp).cwiseAbs().maxCoeff() < 1e-9);

  CHECK_THROWS_AS(evolve(psi, params, -1), std::invalid_argument);
}

TEST_CASE("norm drift stays below 1e-8 over 100 steps at N = 262144") {
  const auto grid = make_grid(262144);
  FloquetPropagator prop({10.09, grid});
  QuantumState psi = coherent_state(grid, {1.0, 4.0, default_sigma(*grid)});
  for (int n = 0; n < 100; ++n) prop.apply(psi.amp);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-8);
}

TEST_CASE("phase tables are cached per (N, K)") {
  const auto grid = make_grid(512);
  const auto a = floquet_phases(*grid, 10.09);
  const auto b = floquet_phases(*grid, 10.09);
  CHECK(a.get() == b.get());
  const auto c = floquet_phases(*grid, 10.090000000000001);
  CHECK(a.get() != c.get());
}

TEST_CASE("kinetic-phase perturbation hook breaks the oracle match") {
  const auto grid = make_grid(16);
  const KickedRotatorParams params{10.09, grid};
  const ComplexMatrix U = dense_floquet(params);
  FloquetPropagator prop(params);
  prop.perturb_kinetic_phase(1e-6);
  const QuantumState psi = random_state(grid, 33);
  ComplexVector fast = psi.amp;
  prop.apply(fast);
  CHECK((fast - U * psi.amp).cwiseAbs().maxCoeff() > 1e-10);
}
