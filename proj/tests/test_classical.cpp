#include <cmath>
#include <doctest.h>

#include "decho/classical.hpp"
#include "decho/rng.hpp"

using namespace decho;

TEST_CASE("standard map step") {
  // Free rotation at K = 0.
  const PhasePoint moved = standard_map_step({1.0, 0.5}, 0.0);
  CHECK(moved.x == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(moved.p == doctest::Approx(0.5).epsilon(1e-15));

  // (0, 0) is a fixed point for any K.
  for (double K : {0.5, 10.09, 200.09}) {
    const PhasePoint fixed = standard_map_step({0.0, 0.0}, K);
    CHECK(fixed.x == 0.0);
    CHECK(fixed.p == 0.0);
  }

  // Coordinates stay in [0, 2pi).
  PhasePoint pt{5.0, 6.0};
  for (int i = 0; i < 50; ++i) {
    pt = standard_map_step(pt, 10.09);
    CHECK(pt.x >= 0.0);
    CHECK(pt.x < kTwoPi);
    CHECK(pt.p >= 0.0);
    CHECK(pt.p < kTwoPi);
  }
}

TEST_CASE("map is area preserving (finite-difference Jacobian)") {
  const double K = 10.09;
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const PhasePoint pt{uniform_angle(55, 2 * trial),
                        uniform_angle(55, 2 * trial + 1)};
    // Central differences of the unwrapped map; sin/cos are smooth, the wrap
    // only relabels, so evaluate the raw map here.
    auto raw = [K](double x, double p) {
      const double pn = p + K * std::sin(x);
      return std::pair<double, double>{x + pn, pn};
    };
    const auto [xp_x, pp_x] = raw(pt.x + h, pt.p);
    const auto [xm_x, pm_x] = raw(pt.x - h, pt.p);
    const auto [xp_p, pp_p] = raw(pt.x, pt.p + h);
    const auto [xm_p, pm_p] = raw(pt.x, pt.p - h);
    const double dxdx = (xp_x - xm_x) / (2 * h), dxdp = (xp_p - xm_p) / (2 * h);
    const double dpdx = (pp_x - pm_x) / (2 * h), dpdp = (pp_p - pm_p) / (2 * h);
    const double det = dxdx * dpdp - dxdp * dpdx;
    CHECK(std::abs(det - 1.0) < 1e-7);
  }
}

TEST_CASE("map inverts analytically") {
  const double K = 10.09;

  // Exact local inverse at every point of a long orbit.  A full 1000-step
  // reversal is not testable at fixed precision: round-off is amplified by
  // e^{lambda} per unwound step, crossing 1e-10 after about 8 steps.
  PhasePoint pt{1.234, 4.321};
  for (int i = 0; i < 1000; ++i) {
    const PhasePoint next = standard_map_step(pt, K);
    const PhasePoint back = standard_map_inverse(next, K);
    CHECK(std::abs(back.x - pt.x) < 1e-12);
    CHECK(std::abs(back.p - pt.p) < 1e-12);
    pt = next;
  }

  // Short chain: forward 6, back 6.
  const PhasePoint start{0.6, 2.8};
  PhasePoint cursor = start;
  for (int i = 0; i < 6; ++i) cursor = standard_map_step(cursor, K);
  for (int i = 0; i < 6; ++i) cursor = standard_map_inverse(cursor, K);
  CHECK(std::abs(cursor.x - start.x) < 1e-10);
  CHECK(std::abs(cursor.p - start.p) < 1e-10);
}

TEST_CASE("Benettin estimate matches ln(K/2)") {
  const LyapunovEstimate a = benettin_lyapunov(10.09, 1000000, 1000, 1);
  CHECK(a.value == doctest::Approx(std::log(10.09 / 2.0)).epsilon(0.05));
  CHECK(a.std_error > 0.0);
  CHECK(a.std_error < 0.05);

  const LyapunovEstimate b = benettin_lyapunov(50.09, 1000000, 1000, 1);
  CHECK(b.value == doctest::Approx(std::log(50.09 / 2.0)).epsilon(0.03));

  // Chaotic regime: positive exponent.
  CHECK(benettin_lyapunov(8.0, 200000, 1000, 3).value > 0.0);

  // Seed independence within combined error bars.
  const LyapunovEstimate s1 = benettin_lyapunov(10.09, 400000, 1000, 11);
  const LyapunovEstimate s2 = benettin_lyapunov(10.09, 400000, 1000, 12);
  CHECK(std::abs(s1.value - s2.value) <
        3.0 * std::sqrt(s1.std_error * s1.std_error +
                        s2.std_error * s2.std_error));

  CHECK_THROWS_AS(benettin_lyapunov(0.0, 1000000), std::invalid_argument);
}
