#include <cmath>
#include <doctest.h>

#include "decho/theory.hpp"

using namespace decho;

namespace {

// Independent series oracle for J1, truncated at machine precision.
double j1_series_oracle(double z) {
  double term = 0.5 * z;
  double sum = term;
  for (int k = 1; k < 300; ++k) {
    term *= -0.25 * z * z / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-19 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("lyapunov rate") {
  CHECK(lyapunov_rate(2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(lyapunov_rate(10.09) == doctest::Approx(std::log(5.045)).epsilon(1e-12));
  CHECK(lyapunov_rate(10.09) == doctest::Approx(1.6185).epsilon(1e-4));
  CHECK(lyapunov_rate(200.09) == doctest::Approx(4.6056).epsilon(1e-4));
  CHECK_THROWS_AS(lyapunov_rate(0.0), std::invalid_argument);
  CHECK_THROWS_AS(lyapunov_rate(-1.0), std::invalid_argument);
}

TEST_CASE("bessel J1") {
  CHECK(bessel_j1(1.0) == doctest::Approx(j1_series_oracle(1.0)).epsilon(1e-14));

  // Series vs asymptotic agree through the split and against the library.
  for (double z = 0.05; z < 40.0; z += 0.05) {
    CHECK(std::abs(bessel_j1(z) - std::cyl_bessel_j(1.0, z)) < 1e-10);
  }
  CHECK(bessel_j1(-3.0) == doctest::Approx(-bessel_j1(3.0)).epsilon(1e-15));
}

TEST_CASE("g function") {
  CHECK(g_function(1, kTwoPi) == doctest::Approx(0.0).epsilon(1e-12));

  // Small-argument limit g(z)/z^2 -> 1.
  const double z = 1e-4;
  CHECK(g_function(1, z) / (z * z) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(g_function(2, z) / (z * z) == doctest::Approx(1.0).epsilon(1e-6));

  const double j1 = j1_series_oracle(1.0);
  CHECK(g_function(2, 1.0) == doctest::Approx(4.0 * j1 * j1).epsilon(1e-12));

  CHECK_THROWS_AS(g_function(3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g_function(1, -0.5), std::invalid_argument);
}

TEST_CASE("freeze term") {
  // PL = 2pi: g vanishes.
  TheoryParams p{1024, 0.0, kTwoPi / 1024.0, 1.0, 1};
  CHECK(freeze_term(p) == doctest::Approx(0.0).epsilon(1e-12));

  // PL = pi with negligible width: 4/pi^2.
  p.P = kPi / 1024.0;
  CHECK(freeze_term(p) == doctest::Approx(4.0 / (kPi * kPi)).epsilon(1e-12));
  CHECK(freeze_term(p) == doctest::Approx(0.4053).epsilon(1e-3));

  p.P = 0.0;
  CHECK(freeze_term(p) == 1.0);

  // Even in P.
  p.sigma = 0.05;
  p.P = 0.73 * kTwoPi / 1024.0;
  TheoryParams q = p;
  q.P = -p.P;
  CHECK(freeze_term(p) == doctest::Approx(freeze_term(q)).epsilon(1e-15));
}

TEST_CASE("predicted echo") {
  TheoryParams p{16384, std::sqrt(kTwoPi / 16384.0), 0.0, 1.0, 1};

  // t = 0, P = 0, alpha = 1: raw formula gives 2; clamp caps at 1.
  CHECK(predicted_echo_raw(p, 1.1, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(predicted_echo_clamped(p, 1.1, 0.0) == 1.0);

  // Late times at PL = pi: freeze dominates 1/N.
  p.P = kPi / 16384.0;
  const double sat = predicted_echo(p, 1.1, 1e4);
  CHECK(sat == doctest::Approx(0.4053).epsilon(2e-3));

  // Integer NP/2pi at modest N: the 1/N floor wins.
  TheoryParams q{1024, std::sqrt(kTwoPi / 1024.0), kTwoPi / 1024.0, 1.0, 1};
  CHECK(predicted_echo(q, 1.1, 1e4) == doctest::Approx(1.0 / 1024.0).epsilon(1e-12));

  // Monotone non-increasing in t for alpha >= 0.
  p.P = 0.4 * kTwoPi / 16384.0;
  double prev = predicted_echo(p, 1.1, 0.0);
  for (double t = 0.25; t < 20.0; t += 0.25) {
    const double v = predicted_echo(p, 1.1, t);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("saturation prediction") {
  const double sigma16k = std::sqrt(kTwoPi / 16384.0);
  TheoryParams p{16384, sigma16k, kPi / 16384.0, 1.0, 1};
  CHECK(saturation_prediction(p) == doctest::Approx(0.4053).epsilon(2e-3));

  // PL = 4pi: sin^2 vanishes; floor.
  TheoryParams q{512, sigma16k, 2.0 * kTwoPi / 512.0, 1.0, 1};
  CHECK(saturation_prediction(q) == doctest::Approx(1.0 / 512.0).epsilon(1e-12));

  // PL = 3pi/2 and negligible width: 2/(3pi/2)^2 vs 1/N.
  TheoryParams r{100000000, 1e-9, 0.75 * kTwoPi / 1e8, 1.0, 1};
  CHECK(saturation_prediction(r) ==
        doctest::Approx(2.0 / std::pow(1.5 * kPi, 2)).epsilon(1e-9));
  CHECK(saturation_prediction(r) == doctest::Approx(0.0901).epsilon(1e-3));

  for (double u : {0.0, 0.3, 1.0, 1.7}) {
    TheoryParams s{1024, std::sqrt(kTwoPi / 1024.0), u * kTwoPi / 1024.0, 1.0, 1};
    CHECK(saturation_prediction(s) >= 1.0 / 1024.0);
  }

  TheoryParams d2 = p;
  d2.d = 2;
  CHECK_THROWS_AS(saturation_prediction(d2), std::invalid_argument);
}

TEST_CASE("y correlation prediction") {
  TheoryParams p{1024, 0.0, kTwoPi / 1024.0, 1.0, 1};
  CHECK(y_correlation_prediction(p) == doctest::Approx(0.0).epsilon(1e-12));

  p.P = kPi / 1024.0;
  CHECK(y_correlation_prediction(p) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
  CHECK(y_correlation_prediction(p) == doctest::Approx(0.6366).epsilon(1e-3));

  p.P = 0.0;
  CHECK(y_correlation_prediction(p) == 1.0);

  // Zero width: y^2 = freeze exactly.
  for (double u : {0.2, 0.5, 1.3, 1.9}) {
    TheoryParams q{4096, 0.0, u * kTwoPi / 4096.0, 1.0, 1};
    const double y = y_correlation_prediction(q);
    CHECK(y * y == doctest::Approx(freeze_term(q)).epsilon(1e-12));
  }
}
