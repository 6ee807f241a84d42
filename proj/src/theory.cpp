#include "decho/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace decho {

namespace {

constexpr double kSeriesAsymptoticSplit = 12.0;

double j1_power_series(double z) {
  // sum_k (-1)^k (z/2)^{2k+1} / (k! (k+1)!)
  const double half = 0.5 * z;
  double term = half;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -half * half / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double j1_hankel_asymptotic(double z) {
  // J1(z) ~ sqrt(2/(pi z)) [cos(w) P(z) - sin(w) Q(z)], w = z - 3*pi/4, with
  // a_k = prod_{j=1..k} (4 - (2j-1)^2) / (8j); even k feed P, odd k feed Q,
  // signs alternate every other term.  Truncated at the smallest term.
  double p_sum = 0.0;
  double q_sum = 0.0;
  double a = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 40; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      a *= (4.0 - odd * odd) / (8.0 * k);
    }
    const double t = a / std::pow(z, k);
    if (std::abs(t) > prev) break;
    prev = std::abs(t);
    const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p_sum += sign * t;
    } else {
      q_sum += sign * t;
    }
  }
  const double w = z - 0.75 * kPi;
  return std::sqrt(2.0 / (kPi * z)) *
         (std::cos(w) * p_sum - std::sin(w) * q_sum);
}

double freeze_argument(const TheoryParams& params) {
  // Dimensionless boost-width product: (N P / 2pi) * sigma = P*sigma/h_eff.
  return std::abs(params.P) * static_cast<double>(params.N) / kTwoPi *
         params.sigma;
}

double g_over_z2(const TheoryParams& params) {
  const double z = std::abs(params.P) * static_cast<double>(params.N);
  if (z == 0.0) return 1.0;  // g(z)/z^2 -> 1 for both d = 1 and d = 2
  return g_function(params.d, z) / (z * z);
}

void validate(const TheoryParams& params) {
  if (params.N < 1) throw std::invalid_argument("theory: N must be >= 1");
  if (!(params.sigma >= 0.0) || !std::isfinite(params.P)) {
    throw std::invalid_argument("theory: bad sigma or P");
  }
  if (params.d != 1 && params.d != 2) {
    throw std::invalid_argument(
        "theory: d must be 1 or 2 (d=3 is out of scope: no closed-form "
        "g-function is implemented)");
  }
}

}  // namespace

double lyapunov_rate(double K) {
  if (!(K > 0.0)) throw std::invalid_argument("lyapunov_rate: K must be > 0");
  return std::log(K / 2.0);
}

double bessel_j1(double z) {
  if (z < 0.0) return -bessel_j1(-z);
  return z < kSeriesAsymptoticSplit ? j1_power_series(z)
                                    : j1_hankel_asymptotic(z);
}

double g_function(int d, double z) {
  if (z < 0.0) throw std::invalid_argument("g_function: z must be >= 0");
  switch (d) {
    case 1: {
      const double s = std::sin(0.5 * z);
      return 4.0 * s * s;
    }
    case 2: {
      const double j = bessel_j1(z);
      return 4.0 * j * j;
    }
    default:
      throw std::invalid_argument(
          "g_function: d=" + std::to_string(d) +
          " is not supported (out of scope; only d=1 and d=2 have closed "
          "forms here)");
  }
}

double freeze_term(const TheoryParams& params) {
  validate(params);
  const double s = freeze_argument(params);
  return std::exp(-0.5 * s * s) * g_over_z2(params);
}

double predicted_echo_raw(const TheoryParams& params, double rate, double t) {
  validate(params);
  const double s = freeze_argument(params);
  return std::exp(-0.5 * s * s) *
         (params.alpha * std::exp(-rate * t) + g_over_z2(params));
}

double predicted_echo(const TheoryParams& params, double rate, double t) {
  return std::max(predicted_echo_raw(params, rate, t),
                  1.0 / static_cast<double>(params.N));
}

double predicted_echo_clamped(const TheoryParams& params, double rate,
                              double t) {
  return std::min(predicted_echo(params, rate, t), 1.0);
}

double saturation_prediction(const TheoryParams& params) {
  if (params.d != 1) {
    throw std::invalid_argument("saturation_prediction: defined for d = 1");
  }
  return std::max(freeze_term(params), 1.0 / static_cast<double>(params.N));
}

double y_correlation_prediction(const TheoryParams& params) {
  validate(params);
  const double z = std::abs(params.P) * static_cast<double>(params.N);
  const double s = freeze_argument(params);
  if (z == 0.0) return 1.0;
  return std::exp(-0.25 * s * s) * std::sqrt(g_function(params.d, z)) / z;
}

}  // namespace decho
