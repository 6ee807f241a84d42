#include "decho/classical.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "decho/rng.hpp"

namespace decho {

namespace {

double wrap_two_pi(double v) {
  v = std::fmod(v, kTwoPi);
  if (v < 0.0) v += kTwoPi;
  return v;
}

}  // namespace

PhasePoint standard_map_step(const PhasePoint& pt, double K) {
  const double p_next = wrap_two_pi(pt.p + K * std::sin(pt.x));
  const double x_next = wrap_two_pi(pt.x + p_next);
  return {x_next, p_next};
}

PhasePoint standard_map_inverse(const PhasePoint& pt, double K) {
  const double x_prev = wrap_two_pi(pt.x - pt.p);
  const double p_prev = wrap_two_pi(pt.p - K * std::sin(x_prev));
  return {x_prev, p_prev};
}

LyapunovEstimate benettin_lyapunov(double K, long n_steps, long n_transient,
                                   std::uint64_t seed) {
  if (!(K > 0.0)) throw std::invalid_argument("benettin_lyapunov: K must be > 0");
  if (n_steps < 100) {
    throw std::invalid_argument("benettin_lyapunov: n_steps too small");
  }

  PhasePoint pt{uniform_angle(seed, 0), uniform_angle(seed, 1)};
  for (long i = 0; i < n_transient; ++i) pt = standard_map_step(pt, K);

  // Tangent map of one kick: dp' = K cos(x) dx + dp, dx' = dx + dp'.
  double vx = 1.0, vp = 0.0;
  constexpr int kBlocks = 100;
  const long block_len = n_steps / kBlocks;
  std::vector<double> block_sum(kBlocks, 0.0);
  long block = 0, in_block = 0;
  for (long i = 0; i < block_len * kBlocks; ++i) {
    const double c = K * std::cos(pt.x);
    const double vp_next = c * vx + vp;
    const double vx_next = vx + vp_next;
    pt = standard_map_step(pt, K);
    const double stretch = std::hypot(vx_next, vp_next);
    vx = vx_next / stretch;
    vp = vp_next / stretch;
    block_sum[block] += std::log(stretch);
    if (++in_block == block_len) {
      ++block;
      in_block = 0;
    }
  }

  double mean = 0.0;
  for (double s : block_sum) mean += s / block_len;
  mean /= kBlocks;
  double var = 0.0;
  for (double s : block_sum) {
    const double d = s / block_len - mean;
    var += d * d;
  }
  var /= (kBlocks - 1);
  return {mean, std::sqrt(var / kBlocks)};
}

}  // namespace decho
