#include "decho/echo.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "decho/rng.hpp"

namespace decho {

namespace {

Complex kernel_overlap(const ComplexVector& a, const ComplexVector& phase,
                       const ComplexVector& b) {
  return (a.conjugate().array() * phase.array() * b.array()).sum();
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.ensemble_size < 1)
    throw std::invalid_argument("ensemble_echo: ensemble_size must be >= 1");
  if (cfg.n_max < 1)
    throw std::invalid_argument("ensemble_echo: n_max must be >= 1");
  if (cfg.P_list.empty())
    throw std::invalid_argument("ensemble_echo: empty displacement list");
}

}  // namespace

StateEchoSeries echo_series(const QuantumState& psi0,
                            const KickedRotatorParams& params, double P,
                            int n_max) {
  if (n_max < 0) throw std::invalid_argument("echo_series: n_max must be >= 0");
  FloquetPropagator prop(params);
  const ComplexVector phase = displacement_phases(*params.grid, P);

  ComplexVector a = phase.cwiseProduct(psi0.amp);
  ComplexVector b = psi0.amp;

  StateEchoSeries out;
  out.I.resize(n_max + 1);
  out.MD.resize(n_max + 1);
  out.I[0] = kernel_overlap(a, phase, b);
  out.MD[0] = std::norm(out.I[0]);
  for (int n = 1; n <= n_max; ++n) {
    prop.apply(a);
    prop.apply(b);
    out.I[n] = kernel_overlap(a, phase, b);
    out.MD[n] = std::norm(out.I[n]);
  }
  return out;
}

std::vector<EchoSeries> ensemble_echo(const ExperimentConfig& config) {
  validate(config);
  const GridPtr grid = make_grid(config.N);
  const KickedRotatorParams params{config.K, grid};
  const double sigma =
      config.sigma > 0.0 ? config.sigma : default_sigma(*grid);
  const int members = config.ensemble_size;
  const int n_points = config.n_max + 1;
  const Index n_disp = static_cast<Index>(config.P_list.size());

  std::vector<ComplexVector> phases(n_disp);
  for (Index ip = 0; ip < n_disp; ++ip) {
    phases[ip] = displacement_phases(*grid, config.P_list[ip]);
  }

  // Kernel values for every (member, displacement, time); reduced serially
  // below so the result does not depend on the worker schedule.
  std::vector<Complex> kernels(static_cast<std::size_t>(members) * n_disp *
                               n_points);
  std::vector<double> centers_x0(members);

  std::atomic<int> next_member{0};
  std::mutex error_mutex;
  std::exception_ptr worker_error;

  auto worker = [&]() {
    try {
      FloquetPropagator prop(params);
      std::vector<ComplexVector> b_timeline(n_points);
      ComplexVector a;
      for (int k = next_member.fetch_add(1); k < members;
           k = next_member.fetch_add(1)) {
        const auto [x0, p0] = member_center(config.seed, k);
        centers_x0[k] = x0;
        const QuantumState psi0 =
            coherent_state(grid, CoherentParams{x0, p0, sigma});

        b_timeline[0] = psi0.amp;
        for (int n = 1; n < n_points; ++n) {
          b_timeline[n] = b_timeline[n - 1];
          prop.apply(b_timeline[n]);
        }
        for (Index ip = 0; ip < n_disp; ++ip) {
          Complex* dst =
              kernels.data() + (static_cast<std::size_t>(k) * n_disp + ip) *
                                   n_points;
          a = phases[ip].cwiseProduct(psi0.amp);
          dst[0] = kernel_overlap(a, phases[ip], b_timeline[0]);
          for (int n = 1; n < n_points; ++n) {
            prop.apply(a);
            dst[n] = kernel_overlap(a, phases[ip], b_timeline[n]);
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!worker_error) worker_error = std::current_exception();
    }
  };

  const int n_workers = std::max(1, std::min<int>(config.workers, members));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (worker_error) std::rethrow_exception(worker_error);

  std::vector<EchoSeries> result(n_disp);
  for (Index ip = 0; ip < n_disp; ++ip) {
    EchoSeries& s = result[ip];
    s.P = config.P_list[ip];
    s.np_over_2pi = s.P * static_cast<double>(config.N) / kTwoPi;
    s.ensemble_size = members;
    s.mean_MD = RealVector::Zero(n_points);
    s.stderr_MD = RealVector::Zero(n_points);
    s.mean_I = ComplexVector::Zero(n_points);
    s.mean_I_aligned = ComplexVector::Zero(n_points);

    auto kernel_at = [&](int k, int n) {
      return kernels[(static_cast<std::size_t>(k) * n_disp + ip) * n_points + n];
    };
    for (int n = 0; n < n_points; ++n) {
      for (int k = 0; k < members; ++k) {
        const Complex I = kernel_at(k, n);
        s.mean_MD[n] += std::norm(I);
        s.mean_I[n] += I;
        // Center in sites: r0 = x0 * N / (2*pi).
        const double r0 = centers_x0[k] * static_cast<double>(config.N) / kTwoPi;
        s.mean_I_aligned[n] += I * std::polar(1.0, s.P * r0);
      }
      s.mean_MD[n] /= members;
      s.mean_I[n] /= static_cast<double>(members);
      s.mean_I_aligned[n] /= static_cast<double>(members);
      if (members > 1) {
        double ss = 0.0;
        for (int k = 0; k < members; ++k) {
          const double d = std::norm(kernel_at(k, n)) - s.mean_MD[n];
          ss += d * d;
        }
        s.stderr_MD[n] = std::sqrt(ss / (members - 1)) / std::sqrt(members);
      }
    }
  }
  return result;
}

}  // namespace decho
