#include "decho/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace decho {

namespace {

void check_window(const EchoSeries& series, FitWindow w) {
  if (w.n_start < 0 || w.n_end >= series.size() || w.n_start >= w.n_end) {
    throw std::invalid_argument("fit window [" + std::to_string(w.n_start) +
                                ", " + std::to_string(w.n_end) +
                                "] invalid for series of length " +
                                std::to_string(series.size()));
  }
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;            // at n = 0
  double slope_se_resid = 0.0;       // from residual scatter
  double residual_rms = 0.0;
};

LineFit least_squares_line(const std::vector<double>& n,
                           const std::vector<double>& y) {
  const int k = static_cast<int>(n.size());
  double nb = 0.0, yb = 0.0;
  for (int i = 0; i < k; ++i) {
    nb += n[i];
    yb += y[i];
  }
  nb /= k;
  yb /= k;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < k; ++i) {
    sxx += (n[i] - nb) * (n[i] - nb);
    sxy += (n[i] - nb) * (y[i] - yb);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = yb - fit.slope * nb;
  double ss = 0.0;
  for (int i = 0; i < k; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * n[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / k);
  fit.slope_se_resid = k > 2 ? std::sqrt(ss / (k - 2) / sxx) : 0.0;
  return fit;
}

}  // namespace

double plateau_estimate(const EchoSeries& series) {
  const Index len = series.size();
  const Index tail = std::max<Index>(3, len / 4);
  const Index start = std::max<Index>(0, len - tail);
  double sum = 0.0;
  for (Index n = start; n < len; ++n) sum += series.mean_MD[n];
  return sum / static_cast<double>(len - start);
}

DecayFit fit_decay(const EchoSeries& series, FitWindow window, double baseline) {
  check_window(series, window);
  const int k = window.n_end - window.n_start + 1;
  std::vector<double> ns(k), ys(k), sln(k);
  for (int i = 0; i < k; ++i) {
    const int n = window.n_start + i;
    const double v = series.mean_MD[n] - baseline;
    if (!(v > 0.0)) {
      throw std::domain_error(
          "fit_decay: mean_MD - baseline must be positive inside the window "
          "(n = " +
          std::to_string(n) + ")");
    }
    ns[i] = n;
    ys[i] = std::log(v);
    sln[i] = series.stderr_MD[n] / v;
  }
  const LineFit line = least_squares_line(ns, ys);

  DecayFit fit;
  fit.rate = -line.slope;
  fit.intercept = line.intercept;
  fit.residual_rms = line.residual_rms;
  fit.window = window;
  fit.baseline = baseline;

  // Ensemble errors propagated through the OLS slope coefficients.
  double nb = 0.0;
  for (double n : ns) nb += n;
  nb /= k;
  double sxx = 0.0;
  for (double n : ns) sxx += (n - nb) * (n - nb);
  double prop = 0.0;
  for (int i = 0; i < k; ++i) {
    const double c = (ns[i] - nb) / sxx;
    prop += c * c * sln[i] * sln[i];
  }
  fit.rate_std_error = std::max(line.slope_se_resid, std::sqrt(prop));

  const double plateau = plateau_estimate(series);
  for (int n = window.n_start; n <= window.n_end; ++n) {
    if (series.mean_MD[n] < 5.0 * plateau) fit.touches_saturation = true;
  }
  return fit;
}

FitWindow default_fit_window(const EchoSeries& series, double plateau, int cap) {
  const int last = static_cast<int>(series.size()) - 1;
  int end = 1;
  for (int n = 1; n <= std::min(cap, last); ++n) {
    if (series.mean_MD[n] - plateau >= plateau) {
      end = n;
    } else {
      break;
    }
  }
  return {1, std::max(2, end)};
}

FitWindow asymptotic_fit_window(const EchoSeries& series, double plateau,
                                double onset_threshold, int skip, int length) {
  const int last = static_cast<int>(series.size()) - 1;
  int onset = 1;
  for (int n = 1; n <= last; ++n) {
    if (series.mean_MD[n] <= onset_threshold) {
      onset = n;
      break;
    }
  }
  int start = std::min(onset + skip, last - 1);
  int end = std::min(start + length, last);
  while (end > start + 1 && series.mean_MD[end] - plateau < plateau) --end;
  return {start, end};
}

DecayFit fit_decay_auto(const EchoSeries& series) {
  // The plateau bounds the window; the fit itself is the plain log-linear
  // one.  Subtracting the plateau here would over-correct the short windows
  // that large kicking strengths leave at desk-scale N.
  const double plateau = plateau_estimate(series);
  return fit_decay(series, default_fit_window(series, plateau), 0.0);
}

TailEstimate tail_saturation(const EchoSeries& series, FitWindow tail_window) {
  check_window(series, tail_window);
  const int k = tail_window.n_end - tail_window.n_start + 1;
  std::vector<double> ns(k), ys(k);
  TailEstimate est;
  for (int i = 0; i < k; ++i) {
    const int n = tail_window.n_start + i;
    ns[i] = n;
    ys[i] = series.mean_MD[n];
    est.mean += series.mean_MD[n];
    est.std_error += series.stderr_MD[n];
  }
  est.mean /= k;
  est.std_error /= k;

  const LineFit line = least_squares_line(ns, ys);
  est.decayed = std::abs(line.slope) <=
                3.0 * line.slope_se_resid + 1e-12 * std::abs(est.mean);
  return est;
}

}  // namespace decho
