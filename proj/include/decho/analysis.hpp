#pragma once

#include "decho/echo.hpp"
#include "decho/types.hpp"

namespace decho {

struct FitWindow {
  int n_start = 0;
  int n_end = 0;  // inclusive
};

// Log-linear decay fit over a window, optionally after subtracting a constant
// baseline (the saturation plateau), i.e. the standard exponential-plus-
// constant fit.  rate = -slope of the least-squares line through
// (n, ln(mean_MD[n] - baseline)).
struct DecayFit {
  double rate = 0.0;
  double rate_std_error = 0.0;  // max(residual-based OLS error, propagated ensemble error)
  double intercept = 0.0;       // ln-value extrapolated to n = 0
  double residual_rms = 0.0;    // RMS of ln-residuals
  FitWindow window;
  double baseline = 0.0;
  bool touches_saturation = false;  // window reaches below 5x the plateau
};

DecayFit fit_decay(const EchoSeries& series, FitWindow window,
                   double baseline = 0.0);

// Tail mean of mean_MD, used as the plateau/baseline estimate: the last
// quarter of the series, at least 3 points.
double plateau_estimate(const EchoSeries& series);

// Window [1, min(cap, last n whose baseline-subtracted value still exceeds
// the plateau)].  The cap reflects that the Lyapunov regime spans only a few
// kicks at the kicking strengths of interest.
FitWindow default_fit_window(const EchoSeries& series, double plateau,
                             int cap = 4);

// Window for the asymptotic decay rate: start two kicks after the onset
// (first n with mean_MD <= onset_threshold), `length` further points, end
// pulled back while the subtracted signal drops below the plateau.  Skipping
// the onset and its shoulder removes the displacement-dependent transient, so
// rates for different P become comparable.
FitWindow asymptotic_fit_window(const EchoSeries& series, double plateau,
                                double onset_threshold = 0.25, int skip = 2,
                                int length = 3);

// Two-pass convenience fit: plateau from the tail bounds the default window;
// the fit itself is the plain log-linear one (baseline 0).
DecayFit fit_decay_auto(const EchoSeries& series);

struct TailEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  // Slope over the window consistent with zero (3 sigma); false means the
  // series was still decaying and the estimate is suspect.
  bool decayed = true;
};

// Mean of mean_MD over the window.  Per-step errors are averaged rather than
// reduced by sqrt(window) because tail points share ensemble members and are
// strongly correlated in n.
TailEstimate tail_saturation(const EchoSeries& series, FitWindow tail_window);

}  // namespace decho
