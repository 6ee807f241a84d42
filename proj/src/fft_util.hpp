#pragma once

#include <unsupported/Eigen/FFT>

namespace decho {

// One FFT engine per thread; kissfft plans are cached per size inside it.
// Eigen's convention: fwd is the unscaled sum_l e^{-i 2pi m l/N}, inv applies
// the 1/N factor, so fwd followed by inv is the identity.
inline Eigen::FFT<double>& tls_fft() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace decho
