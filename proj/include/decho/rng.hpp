#pragma once

#include <cstdint>
#include <utility>

#include "decho/types.hpp"

namespace decho {

// Counter-based generator built on the SplitMix64 finalizer:
//   out(slot) = mix64(seed + (slot + 1) * GAMMA).
// Any slot can be evaluated independently, so substreams are trivially
// splittable.  Ensemble member k owns slots {2k, 2k+1}; its draws never
// depend on the ensemble size, which lets ensembles be enlarged without
// recomputing earlier members.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t slot) {
  return mix64(seed + (slot + 1) * 0x9E3779B97F4A7C15ULL);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit_interval(std::uint64_t r) {
  return static_cast<double>(r >> 11) * 0x1.0p-53;
}

inline double uniform_angle(std::uint64_t seed, std::uint64_t slot) {
  return kTwoPi * to_unit_interval(counter_rand(seed, slot));
}

// Wavepacket center (x0, p0) of ensemble member k, uniform on [0, 2pi)^2.
inline std::pair<double, double> member_center(std::uint64_t seed,
                                               std::uint64_t member) {
  return {uniform_angle(seed, 2 * member), uniform_angle(seed, 2 * member + 1)};
}

}  // namespace decho
