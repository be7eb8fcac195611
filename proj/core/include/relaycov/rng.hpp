// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace relaycov {

/// Counter-derived random stream (splitmix64). One independent instance per
/// Monte Carlo trial, keyed by (seed, trial index), so results do not depend
/// on how trials are scheduled across workers.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Stream for trial `index` under `seed`. The initial state is itself mixed
/// so that adjacent indices land far apart in the splitmix sequence.
SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(SplitMix64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unit-mean exponential draw.
double sample_exponential(SplitMix64& rng);

/// Poisson draw. Knuth's product method below mean 10, Hormann's PTRS
/// transformed rejection above.
std::uint64_t sample_poisson(double mean, SplitMix64& rng);

/// Distance from the disk center of a point uniform on a disk of radius r.
inline double sample_disk_radius(double r, SplitMix64& rng) {
  return r * std::sqrt(uniform01(rng));
}

}  // namespace relaycov
