// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/rng.hpp"

#include <cmath>

namespace relaycov {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Knuth's product method; draw count is mean+1 on average.
std::uint64_t poisson_small(double mean, SplitMix64& rng) {
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double prod = uniform01(rng);
  while (prod > limit) {
    ++k;
    prod *= uniform01(rng);
  }
  return k;
}

// Hormann's PTRS transformed rejection, valid for mean >= 10.
std::uint64_t poisson_ptrs(double mean, SplitMix64& rng) {
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = uniform01(rng) - 0.5;
    const double v = uniform01(rng);
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        k * loglam - mean - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

}  // namespace

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed ^ mix(index + 0x9e3779b97f4a7c15ULL)));
}

double sample_exponential(SplitMix64& rng) {
  // -log(1 - U) with U in [0, 1); log1p keeps small quantiles accurate
  return -std::log1p(-uniform01(rng));
}

std::uint64_t sample_poisson(double mean, SplitMix64& rng) {
  if (mean <= 0.0) return 0;
  return mean < 10.0 ? poisson_small(mean, rng) : poisson_ptrs(mean, rng);
}

}  // namespace relaycov
