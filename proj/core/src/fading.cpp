// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/fading.hpp"

#include <cmath>
#include <string>

#include "relaycov/errors.hpp"

namespace relaycov {

double nakagami_alpha(int shape) {
  if (shape < 1) {
    throw ValidationError(ValidationError::Kind::NonIntegerShape, "shape",
                          "Nakagami shape must be a positive integer, got " +
                              std::to_string(shape));
  }
  const double m = static_cast<double>(shape);
  return m * std::exp(-std::lgamma(m + 1.0) / m);
}

double gamma_unit_mean_cdf(int shape, double x) {
  if (x <= 0.0) return 0.0;
  const double mx = static_cast<double>(shape) * x;
  // 1 - e^(-mx) sum_{w<m} (mx)^w / w!
  double term = 1.0;
  double sum = 1.0;
  for (int w = 1; w < shape; ++w) {
    term *= mx / static_cast<double>(w);
    sum += term;
  }
  return -std::expm1(-mx + std::log(sum));
}

double gamma_cdf_lower_bound(int shape, double x) {
  if (x <= 0.0) return 0.0;
  const double base = -std::expm1(-nakagami_alpha(shape) * x);
  return std::pow(base, static_cast<double>(shape));
}

double sample_gamma_fading(int shape, SplitMix64& rng) {
  double sum = 0.0;
  for (int i = 0; i < shape; ++i) sum += sample_exponential(rng);
  return sum / static_cast<double>(shape);
}

double sample_bound_fading(int shape, double alpha, SplitMix64& rng) {
  // Invert F(x) = (1 - e^(-alpha x))^m.
  const double u = uniform01(rng);
  const double root = std::pow(u, 1.0 / static_cast<double>(shape));
  return -std::log1p(-root) / alpha;
}

}  // namespace relaycov
