// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "relaycov/errors.hpp"

namespace relaycov {
namespace {

// Acklam's rational approximation of the standard normal quantile.
double probit_estimate(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log1p(-p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double probit(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError(ValidationError::Kind::ProbabilityOutOfRange, "p",
                          "probit argument must lie in (0, 1), got " + std::to_string(p));
  }
  double x = probit_estimate(p);
  // One Halley step against the exact CDF via erfc.
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u = e * std::numbers::sqrt2 * std::sqrt(std::numbers::pi) *
                   std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

ConfidenceInterval binomial_confidence_interval(std::uint64_t successes, std::uint64_t trials,
                                                double confidence_level) {
  if (trials == 0 || !(confidence_level > 0.0 && confidence_level < 1.0)) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "confidence_level",
                          "need trials >= 1 and confidence level in (0, 1)");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z = probit(0.5 + 0.5 * confidence_level);
  double low = 0.0;
  double high = 0.0;
  if (p * (1.0 - p) * n < 25.0) {
    // Wilson score interval; behaves near the 0/1 boundary
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    low = center - half;
    high = center + half;
  } else {
    const double half = z * std::sqrt(p * (1.0 - p) / n);
    low = p - half;
    high = p + half;
  }
  return {std::clamp(low, 0.0, 1.0), std::clamp(high, 0.0, 1.0)};
}

}  // namespace relaycov
