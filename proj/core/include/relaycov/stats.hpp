// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace relaycov {

struct ConfidenceInterval {
  double low;
  double high;

  double width() const { return high - low; }
};

/// Inverse standard normal CDF. Acklam's rational approximation refined with
/// one Halley step against erfc; accurate to near machine precision on (0,1).
double probit(double p);

/// Two-sided binomial proportion interval at the given confidence level.
/// Normal approximation, switching to the Wilson score interval near the
/// 0/1 boundary (when p*(1-p)*n < 25); bounds clipped to [0, 1].
ConfidenceInterval binomial_confidence_interval(std::uint64_t successes, std::uint64_t trials,
                                                double confidence_level);

}  // namespace relaycov
