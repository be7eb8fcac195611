// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "relaycov/rng.hpp"

namespace relaycov {

/// alpha = m * (m!)^(-1/m); the rate constant of the tight lower bound
/// (1 - e^(-alpha x))^m on the CDF of a unit-mean Gamma(m, 1/m) variable.
/// Computed through lgamma so large shapes do not overflow.
double nakagami_alpha(int shape);

/// Nakagami-m power fading descriptor (integer shape).
struct NakagamiFading {
  int shape;
  double alpha;

  static NakagamiFading from_shape(int m) { return {m, nakagami_alpha(m)}; }
};

/// Exact CDF of Gamma(m, 1/m) at x (unit mean, integer shape):
/// 1 - e^(-mx) * sum_{w=0}^{m-1} (mx)^w / w!.
double gamma_unit_mean_cdf(int shape, double x);

/// The lower bound (1 - e^(-alpha x))^m on the CDF above.
double gamma_cdf_lower_bound(int shape, double x);

/// Draws a unit-mean Gamma(m, 1/m) power fading sample. Exact for integer
/// shape: mean of m independent unit exponentials.
double sample_gamma_fading(int shape, SplitMix64& rng);

/// Draws from the bound distribution F(x) = (1 - e^(-alpha x))^m by CDF
/// inversion. Used to cross-validate the closed forms, which replace the
/// desired-signal fading CDF with this bound.
double sample_bound_fading(int shape, double alpha, SplitMix64& rng);

}  // namespace relaycov
