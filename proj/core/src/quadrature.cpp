// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relaycov/errors.hpp"

namespace relaycov {

void QuadratureConfig::validate() const {
  if (outer_nodes < 8 || inner_nodes < 8) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "quadrature_nodes",
                          "quadrature node counts must be at least 8, got " +
                              std::to_string(outer_nodes) + "/" + std::to_string(inner_nodes));
  }
  if (!(abs_tol > 0.0)) {
    throw ValidationError(ValidationError::Kind::NonPositive, "abs_tol",
                          "quadrature abs_tol must be positive");
  }
}

GaussLegendre::GaussLegendre(int n) {
  if (n < 1) {
    throw ValidationError(ValidationError::Kind::NonPositive, "nodes",
                          "Gauss-Legendre rule needs at least one node");
  }
  nodes_.resize(n);
  weights_.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes_[i] = -x;
    weights_[i] = w;
    nodes_[n - 1 - i] = x;
    weights_[n - 1 - i] = w;
  }
}

}  // namespace relaycov
