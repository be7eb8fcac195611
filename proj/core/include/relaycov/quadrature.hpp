// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace relaycov {

/// Fixed-node Gauss-Legendre settings for the nested coverage integrals.
/// Fixed nodes keep every reported probability deterministic; correctness is
/// checked by node doubling rather than adaptivity.
struct QuadratureConfig {
  int outer_nodes = 128;  // association-distance integral
  int inner_nodes = 128;  // interference integral, re-evaluated per outer node
  double abs_tol = 1e-6;  // convergence self-check tolerance

  /// When set, every link evaluation is repeated with doubled node counts and
  /// NumericalInstability is thrown if the result moves by abs_tol or more.
  bool verify_node_doubling = false;

  void validate() const;  // node counts >= 8

  QuadratureConfig doubled() const {
    QuadratureConfig q = *this;
    q.outer_nodes *= 2;
    q.inner_nodes *= 2;
    q.verify_node_doubling = false;
    return q;
  }
};

/// Gauss-Legendre rule on (-1, 1). Nodes and weights are found by Newton
/// iteration on the Legendre recurrence; exact for polynomials of degree
/// 2n - 1.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// Integrates f over (a, b) by affine mapping of the rule.
  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      sum += weights_[i] * f(mid + half * nodes_[i]);
    }
    return half * sum;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace relaycov
