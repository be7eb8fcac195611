// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "relaycov/errors.hpp"
#include "relaycov/quadrature.hpp"

using namespace relaycov;

TEST_CASE("Gauss-Legendre weights sum to the interval measure") {
  for (int n : {8, 17, 64, 128, 256}) {
    const GaussLegendre rule(n);
    double sum = 0.0;
    for (double w : rule.weights()) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("nodes are symmetric and inside the interval") {
  const GaussLegendre rule(33);
  const auto nodes = rule.nodes();
  for (int i = 0; i < rule.size(); ++i) {
    CHECK(nodes[i] > -1.0);
    CHECK(nodes[i] < 1.0);
    CHECK(nodes[i] == doctest::Approx(-nodes[rule.size() - 1 - i]).epsilon(1e-13));
  }
}

TEST_CASE("polynomial exactness up to degree 2n-1") {
  const GaussLegendre rule(8);
  // integrate x^k over (0,1): exact value 1/(k+1), for k up to 15
  for (int k = 0; k <= 15; ++k) {
    const double got = rule.integrate([k](double x) { return std::pow(x, k); }, 0.0, 1.0);
    CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-12));
  }
}

TEST_CASE("smooth non-polynomial integrand") {
  const GaussLegendre rule(64);
  const double got = rule.integrate([](double x) { return std::exp(-x * x); }, 0.0, 2.0);
  CHECK(got == doctest::Approx(0.8820813907624215).epsilon(1e-12));  // sqrt(pi)/2 erf(2)
}

TEST_CASE("quadrature config validation") {
  QuadratureConfig q;
  CHECK_NOTHROW(q.validate());
  q.outer_nodes = 7;
  CHECK_THROWS_AS(q.validate(), ValidationError);
  q = QuadratureConfig{};
  q.inner_nodes = 4;
  CHECK_THROWS_AS(q.validate(), ValidationError);
  q = QuadratureConfig{};
  q.abs_tol = 0.0;
  CHECK_THROWS_AS(q.validate(), ValidationError);
  CHECK(QuadratureConfig{}.doubled().outer_nodes == 256);
}
