// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "relaycov/compositions.hpp"
#include "relaycov/errors.hpp"

using namespace relaycov;

namespace {

// Independent oracle: the per-antenna survival polynomial in t = e^(-alpha z)
// is s(t) = sum_{j=1..m} C(m,j) (-1)^(j+1) t^j. Raising it to the kappa-th
// power by plain convolution gives the coefficient of t^omega, which must
// equal the beta-weight sum over compositions with that omega.
std::vector<double> survival_poly_power(int m, int kappa) {
  std::vector<double> s(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = 1; j <= m; ++j) {
    s[static_cast<std::size_t>(j)] = binomial(m, j) * ((j % 2 == 1) ? 1.0 : -1.0);
  }
  std::vector<double> acc{1.0};
  for (int rep = 0; rep < kappa; ++rep) {
    std::vector<double> next(acc.size() + s.size() - 1, 0.0);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        next[a + b] += acc[a] * s[b];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

TEST_CASE("composition enumeration counts and order") {
  const auto c22 = enumerate_compositions(2, 2);
  REQUIRE(c22.size() == 3);  // stars and bars: C(3,1)
  CHECK(c22[0].parts == std::vector<int>{0, 2});
  CHECK(c22[1].parts == std::vector<int>{1, 1});
  CHECK(c22[2].parts == std::vector<int>{2, 0});

  const auto c15 = enumerate_compositions(1, 5);
  REQUIRE(c15.size() == 1);
  CHECK(c15[0].parts == std::vector<int>{5});

  CHECK(enumerate_compositions(3, 2).size() == 6);  // C(4,2)

  for (const Composition& c : enumerate_compositions(4, 5)) {
    CHECK(c.kappa() == 5);
    CHECK(c.omega() >= c.kappa());
    CHECK(c.omega() <= 4 * c.kappa());
  }
}

TEST_CASE("composition blowup guard") {
  // C(kappa+m-1, m-1) over 1e6: m=8, kappa=32 gives C(39,7) ~ 1.5e7
  CHECK_THROWS_AS(enumerate_compositions(8, 32), CombinatorialBlowup);
  CHECK_NOTHROW(enumerate_compositions(8, 20));  // C(27,7) < 1e6
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(1, 1) == 1.0);
  CHECK(binomial(4, 2) == 6.0);
  CHECK(binomial(32, 16) == 601080390.0);
  CHECK(binomial(3, 5) == 0.0);
  CHECK(binomial(5, -1) == 0.0);
}

TEST_CASE("beta coefficients, small closed cases") {
  CHECK(beta_coefficient(Composition{{1}}, 1) == doctest::Approx(1.0));

  // m = 2, kappa = 1: expansion of 1-(1-t)^2 = 2t - t^2
  CHECK(beta_coefficient(Composition{{1, 0}}, 2) == doctest::Approx(2.0));
  CHECK(beta_coefficient(Composition{{0, 1}}, 2) == doctest::Approx(-1.0));

  // m = 2, kappa = 2, parts (1,1): multinomial 2, gains 2, sign (-1)^(2+3)
  CHECK(beta_coefficient(Composition{{1, 1}}, 2) == doctest::Approx(-4.0));
}

TEST_CASE("beta coefficients against the polynomial expansion oracle") {
  for (int m = 1; m <= 4; ++m) {
    for (int kappa = 1; kappa <= 6; ++kappa) {
      const std::vector<double> expected = survival_poly_power(m, kappa);
      std::map<int, double> by_omega;
      for (const Composition& comp : enumerate_compositions(m, kappa)) {
        by_omega[comp.omega()] += beta_coefficient(comp, m);
      }
      for (int w = 0; w < static_cast<int>(expected.size()); ++w) {
        const double got = by_omega.count(w) ? by_omega[w] : 0.0;
        CHECK(got == doctest::Approx(expected[static_cast<std::size_t>(w)])
                         .epsilon(1e-12)
                         .scale(std::max(1.0, std::abs(expected[static_cast<std::size_t>(w)]))));
      }
    }
  }
}
