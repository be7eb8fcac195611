// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "relaycov/errors.hpp"
#include "relaycov/fading.hpp"
#include "relaycov/gain.hpp"
#include "relaycov/link.hpp"
#include "relaycov/params.hpp"
#include "relaycov/quadrature.hpp"
#include "relaycov/rng.hpp"
#include "relaycov/stats.hpp"
#include "relaycov/units.hpp"

using namespace relaycov;

TEST_CASE("dB conversions") {
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(db_to_linear(35.0) == doctest::Approx(3162.2776601683795).epsilon(1e-12));
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(linear_to_db(db_to_linear(-3.7)) == doctest::Approx(-3.7).epsilon(1e-12));
}

TEST_CASE("default parameters validate and derive the listed densities") {
  const NetworkParams p = validate(default_network_params());
  CHECK(p.los_bs_density() == doctest::Approx(2e-4).epsilon(1e-14));
  CHECK(p.los_relay_density() == doctest::Approx(2e-3).epsilon(1e-14));
  // interfering-UE density: ue_los_prob * multiplexing * raw_bs_density
  CHECK(p.interfering_ue_density() == doctest::Approx(1.26e-4).epsilon(1e-12));
  CHECK(p.nonempty_prob_bs() == doctest::Approx(0.9981325572682920).epsilon(1e-13));
  CHECK(p.nonempty_prob_relay() == doctest::Approx(0.9189974078420569).epsilon(1e-13));
}

TEST_CASE("validation rejects out-of-contract fields") {
  NetworkParams p = default_network_params();

  SUBCASE("probability above one") {
    p.bs_los_prob = 1.2;
    CHECK_THROWS_AS(validate(p), ValidationError);
    try {
      validate(p);
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationError::Kind::ProbabilityOutOfRange);
      CHECK(e.field() == "bs_los_prob");
    }
  }
  SUBCASE("zero fading shape") {
    p.m_bd = 0;
    CHECK_THROWS_AS(validate(p), ValidationError);
    try {
      validate(p);
    } catch (const ValidationError& e) {
      CHECK(e.kind() == ValidationError::Kind::NonIntegerShape);
      CHECK(e.field() == "m_bd");
    }
  }
  SUBCASE("nonpositive density") {
    p.raw_bs_density = 0.0;
    CHECK_THROWS_AS(validate(p), ValidationError);
  }
  SUBCASE("pathloss exponent below two") {
    p.pathloss_exp = 1.9;
    CHECK_THROWS_AS(validate(p), ValidationError);
  }
  SUBCASE("antenna cap") {
    p.ue_antennas = kMaxUeAntennas + 1;
    CHECK_THROWS_AS(validate(p), ValidationError);
  }
  SUBCASE("shape cap") {
    p.m_rd = kMaxFadingShape + 1;
    CHECK_THROWS_AS(validate(p), ValidationError);
  }
  SUBCASE("zero noise is the interference-limited regime, allowed") {
    p.noise_power = 0.0;
    CHECK_NOTHROW(validate(p));
  }
}

TEST_CASE("BS gain PMF") {
  NetworkParams p = default_network_params();  // N_b = 10
  const GainDistribution pmf = bs_gain_pmf(p);
  REQUIRE(pmf.size() == 2);
  CHECK(pmf[0].gain == doctest::Approx(10.0));
  CHECK(pmf[0].probability == doctest::Approx(102.0 / 3600.0).epsilon(1e-14));
  CHECK(pmf[1].gain == doctest::Approx(0.1));
  double sum = 0.0;
  for (const GainEntry& e : pmf.entries()) sum += e.probability;
  CHECK(std::abs(sum - 1.0) < 1e-12);

  p.bs_antennas = 1;  // degenerate pattern collapses to a point mass
  const GainDistribution point = bs_gain_pmf(p);
  REQUIRE(point.size() == 1);
  CHECK(point[0].gain == doctest::Approx(1.0));
  CHECK(point[0].probability == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("UE gain PMF") {
  NetworkParams p = default_network_params();  // N_u = 4
  const GainDistribution pmf = ue_gain_pmf(p);
  REQUIRE(pmf.size() == 2);
  CHECK(pmf[0].gain == doctest::Approx(4.0));
  CHECK(pmf[0].probability == doctest::Approx(102.0 / 1440.0).epsilon(1e-14));

  p.ue_antennas = 1;
  CHECK(ue_gain_pmf(p).size() == 1);
}

TEST_CASE("joint gain PMF is the product measure") {
  NetworkParams p = default_network_params();  // 10 x 4
  const GainDistribution pmf = joint_gain_pmf(p);
  REQUIRE(pmf.size() == 4);
  CHECK(pmf[0].gain == doctest::Approx(40.0));
  CHECK(pmf[0].probability == doctest::Approx(0.0020069444444444444).epsilon(1e-12));
  double sum = 0.0;
  for (const GainEntry& e : pmf.entries()) sum += e.probability;
  CHECK(std::abs(sum - 1.0) < 1e-12);

  p.bs_antennas = 1;
  p.ue_antennas = 1;
  const GainDistribution point = joint_gain_pmf(p);
  REQUIRE(point.size() == 1);
  CHECK(point[0].gain == doctest::Approx(1.0));
}

TEST_CASE("gain distribution invariants are enforced") {
  CHECK_THROWS_AS(GainDistribution::from_entries({{1.0, 0.5}, {2.0, 0.6}}), ValidationError);
  CHECK_THROWS_AS(GainDistribution::from_entries({{-1.0, 0.5}, {2.0, 0.5}}), ValidationError);
}

TEST_CASE("link specs carry the model constants") {
  const NetworkParams p = validate(default_network_params());
  const LinkSpec direct = make_link_spec(p, LinkKind::Direct);
  CHECK(direct.exclusion == InterfererExclusion::BeyondAssociated);
  CHECK(direct.desired_gain == doctest::Approx(10.0));
  CHECK(direct.interferer_density == doctest::Approx(2e-4));

  const LinkSpec br = make_link_spec(p, LinkKind::BR);
  CHECK(br.exclusion == InterfererExclusion::BeyondAssociated);
  CHECK(br.desired_gain == doctest::Approx(40.0));
  CHECK(br.interference_gains.size() == 4);

  const LinkSpec rd = make_link_spec(p, LinkKind::RD);
  CHECK(rd.exclusion == InterfererExclusion::WholeBall);
  CHECK(rd.desired_gain == doctest::Approx(4.0));
  CHECK(rd.assoc_density == doctest::Approx(2e-3));
  CHECK(rd.interferer_density == doctest::Approx(1.26e-4));
  CHECK(rd.tx_power == doctest::Approx(db_to_linear(25.0)));
}

TEST_CASE("association distance PDF normalizes over its support") {
  const NetworkParams p = validate(default_network_params());
  const GaussLegendre rule(256);
  for (LinkKind kind : {LinkKind::Direct, LinkKind::RD}) {
    const LinkSpec link = make_link_spec(p, kind);
    const double integral = rule.integrate(
        [&](double x) { return association_distance_pdf(link, x); }, 1e-9,
        link.ball_radius - 1e-9);
    CHECK(std::abs(integral - 1.0) < 1e-8);
  }
  // a second (lambda, radius) pair
  NetworkParams q = default_network_params();
  q.raw_relay_density = 5e-4 / q.ue_los_prob;
  q.ue_los_radius = 35.0;
  const LinkSpec link = make_link_spec(validate(q), LinkKind::RD);
  const double integral = rule.integrate(
      [&](double x) { return association_distance_pdf(link, x); }, 1e-9, 35.0 - 1e-9);
  CHECK(std::abs(integral - 1.0) < 1e-8);
}

TEST_CASE("association distance PDF support errors") {
  const LinkSpec link = make_link_spec(validate(default_network_params()), LinkKind::Direct);
  CHECK_THROWS_AS(association_distance_pdf(link, -1.0), OutOfSupport);
  CHECK_THROWS_AS(association_distance_pdf(link, 0.0), OutOfSupport);
  CHECK_THROWS_AS(association_distance_pdf(link, 100.0), OutOfSupport);
  CHECK_NOTHROW(association_distance_pdf(link, 50.0));
}

TEST_CASE("nakagami alpha closed forms") {
  CHECK(nakagami_alpha(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(nakagami_alpha(2) == doctest::Approx(1.4142135623730951).epsilon(1e-14));
  CHECK(nakagami_alpha(3) == doctest::Approx(1.6509636244473133).epsilon(1e-14));
  CHECK(nakagami_alpha(4) == doctest::Approx(1.8072040072196897).epsilon(1e-14));
  CHECK_THROWS_AS(nakagami_alpha(0), ValidationError);
}

TEST_CASE("CDF bound sits below the exact Gamma CDF") {
  for (int m = 1; m <= 4; ++m) {
    for (double x = 0.01; x <= 10.0; x += 0.01) {
      const double exact = gamma_unit_mean_cdf(m, x);
      const double bound = gamma_cdf_lower_bound(m, x);
      CHECK(bound <= exact + 1e-15);
    }
  }
  // m = 1 makes the bound exact
  for (double x : {0.1, 0.5, 1.0, 3.0}) {
    CHECK(gamma_cdf_lower_bound(1, x) == doctest::Approx(gamma_unit_mean_cdf(1, x)).epsilon(1e-12));
  }
}

TEST_CASE("gamma fading sampler moments") {
  SplitMix64 rng = substream(42, 0);
  const int n = 1000000;
  double sum = 0.0;
  double sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = sample_gamma_fading(2, rng);
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean - 1.0) < 0.005);
  CHECK(std::abs(var - 0.5) < 0.01);
}

TEST_CASE("m=1 fading reduces to the unit exponential") {
  SplitMix64 rng = substream(43, 0);
  const int n = 1000000;
  int below_one = 0;
  for (int i = 0; i < n; ++i) {
    if (sample_gamma_fading(1, rng) <= 1.0) ++below_one;
  }
  const double cdf_at_one = static_cast<double>(below_one) / n;
  CHECK(std::abs(cdf_at_one - 0.6321205588285577) < 0.005);
}

TEST_CASE("bound-fading sampler matches its CDF") {
  SplitMix64 rng = substream(44, 0);
  const int n = 200000;
  const double alpha = nakagami_alpha(2);
  int below = 0;
  const double x0 = 0.8;
  for (int i = 0; i < n; ++i) {
    if (sample_bound_fading(2, alpha, rng) <= x0) ++below;
  }
  const double expected = gamma_cdf_lower_bound(2, x0);
  CHECK(std::abs(static_cast<double>(below) / n - expected) < 0.005);
}

TEST_CASE("poisson sampler mean, small and large regime") {
  SplitMix64 rng = substream(45, 0);
  for (double mean : {3.5, 40.0}) {
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(sample_poisson(mean, rng));
    CHECK(std::abs(sum / n - mean) < 0.05 * std::sqrt(mean));
  }
  CHECK(sample_poisson(0.0, rng) == 0);
}

TEST_CASE("substreams are reproducible and index-sensitive") {
  SplitMix64 a = substream(7, 123);
  SplitMix64 b = substream(7, 123);
  SplitMix64 c = substream(7, 124);
  CHECK(a() == b());
  CHECK(a() == b());
  SplitMix64 a2 = substream(7, 123);
  CHECK(a2() != c());
}

TEST_CASE("probit reference values") {
  CHECK(probit(0.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(probit(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-10));
  CHECK(probit(0.995) == doctest::Approx(2.5758293035489004).epsilon(1e-10));
  CHECK(probit(0.9) == doctest::Approx(1.2815515655446004).epsilon(1e-10));
  CHECK(probit(0.005) == doctest::Approx(-2.5758293035489004).epsilon(1e-10));
  CHECK_THROWS_AS(probit(0.0), ValidationError);
}

TEST_CASE("binomial confidence interval") {
  // central case: normal approximation
  const ConfidenceInterval ci = binomial_confidence_interval(500000, 1000000, 0.99);
  CHECK(ci.low == doctest::Approx(0.5 - 2.5758293 * 0.0005).epsilon(1e-6));
  CHECK(ci.high == doctest::Approx(0.5 + 2.5758293 * 0.0005).epsilon(1e-6));

  // ten times the trials narrows the interval by about sqrt(10)
  const ConfidenceInterval wide = binomial_confidence_interval(5000, 10000, 0.99);
  const ConfidenceInterval narrow = binomial_confidence_interval(50000, 100000, 0.99);
  CHECK(wide.width() / narrow.width() == doctest::Approx(std::sqrt(10.0)).epsilon(0.05));

  // boundary cases stay in [0, 1] (Wilson)
  const ConfidenceInterval zero = binomial_confidence_interval(0, 1000, 0.99);
  CHECK(zero.low == 0.0);
  CHECK(zero.high > 0.0);
  CHECK(zero.high < 0.02);
  const ConfidenceInterval one = binomial_confidence_interval(1000, 1000, 0.99);
  CHECK(one.high == 1.0);
  CHECK(one.low < 1.0);
}
