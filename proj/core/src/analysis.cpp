// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/analysis.hpp"

#include <cassert>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "relaycov/errors.hpp"
#include "relaycov/fading.hpp"

namespace relaycov {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Tolerance for the raw series landing outside [0, 1].
constexpr double kRangeTol = 1e-4;

struct SeriesTerm {
  double weight;  // (-1)^(kappa+1) C(branches, kappa) beta(comp), fully signed
  double omega;   // total fading order; multiplies delta*sigma2 in the noise exponent
  std::vector<int> parts;
};

// Expansion of the selection-combining union over `branches` antennas. Each
// antenna's conditional coverage is an m-term exponential polynomial in the
// threshold; the kappa-fold intersections expand into weak compositions.
// The BR link is the branches=1 case of the same series.
std::vector<SeriesTerm> build_terms(int branches, int m) {
  std::vector<SeriesTerm> terms;
  for (int kappa = 1; kappa <= branches; ++kappa) {
    const double choose = binomial(branches, kappa);
    const double sign = (kappa % 2 == 1) ? 1.0 : -1.0;
    for (Composition& comp : enumerate_compositions(m, kappa)) {
      const double beta = beta_coefficient(comp, m);
      terms.push_back(
          {sign * choose * beta, static_cast<double>(comp.omega()), std::move(comp.parts)});
    }
  }
  return terms;
}

// One full evaluation of the link series at fixed node counts.
double evaluate_series(const LinkSpec& link, double tau, const QuadratureConfig& quad,
                       int branches) {
  const int m = link.fading_shape;
  const double alpha = link.fading_alpha;
  const double radius = link.ball_radius;
  const double eta = link.pathloss_exp;
  const double sigma2 = link.noise_power;
  const double lambda_assoc = link.assoc_density;
  const double lambda_intf = link.interferer_density;
  const auto gains = link.interference_gains.entries();
  const std::size_t n_gains = gains.size();

  const std::vector<SeriesTerm> terms = build_terms(branches, m);
  const GaussLegendre outer(quad.outer_nodes);
  const GaussLegendre inner(quad.inner_nodes);
  const int ni = inner.size();

  std::vector<double> term_integral(terms.size(), 0.0);

  // per-outer-node scratch
  std::vector<double> ell_weight(static_cast<std::size_t>(ni));   // w_j * ell_j
  std::vector<double> pathloss(static_cast<std::size_t>(ni));     // ell_j^(-eta)
  std::vector<double> log_tab(n_gains * static_cast<std::size_t>(m) *
                              static_cast<std::size_t>(ni));      // log(1 + q u_g(ell_j))

  for (int io = 0; io < outer.size(); ++io) {
    const double x = 0.5 * radius * (outer.nodes()[io] + 1.0);
    const double wx = 0.5 * radius * outer.weights()[io];
    const double delta =
        alpha * tau * std::pow(x, eta) / (link.tx_power * link.desired_gain);

    const double lower = (link.exclusion == InterfererExclusion::BeyondAssociated) ? x : 0.0;
    const double half = 0.5 * (radius - lower);
    for (int j = 0; j < ni; ++j) {
      const double ell = lower + half * (inner.nodes()[j] + 1.0);
      ell_weight[static_cast<std::size_t>(j)] = half * inner.weights()[j] * ell;
      pathloss[static_cast<std::size_t>(j)] = std::pow(ell, -eta);
    }
    for (std::size_t gi = 0; gi < n_gains; ++gi) {
      const double scale = delta * link.tx_power * gains[gi].gain / static_cast<double>(m);
      for (int j = 0; j < ni; ++j) {
        const double u = scale * pathloss[static_cast<std::size_t>(j)];
        for (int q = 1; q <= m; ++q) {
          log_tab[(gi * static_cast<std::size_t>(m) + static_cast<std::size_t>(q - 1)) *
                      static_cast<std::size_t>(ni) +
                  static_cast<std::size_t>(j)] = std::log1p(static_cast<double>(q) * u);
        }
      }
    }

    const double density = kTwoPi * lambda_assoc * x *
                           std::exp(-std::numbers::pi * lambda_assoc * x * x) /
                           link.nonempty_prob;

    for (std::size_t t = 0; t < terms.size(); ++t) {
      const SeriesTerm& term = terms[t];
      // J = int_lower^R ell (1 - v(ell)) d ell with the term's kernel
      double j_integral = 0.0;
      for (int j = 0; j < ni; ++j) {
        double v = 0.0;
        for (std::size_t gi = 0; gi < n_gains; ++gi) {
          double dot = 0.0;
          for (int q = 1; q <= m; ++q) {
            const int jq = term.parts[static_cast<std::size_t>(q - 1)];
            if (jq != 0) {
              dot += static_cast<double>(jq) *
                     log_tab[(gi * static_cast<std::size_t>(m) +
                              static_cast<std::size_t>(q - 1)) *
                                 static_cast<std::size_t>(ni) +
                             static_cast<std::size_t>(j)];
            }
          }
          v += gains[gi].probability * std::exp(-static_cast<double>(m) * dot);
        }
        j_integral += ell_weight[static_cast<std::size_t>(j)] * (1.0 - v);
      }
      const double exponent = -delta * sigma2 * term.omega - kTwoPi * lambda_intf * j_integral;
      term_integral[t] += wx * std::exp(exponent) * density;
    }
  }

  // Alternating series: Neumaier-compensated long double accumulation, with a
  // cancellation estimate checked against abs_tol. Inclusion-exclusion
  // partials legitimately grow with C(branches, kappa), so the guard is on
  // the achievable accuracy rather than on partial-sum magnitude.
  long double sum = 0.0L;
  long double comp = 0.0L;
  long double abs_sum = 0.0L;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const long double v = static_cast<long double>(terms[t].weight) *
                          static_cast<long double>(term_integral[t]);
    const long double s = sum + v;
    if (std::abs(static_cast<double>(sum)) >= std::abs(static_cast<double>(v))) {
      comp += (sum - s) + v;
    } else {
      comp += (v - s) + sum;
    }
    sum = s;
    abs_sum += fabsl(v);
  }
  const double cancellation = static_cast<double>(2.0L * LDBL_EPSILON * abs_sum);
  if (cancellation > quad.abs_tol) {
    throw NumericalInstability("series cancellation estimate " + std::to_string(cancellation) +
                               " exceeds abs_tol on the " + std::string(link_name(link.kind)) +
                               " link");
  }

  const double raw = link.nonempty_prob * static_cast<double>(sum + comp);
  if (raw < -kRangeTol || raw > 1.0 + kRangeTol) {
    throw NumericalInstability("raw " + std::string(link_name(link.kind)) +
                               " coverage series " + std::to_string(raw) +
                               " outside [0, 1] beyond tolerance");
  }
  return std::min(1.0, std::max(0.0, raw));
}

double evaluate_link_coverage(const LinkSpec& link, double tau, const QuadratureConfig& quad,
                              int branches) {
  quad.validate();
  if (!(tau > 0.0)) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "tau",
                          "SINR threshold must be positive (linear scale), got " +
                              std::to_string(tau));
  }
  const double base = evaluate_series(link, tau, quad, branches);
  if (quad.verify_node_doubling) {
    const double fine = evaluate_series(link, tau, quad.doubled(), branches);
    if (std::abs(fine - base) >= quad.abs_tol) {
      throw NumericalInstability("node doubling moved " + std::string(link_name(link.kind)) +
                                 " coverage by " + std::to_string(std::abs(fine - base)) +
                                 " (abs_tol " + std::to_string(quad.abs_tol) + ")");
    }
  }
  return base;
}

/// The single-antenna-UE parameterization behind the correlation-ignoring
/// forms: every per-antenna SINR is treated as one draw of a network whose
/// UEs have one antenna.
NetworkParams single_antenna_params(const NetworkParams& params) {
  return params.with_ue_antennas(1);
}

}  // namespace

double v_kernel(const LinkSpec& link, const Composition& comp, double delta, double ell) {
  const int m = link.fading_shape;
  const double pathloss = std::pow(ell, -link.pathloss_exp);
  double v = 0.0;
  for (const GainEntry& e : link.interference_gains.entries()) {
    double factor = 1.0;
    for (int q = 1; q <= m; ++q) {
      const int jq = comp.parts[static_cast<std::size_t>(q - 1)];
      if (jq != 0) {
        const double base =
            1.0 + static_cast<double>(q) * delta * link.tx_power * e.gain * pathloss /
                      static_cast<double>(m);
        factor *= std::pow(base, static_cast<double>(-m * jq));
      }
    }
    v += e.probability * factor;
  }
  return v;
}

double coverage_direct_correlated(const NetworkParams& params, double tau,
                                  const QuadratureConfig& quad) {
  return evaluate_link_coverage(make_link_spec(params, LinkKind::Direct), tau, quad,
                                params.ue_antennas);
}

double coverage_br(const NetworkParams& params, double tau, const QuadratureConfig& quad) {
  // No per-antenna combining at the relay: the m-term fading expansion is the
  // branches=1 case of the same series, over the joint gain PMF.
  return evaluate_link_coverage(make_link_spec(params, LinkKind::BR), tau, quad, 1);
}

double coverage_rd_correlated(const NetworkParams& params, double tau,
                              const QuadratureConfig& quad) {
  return evaluate_link_coverage(make_link_spec(params, LinkKind::RD), tau, quad,
                                params.ue_antennas);
}

double coverage_direct_uncorrelated(const NetworkParams& params, double tau,
                                    const QuadratureConfig& quad) {
  const double p1 = coverage_direct_correlated(single_antenna_params(params), tau, quad);
  return -std::expm1(static_cast<double>(params.ue_antennas) * std::log1p(-p1));
}

double coverage_rd_uncorrelated(const NetworkParams& params, double tau,
                                const QuadratureConfig& quad) {
  const double p1 = coverage_rd_correlated(single_antenna_params(params), tau, quad);
  return -std::expm1(static_cast<double>(params.ue_antennas) * std::log1p(-p1));
}

double coverage_link(const NetworkParams& params, LinkKind kind, double tau,
                     const QuadratureConfig& quad, CorrelationMode mode) {
  switch (kind) {
    case LinkKind::Direct:
      return mode == CorrelationMode::Correlated ? coverage_direct_correlated(params, tau, quad)
                                                 : coverage_direct_uncorrelated(params, tau, quad);
    case LinkKind::BR:
      return coverage_br(params, tau, quad);
    case LinkKind::RD:
      return mode == CorrelationMode::Correlated ? coverage_rd_correlated(params, tau, quad)
                                                 : coverage_rd_uncorrelated(params, tau, quad);
  }
  throw std::logic_error("unknown link kind");
}

double coverage_total(const NetworkParams& params, double tau, const QuadratureConfig& quad,
                      CorrelationMode mode) {
  const double bd = coverage_link(params, LinkKind::Direct, tau, quad, mode);
  const double br = coverage_br(params, tau, quad);
  const double rd = coverage_link(params, LinkKind::RD, tau, quad, mode);
  // Written so the relay term can only add coverage on top of the direct mode.
  const double total = bd + (1.0 - bd) * br * rd;
  assert(total >= bd);
  return total;
}

std::optional<int> min_antennas(const NetworkParams& params, double tau, double target_xi,
                                CorrelationMode mode, const QuadratureConfig& quad, int cap) {
  if (!(target_xi > 0.0 && target_xi < 1.0)) {
    throw ValidationError(ValidationError::Kind::ProbabilityOutOfRange, "target_xi",
                          "coverage target must lie in (0, 1), got " +
                              std::to_string(target_xi));
  }
  cap = std::min(cap, kMaxUeAntennas);
  for (int n = 1; n <= cap; ++n) {
    const NetworkParams candidate = validate(params.with_ue_antennas(n));
    if (coverage_total(candidate, tau, quad, mode) > target_xi) return n;
  }
  return std::nullopt;
}

DensityOptimum optimal_bs_density(const NetworkParams& params, double tau,
                                  std::span<const double> density_grid,
                                  const QuadratureConfig& quad) {
  if (density_grid.empty()) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "density_grid",
                          "density grid must be nonempty");
  }
  for (std::size_t i = 1; i < density_grid.size(); ++i) {
    if (!(density_grid[i] > density_grid[i - 1])) {
      throw ValidationError(ValidationError::Kind::OutOfRange, "density_grid",
                            "density grid must be strictly ascending");
    }
  }
  DensityOptimum best{density_grid[0], -1.0};
  for (double density : density_grid) {
    const NetworkParams candidate = validate(params.with_los_bs_density(density));
    const double cov = coverage_total(candidate, tau, quad, CorrelationMode::Correlated);
    if (cov > best.coverage) best = {density, cov};  // ties keep the smaller density
  }
  return best;
}

}  // namespace relaycov
