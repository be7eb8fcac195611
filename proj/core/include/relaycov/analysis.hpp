// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>

#include "relaycov/compositions.hpp"
#include "relaycov/link.hpp"
#include "relaycov/params.hpp"
#include "relaycov/quadrature.hpp"

namespace relaycov {

enum class CorrelationMode { Correlated, Uncorrelated };

/// Interference kernel of one series term: the expected per-interferer
/// Laplace factor at distance ell, mixed over the link's gain PMF,
///   v(ell) = E_G[ prod_q (1 + q delta P G ell^(-eta) / m)^(-m j_q) ].
/// delta is the term's threshold scale tau*alpha*x^eta/(P G_desired).
/// Always in (0, 1]; tends to 1 as delta -> 0 or ell -> infinity.
double v_kernel(const LinkSpec& link, const Composition& comp, double delta, double ell);

// Closed-form link coverage probabilities with antenna correlation modeled
// (shared geometry across the destination antennas; selection combining).
// tau is the SINR threshold in linear scale.
double coverage_direct_correlated(const NetworkParams& params, double tau,
                                  const QuadratureConfig& quad);
double coverage_br(const NetworkParams& params, double tau, const QuadratureConfig& quad);
double coverage_rd_correlated(const NetworkParams& params, double tau,
                              const QuadratureConfig& quad);

// Correlation-ignoring variants: 1 - (1 - P_1)^(N_u), where P_1 is the link
// coverage of the single-antenna-UE parameterization.
double coverage_direct_uncorrelated(const NetworkParams& params, double tau,
                                    const QuadratureConfig& quad);
double coverage_rd_uncorrelated(const NetworkParams& params, double tau,
                                const QuadratureConfig& quad);

/// One link under either correlation mode (the BR link has no per-antenna
/// combining, so both modes coincide there).
double coverage_link(const NetworkParams& params, LinkKind kind, double tau,
                     const QuadratureConfig& quad, CorrelationMode mode);

/// End-to-end coverage of the half-duplex decode-and-forward protocol:
/// the direct link succeeds, or both hops of the relay mode do.
/// Equals P_bd + (1 - P_bd) * P_br * P_rd, hence never below the direct-only
/// coverage.
double coverage_total(const NetworkParams& params, double tau, const QuadratureConfig& quad,
                      CorrelationMode mode);

/// Smallest UE antenna count whose total coverage exceeds target_xi, scanning
/// 1..cap. Antenna count changes both the combining order and the UE array
/// gains. Returns nullopt when the cap is reached without success.
std::optional<int> min_antennas(const NetworkParams& params, double tau, double target_xi,
                                CorrelationMode mode, const QuadratureConfig& quad,
                                int cap = kMaxUeAntennas);

struct DensityOptimum {
  double density;   // effective LoS BS density at the grid argmax
  double coverage;  // total coverage there
};

/// Grid argmax of total correlated coverage over effective LoS BS densities;
/// the interfering-UE density scales along (both derive from the raw BS
/// density). Ties break toward the smaller density.
DensityOptimum optimal_bs_density(const NetworkParams& params, double tau,
                                  std::span<const double> density_grid,
                                  const QuadratureConfig& quad);

}  // namespace relaycov
