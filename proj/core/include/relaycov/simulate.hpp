// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "relaycov/link.hpp"
#include "relaycov/params.hpp"
#include "relaycov/result.hpp"
#include "relaycov/rng.hpp"

namespace relaycov {

/// Whether the destination's antennas see one common network draw (the
/// physical situation) or independent redraws (the counterfactual behind the
/// correlation-ignoring closed forms).
enum class AntennaCorrelation { Shared, IndependentPerAntenna };

/// Law of the desired-signal fading draw. Gamma is the exact model;
/// AnalyticalBound draws from the CDF bound the closed forms substitute for
/// it, which makes simulation and analysis estimate the same quantity (used
/// for numerical cross-validation).
enum class DesiredFading { Gamma, AnalyticalBound };

struct SimConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  AntennaCorrelation correlation_mode = AntennaCorrelation::Shared;
  double confidence_level = 0.99;
  int workers = 1;
  DesiredFading desired_fading = DesiredFading::Gamma;

  void validate() const;  // trials >= 1, level in (0,1), workers >= 1
};

/// One sampled link: associated-node distance (empty processes possible),
/// interferer distances with their gain draws, and per-antenna fading for the
/// desired signal and for every (antenna, interferer) pair. Geometry and
/// gains are common across antennas; only fading varies per antenna.
struct LinkRealization {
  struct Interferer {
    double distance;
    double gain;
  };

  std::optional<double> assoc_distance;
  std::vector<Interferer> interferers;
  std::vector<double> desired_fading;     // [antenna]
  std::vector<double> interferer_fading;  // [antenna * interferers.size() + k]

  bool empty() const { return !assoc_distance.has_value(); }
};

/// One sampled network: fresh, independent geometry per link, matching the
/// product form of the end-to-end coverage expression.
struct NetworkRealization {
  LinkRealization direct;
  LinkRealization br;
  LinkRealization rd;
  int antennas = 1;
};

/// Samples all three links. Poisson counts over each disk, uniform placement,
/// nearest-point association (empty when the count is zero); every interferer
/// draws one gain from the link's PMF, shared across antennas.
NetworkRealization sample_realization(const NetworkParams& params, SplitMix64& rng);

/// SINR at one destination antenna on the direct link. Throws EmptyProcess
/// when no BS was associated.
double sinr_direct(const NetworkRealization& real, const NetworkParams& params, int antenna);

/// SINR at the relay (single beamformed output, no antenna index).
double sinr_br(const NetworkRealization& real, const NetworkParams& params);

/// SINR at one destination antenna on the relay->destination link.
double sinr_rd(const NetworkRealization& real, const NetworkParams& params, int antenna);

/// Success counts from a fixed number of trials, tallied for every threshold
/// at once (thresholds in linear scale, any order). Per-trial substreams make
/// the counts independent of the worker count.
struct CoverageTallies {
  std::uint64_t trials = 0;
  std::vector<double> taus;            // as passed in
  std::vector<std::uint64_t> direct;   // per tau
  std::vector<std::uint64_t> br;       // per tau
  std::vector<std::uint64_t> rd;       // per tau
  std::vector<std::uint64_t> total;    // per tau
};

CoverageTallies run_trials(const NetworkParams& params, std::span<const double> taus,
                           const SimConfig& sim);

/// Empirical end-to-end coverage at one threshold: covered when the direct
/// link exceeds tau at some antenna, or the BR link and the RD link (at some
/// antenna) both do. Empty processes count as that mode's failure.
CoverageResult estimate_coverage(const NetworkParams& params, double tau, const SimConfig& sim);

/// Same machinery restricted to a single link (selection combining for
/// Direct/RD, scalar for BR). Serves as the independent oracle for the
/// closed forms.
CoverageResult estimate_link_coverage(const NetworkParams& params, double tau,
                                      const SimConfig& sim, LinkKind kind);

}  // namespace relaycov
