// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "relaycov/params.hpp"

namespace relaycov {

struct GainEntry {
  double gain;         // dimensionless linear power gain, > 0
  double probability;  // in [0, 1]
};

/// Discrete PMF over directional gain values. Canonical form: entries sorted
/// by descending gain, equal gains merged, probabilities summing to 1 within
/// 1e-12 (degenerate single-antenna patterns collapse to a point mass).
class GainDistribution {
 public:
  static GainDistribution from_entries(std::vector<GainEntry> entries);

  std::span<const GainEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const GainEntry& operator[](std::size_t i) const { return entries_[i]; }

 private:
  explicit GainDistribution(std::vector<GainEntry> entries) : entries_(std::move(entries)) {}
  std::vector<GainEntry> entries_;
};

/// Fraction of the circle covered by the main lobe of an n-element uniform
/// linear array under the sectored pattern model (beamwidth 102deg / n).
double main_lobe_fraction(int antennas);

/// Gain of a randomly oriented BS as seen by a receiver: main lobe gain N_b
/// with the main-lobe probability, side lobe gain 1/N_b otherwise.
GainDistribution bs_gain_pmf(const NetworkParams& params);

/// Gain of a randomly oriented relay/uplink UE: N_u or 1/N_u.
GainDistribution ue_gain_pmf(const NetworkParams& params);

/// Joint BS x UE gain for the BS->relay link: product PMF over the four
/// main/side lobe combinations.
GainDistribution joint_gain_pmf(const NetworkParams& params);

}  // namespace relaycov
