// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/gain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relaycov/errors.hpp"

namespace relaycov {

GainDistribution GainDistribution::from_entries(std::vector<GainEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const GainEntry& a, const GainEntry& b) { return a.gain > b.gain; });
  std::vector<GainEntry> merged;
  for (const GainEntry& e : entries) {
    if (!(e.gain > 0.0)) {
      throw ValidationError(ValidationError::Kind::NonPositive, "gain",
                            "gain values must be strictly positive, got " +
                                std::to_string(e.gain));
    }
    if (e.probability < 0.0 || e.probability > 1.0) {
      throw ValidationError(ValidationError::Kind::ProbabilityOutOfRange, "probability",
                            "gain probability out of [0, 1]: " + std::to_string(e.probability));
    }
    if (!merged.empty() && merged.back().gain == e.gain) {
      merged.back().probability += e.probability;
    } else {
      merged.push_back(e);
    }
  }
  double sum = 0.0;
  for (const GainEntry& e : merged) sum += e.probability;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError(ValidationError::Kind::ProbabilityOutOfRange, "probability",
                          "gain probabilities must sum to 1, got " + std::to_string(sum));
  }
  return GainDistribution(std::move(merged));
}

double main_lobe_fraction(int antennas) {
  // beamwidth 102 pi / (180 n) out of the full circle
  return 102.0 / (360.0 * static_cast<double>(antennas));
}

GainDistribution bs_gain_pmf(const NetworkParams& params) {
  const double p_main = main_lobe_fraction(params.bs_antennas);
  const double n = static_cast<double>(params.bs_antennas);
  return GainDistribution::from_entries({{n, p_main}, {1.0 / n, 1.0 - p_main}});
}

GainDistribution ue_gain_pmf(const NetworkParams& params) {
  const double p_main = main_lobe_fraction(params.ue_antennas);
  const double n = static_cast<double>(params.ue_antennas);
  return GainDistribution::from_entries({{n, p_main}, {1.0 / n, 1.0 - p_main}});
}

GainDistribution joint_gain_pmf(const NetworkParams& params) {
  const double pb = main_lobe_fraction(params.bs_antennas);
  const double pu = main_lobe_fraction(params.ue_antennas);
  const double gB = static_cast<double>(params.bs_antennas);
  const double gU = static_cast<double>(params.ue_antennas);
  return GainDistribution::from_entries({
      {gB * gU, pb * pu},
      {gB / gU, pb * (1.0 - pu)},
      {gU / gB, (1.0 - pb) * pu},
      {1.0 / (gB * gU), (1.0 - pb) * (1.0 - pu)},
  });
}

}  // namespace relaycov
