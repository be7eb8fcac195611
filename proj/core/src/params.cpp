// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/params.hpp"

#include <string>

#include "relaycov/errors.hpp"
#include "relaycov/units.hpp"

namespace relaycov {
namespace {

void require_positive(double value, const char* field) {
  if (!(value > 0.0)) {
    throw ValidationError(ValidationError::Kind::NonPositive, field,
                          std::string(field) + " must be strictly positive, got " +
                              std::to_string(value));
  }
}

void require_probability(double value, const char* field) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw ValidationError(ValidationError::Kind::ProbabilityOutOfRange, field,
                          std::string(field) + " must lie in [0, 1], got " +
                              std::to_string(value));
  }
}

void require_shape(int value, const char* field, int cap) {
  if (value < 1) {
    throw ValidationError(ValidationError::Kind::NonIntegerShape, field,
                          std::string(field) + " must be a positive integer, got " +
                              std::to_string(value));
  }
  if (value > cap) {
    throw ValidationError(ValidationError::Kind::OutOfRange, field,
                          std::string(field) + " must not exceed " + std::to_string(cap) +
                              ", got " + std::to_string(value));
  }
}

}  // namespace

NetworkParams validate(const NetworkParams& params) {
  require_positive(params.raw_bs_density, "raw_bs_density");
  require_positive(params.raw_relay_density, "raw_relay_density");
  require_positive(params.raw_dest_density, "raw_dest_density");
  require_probability(params.bs_los_prob, "bs_los_prob");
  require_probability(params.ue_los_prob, "ue_los_prob");
  require_positive(params.bs_los_radius, "bs_los_radius");
  require_positive(params.ue_los_radius, "ue_los_radius");
  require_positive(params.bs_power, "bs_power");
  require_positive(params.ue_power, "ue_power");
  // Zero noise is allowed: it selects the interference-limited regime.
  if (params.noise_power < 0.0) {
    throw ValidationError(ValidationError::Kind::NonPositive, "noise_power",
                          "noise_power must be nonnegative, got " +
                              std::to_string(params.noise_power));
  }
  if (params.bs_antennas < 1) {
    throw ValidationError(ValidationError::Kind::NonPositive, "bs_antennas",
                          "bs_antennas must be at least 1");
  }
  require_shape(params.ue_antennas, "ue_antennas", kMaxUeAntennas);
  if (!(params.pathloss_exp >= 2.0)) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "pathloss_exp",
                          "pathloss_exp must be at least 2, got " +
                              std::to_string(params.pathloss_exp));
  }
  require_shape(params.m_bd, "m_bd", kMaxFadingShape);
  require_shape(params.m_br, "m_br", kMaxFadingShape);
  require_shape(params.m_rd, "m_rd", kMaxFadingShape);
  if (params.multiplexing_factor < 0.0) {
    throw ValidationError(ValidationError::Kind::NonPositive, "multiplexing_factor",
                          "multiplexing_factor must be nonnegative, got " +
                              std::to_string(params.multiplexing_factor));
  }
  return params;
}

NetworkParams default_network_params() {
  NetworkParams p;
  // Listed densities are effective LoS densities; store the raw equivalents.
  p.bs_los_prob = 0.9;
  p.ue_los_prob = 0.63;
  p.raw_bs_density = 2e-4 / p.bs_los_prob;
  p.raw_relay_density = 2e-3 / p.ue_los_prob;
  p.raw_dest_density = 1e-4;
  p.bs_los_radius = 100.0;
  p.ue_los_radius = 20.0;
  p.bs_power = db_to_linear(35.0);
  p.ue_power = db_to_linear(25.0);
  p.noise_power = db_to_linear(0.0);
  p.bs_antennas = 10;
  p.ue_antennas = 4;
  p.pathloss_exp = 2.4;
  p.m_bd = 2;
  p.m_br = 2;
  p.m_rd = 2;
  p.multiplexing_factor = 0.9;
  return p;
}

}  // namespace relaycov
