// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>

namespace relaycov {

/// Scalar parameters of the network model. Immutable value object once
/// validated; powers are linear mW, distances meters, densities per m^2.
///
/// Densities are stored *raw* (before line-of-sight thinning). The effective
/// LoS densities are derived in exactly one place each, below.
struct NetworkParams {
  double raw_bs_density = 0.0;     // BS process density before thinning
  double raw_relay_density = 0.0;  // relay UE process density before thinning
  double raw_dest_density = 0.0;   // destination UE density; carried but unused
                                   // by the coverage formulas

  double bs_los_prob = 0.0;  // probability a BS link inside the ball is LoS
  double ue_los_prob = 0.0;  // probability a UE link inside the ball is LoS

  double bs_los_radius = 0.0;  // radius of the BS LoS ball (m)
  double ue_los_radius = 0.0;  // radius of the UE LoS ball (m)

  double bs_power = 0.0;     // BS transmit power (mW)
  double ue_power = 0.0;     // relay/uplink UE transmit power (mW)
  double noise_power = 0.0;  // AWGN power (mW); zero means interference-limited

  int bs_antennas = 1;  // uniform linear array size at each BS
  int ue_antennas = 1;  // uniform linear array size at each UE

  double pathloss_exp = 2.0;  // path loss exponent, >= 2

  int m_bd = 1;  // Nakagami shape, BS -> destination
  int m_br = 1;  // Nakagami shape, BS -> relay
  int m_rd = 1;  // Nakagami shape, relay -> destination

  double multiplexing_factor = 0.0;  // mean co-channel interfering UEs per cell

  /// Effective LoS BS density (thinned).
  double los_bs_density() const { return bs_los_prob * raw_bs_density; }

  /// Effective LoS relay density (thinned).
  double los_relay_density() const { return ue_los_prob * raw_relay_density; }

  /// Density of co-channel interfering UEs seen by the relay->destination link.
  double interfering_ue_density() const {
    return ue_los_prob * multiplexing_factor * raw_bs_density;
  }

  /// Probability the LoS BS process inside the ball is nonempty.
  double nonempty_prob_bs() const {
    return -std::expm1(-std::numbers::pi * los_bs_density() * bs_los_radius * bs_los_radius);
  }

  /// Probability the LoS relay process inside the ball is nonempty.
  double nonempty_prob_relay() const {
    return -std::expm1(-std::numbers::pi * los_relay_density() * ue_los_radius * ue_los_radius);
  }

  // Copy-with helpers for sweeps. Each returns a modified copy; callers
  // re-validate when the new value comes from user input.
  NetworkParams with_ue_antennas(int n) const {
    NetworkParams p = *this;
    p.ue_antennas = n;
    return p;
  }
  NetworkParams with_bs_antennas(int n) const {
    NetworkParams p = *this;
    p.bs_antennas = n;
    return p;
  }
  NetworkParams with_bs_power(double mw) const {
    NetworkParams p = *this;
    p.bs_power = mw;
    return p;
  }
  /// Sets the *effective* LoS BS density, back-solving the raw density.
  NetworkParams with_los_bs_density(double effective) const {
    NetworkParams p = *this;
    p.raw_bs_density = effective / bs_los_prob;
    return p;
  }
  /// Sets the *effective* LoS relay density, back-solving the raw density.
  NetworkParams with_los_relay_density(double effective) const {
    NetworkParams p = *this;
    p.raw_relay_density = effective / ue_los_prob;
    return p;
  }
};

/// Checks every invariant and returns the parameters unchanged, or throws
/// ValidationError naming the offending field.
NetworkParams validate(const NetworkParams& params);

/// Built-in defaults: a dense urban microcell deployment (35 dBm BSs with 10
/// antennas, 25 dBm UEs with 4 antennas, 0 dBm noise, eta 2.4, Nakagami m=2,
/// 100 m / 20 m LoS balls, effective LoS densities 2e-4 and 2e-3 per m^2).
NetworkParams default_network_params();

/// Antenna count cap for the minimum-antenna search and composition series.
inline constexpr int kMaxUeAntennas = 32;

/// Nakagami shape cap; keeps composition counts tractable.
inline constexpr int kMaxFadingShape = 8;

}  // namespace relaycov
