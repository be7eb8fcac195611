// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "relaycov/gain.hpp"
#include "relaycov/params.hpp"

namespace relaycov {

enum class LinkKind {
  Direct,  // BS -> destination UE
  BR,      // BS -> relay UE
  RD,      // relay UE -> destination UE
};

std::string_view link_name(LinkKind kind);

/// Where interferers may sit relative to the associated transmitter.
enum class InterfererExclusion {
  BeyondAssociated,  // nearest-point association pushes interferers past it
  WholeBall,         // interferers form their own process anywhere in the disk
};

/// Everything the coverage formulas and the sampler need to know about one
/// link, with all unit conversions and thinning already applied.
struct LinkSpec {
  LinkKind kind;
  double assoc_density;       // density of the association process
  double interferer_density;  // density of the interfering process
  double ball_radius;         // LoS ball radius (m)
  double nonempty_prob;       // probability the association process is nonempty
  int fading_shape;           // Nakagami m for this link
  double fading_alpha;        // m (m!)^(-1/m)
  double desired_gain;        // combined directional gain of the desired signal
  double tx_power;            // transmit power (mW)
  double noise_power;         // noise power (mW)
  double pathloss_exp;
  InterfererExclusion exclusion;
  GainDistribution interference_gains;  // per-interferer gain PMF
};

/// Builds the link description from validated parameters.
///
/// Direct: BS power, desired gain N_b, BS gain PMF interferers beyond the
/// associated BS. BR: BS power, desired gain N_b*N_u, joint gain PMF. RD: UE
/// power, desired gain N_u, UE gain PMF, interfering-UE process over the
/// whole disk (co-channel UEs may sit closer than the associated relay).
LinkSpec make_link_spec(const NetworkParams& params, LinkKind kind);

/// Conditional PDF of the associated-node distance given a nonempty process:
/// 2 pi lambda x e^(-pi lambda x^2) / Xi on (0, ball_radius). Throws
/// OutOfSupport outside the open interval.
double association_distance_pdf(const LinkSpec& link, double x);

}  // namespace relaycov
