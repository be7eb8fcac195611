// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/link.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "relaycov/errors.hpp"
#include "relaycov/fading.hpp"

namespace relaycov {

std::string_view link_name(LinkKind kind) {
  switch (kind) {
    case LinkKind::Direct: return "direct";
    case LinkKind::BR: return "br";
    case LinkKind::RD: return "rd";
  }
  return "?";
}

LinkSpec make_link_spec(const NetworkParams& params, LinkKind kind) {
  const double nb = static_cast<double>(params.bs_antennas);
  const double nu = static_cast<double>(params.ue_antennas);
  switch (kind) {
    case LinkKind::Direct:
      return LinkSpec{
          .kind = kind,
          .assoc_density = params.los_bs_density(),
          .interferer_density = params.los_bs_density(),
          .ball_radius = params.bs_los_radius,
          .nonempty_prob = params.nonempty_prob_bs(),
          .fading_shape = params.m_bd,
          .fading_alpha = nakagami_alpha(params.m_bd),
          .desired_gain = nb,
          .tx_power = params.bs_power,
          .noise_power = params.noise_power,
          .pathloss_exp = params.pathloss_exp,
          .exclusion = InterfererExclusion::BeyondAssociated,
          .interference_gains = bs_gain_pmf(params),
      };
    case LinkKind::BR:
      return LinkSpec{
          .kind = kind,
          .assoc_density = params.los_bs_density(),
          .interferer_density = params.los_bs_density(),
          .ball_radius = params.bs_los_radius,
          .nonempty_prob = params.nonempty_prob_bs(),
          .fading_shape = params.m_br,
          .fading_alpha = nakagami_alpha(params.m_br),
          .desired_gain = nb * nu,
          .tx_power = params.bs_power,
          .noise_power = params.noise_power,
          .pathloss_exp = params.pathloss_exp,
          .exclusion = InterfererExclusion::BeyondAssociated,
          .interference_gains = joint_gain_pmf(params),
      };
    case LinkKind::RD:
      return LinkSpec{
          .kind = kind,
          .assoc_density = params.los_relay_density(),
          .interferer_density = params.interfering_ue_density(),
          .ball_radius = params.ue_los_radius,
          .nonempty_prob = params.nonempty_prob_relay(),
          .fading_shape = params.m_rd,
          .fading_alpha = nakagami_alpha(params.m_rd),
          .desired_gain = nu,
          .tx_power = params.ue_power,
          .noise_power = params.noise_power,
          .pathloss_exp = params.pathloss_exp,
          .exclusion = InterfererExclusion::WholeBall,
          .interference_gains = ue_gain_pmf(params),
      };
  }
  throw std::logic_error("unknown link kind");
}

double association_distance_pdf(const LinkSpec& link, double x) {
  if (!(x > 0.0 && x < link.ball_radius)) {
    throw OutOfSupport("association distance " + std::to_string(x) +
                       " outside (0, " + std::to_string(link.ball_radius) + ")");
  }
  const double lambda = link.assoc_density;
  return 2.0 * std::numbers::pi * lambda * x *
         std::exp(-std::numbers::pi * lambda * x * x) / link.nonempty_prob;
}

}  // namespace relaycov
