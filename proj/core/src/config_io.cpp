// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/config_io.hpp"

#include <array>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "relaycov/errors.hpp"
#include "relaycov/units.hpp"

namespace relaycov {
namespace {

constexpr std::array<std::string_view, 18> kKnownKeys = {
    "bs_power_dbm",        "ue_power_dbm",         "noise_power_dbm",
    "bs_antennas",         "ue_antennas",          "pathloss_exponent",
    "nakagami_m_bd",       "nakagami_m_br",        "nakagami_m_rd",
    "bs_los_radius_m",     "ue_los_radius_m",      "bs_los_probability",
    "ue_los_probability",  "bs_density_per_m2",    "relay_density_per_m2",
    "dest_density_per_m2", "multiplexing_factor",  "density_kind",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& value, const std::string& key) {
  std::size_t used = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || !std::isfinite(parsed)) {
    throw ValidationError(ValidationError::Kind::OutOfRange, key,
                          key + ": cannot parse '" + value + "' as a number");
  }
  return parsed;
}

int parse_positive_int(const std::string& value, const std::string& key) {
  const double parsed = parse_double(value, key);
  if (parsed != std::floor(parsed) || parsed < 1.0 || parsed > 1e9) {
    throw ValidationError(ValidationError::Kind::NonIntegerShape, key,
                          key + ": '" + value + "' is not a positive integer");
  }
  return static_cast<int>(parsed);
}

}  // namespace

ParamsConfig ParamsConfig::defaults() {
  ParamsConfig cfg;
  cfg.entries_ = {
      {"bs_power_dbm", "35"},
      {"ue_power_dbm", "25"},
      {"noise_power_dbm", "0"},
      {"bs_antennas", "10"},
      {"ue_antennas", "4"},
      {"pathloss_exponent", "2.4"},
      {"nakagami_m_bd", "2"},
      {"nakagami_m_br", "2"},
      {"nakagami_m_rd", "2"},
      {"bs_los_radius_m", "100"},
      {"ue_los_radius_m", "20"},
      {"bs_los_probability", "0.9"},
      {"ue_los_probability", "0.63"},
      {"bs_density_per_m2", "0.0002"},
      {"relay_density_per_m2", "0.002"},
      {"dest_density_per_m2", "0.0001"},
      {"multiplexing_factor", "0.9"},
      {"density_kind", "effective"},
  };
  return cfg;
}

ParamsConfig ParamsConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(ValidationError::Kind::OutOfRange, "params",
                          "cannot open parameter file " + path.string());
  }
  ParamsConfig cfg = defaults();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(ValidationError::Kind::OutOfRange, "params",
                            path.string() + ":" + std::to_string(line_no) +
                                ": expected 'key = value'");
    }
    cfg.set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
  }
  return cfg;
}

void ParamsConfig::set(std::string_view key, std::string_view value) {
  for (std::string_view known : kKnownKeys) {
    if (known == key) {
      entries_[std::string(key)] = std::string(value);
      return;
    }
  }
  throw ValidationError(ValidationError::Kind::OutOfRange, std::string(key),
                        "unknown parameter key '" + std::string(key) + "'");
}

NetworkParams ParamsConfig::build() const {
  auto get = [&](const char* key) -> const std::string& {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
      throw ValidationError(ValidationError::Kind::OutOfRange, key,
                            std::string("missing parameter ") + key);
    }
    return it->second;
  };

  NetworkParams p;
  p.bs_power = db_to_linear(parse_double(get("bs_power_dbm"), "bs_power_dbm"));
  p.ue_power = db_to_linear(parse_double(get("ue_power_dbm"), "ue_power_dbm"));
  p.noise_power = db_to_linear(parse_double(get("noise_power_dbm"), "noise_power_dbm"));
  p.bs_antennas = parse_positive_int(get("bs_antennas"), "bs_antennas");
  p.ue_antennas = parse_positive_int(get("ue_antennas"), "ue_antennas");
  p.pathloss_exp = parse_double(get("pathloss_exponent"), "pathloss_exponent");
  p.m_bd = parse_positive_int(get("nakagami_m_bd"), "nakagami_m_bd");
  p.m_br = parse_positive_int(get("nakagami_m_br"), "nakagami_m_br");
  p.m_rd = parse_positive_int(get("nakagami_m_rd"), "nakagami_m_rd");
  p.bs_los_radius = parse_double(get("bs_los_radius_m"), "bs_los_radius_m");
  p.ue_los_radius = parse_double(get("ue_los_radius_m"), "ue_los_radius_m");
  p.bs_los_prob = parse_double(get("bs_los_probability"), "bs_los_probability");
  p.ue_los_prob = parse_double(get("ue_los_probability"), "ue_los_probability");
  p.multiplexing_factor = parse_double(get("multiplexing_factor"), "multiplexing_factor");
  p.raw_dest_density = parse_double(get("dest_density_per_m2"), "dest_density_per_m2");

  const std::string& kind = get("density_kind");
  const double bs_density = parse_double(get("bs_density_per_m2"), "bs_density_per_m2");
  const double relay_density =
      parse_double(get("relay_density_per_m2"), "relay_density_per_m2");
  if (kind == "effective") {
    // Listed densities are post-thinning LoS densities; divide the thinning
    // back out so every derived quantity has a single source of truth.
    if (!(p.bs_los_prob > 0.0) || !(p.ue_los_prob > 0.0)) {
      throw ValidationError(ValidationError::Kind::NonPositive, "density_kind",
                            "effective densities need positive LoS probabilities");
    }
    p.raw_bs_density = bs_density / p.bs_los_prob;
    p.raw_relay_density = relay_density / p.ue_los_prob;
  } else if (kind == "raw") {
    p.raw_bs_density = bs_density;
    p.raw_relay_density = relay_density;
  } else {
    throw ValidationError(ValidationError::Kind::OutOfRange, "density_kind",
                          "density_kind must be 'effective' or 'raw', got '" + kind + "'");
  }
  return validate(p);
}

std::string params_json_text(const NetworkParams& params) {
  nlohmann::json j;
  j["bs_power_dbm"] = linear_to_db(params.bs_power);
  j["ue_power_dbm"] = linear_to_db(params.ue_power);
  j["noise_power_dbm"] =
      params.noise_power > 0.0 ? nlohmann::json(linear_to_db(params.noise_power))
                               : nlohmann::json("-inf");
  j["bs_antennas"] = params.bs_antennas;
  j["ue_antennas"] = params.ue_antennas;
  j["pathloss_exponent"] = params.pathloss_exp;
  j["nakagami_m_bd"] = params.m_bd;
  j["nakagami_m_br"] = params.m_br;
  j["nakagami_m_rd"] = params.m_rd;
  j["bs_los_radius_m"] = params.bs_los_radius;
  j["ue_los_radius_m"] = params.ue_los_radius;
  j["bs_los_probability"] = params.bs_los_prob;
  j["ue_los_probability"] = params.ue_los_prob;
  j["multiplexing_factor"] = params.multiplexing_factor;
  j["raw_bs_density_per_m2"] = params.raw_bs_density;
  j["raw_relay_density_per_m2"] = params.raw_relay_density;
  j["dest_density_per_m2"] = params.raw_dest_density;
  j["los_bs_density_per_m2"] = params.los_bs_density();
  j["los_relay_density_per_m2"] = params.los_relay_density();
  j["interfering_ue_density_per_m2"] = params.interfering_ue_density();
  return j.dump(2);
}

}  // namespace relaycov
