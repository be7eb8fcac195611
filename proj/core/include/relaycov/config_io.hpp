// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "relaycov/params.hpp"

namespace relaycov {

/// Key-value parameter bag matching the configuration file format: one
/// `key = value` pair per line, `#` comments. Powers are given in dBm and
/// converted exactly once when the bag is built into NetworkParams.
///
/// Densities are interpreted according to `density_kind`: "effective"
/// (default) means the listed BS/relay densities are the post-thinning LoS
/// densities; "raw" means they are the underlying process densities.
class ParamsConfig {
 public:
  /// The built-in defaults (see default_network_params()).
  static ParamsConfig defaults();

  /// defaults() overlaid with the pairs found in the file.
  static ParamsConfig from_file(const std::filesystem::path& path);

  /// Applies one override; throws ValidationError for unknown keys.
  void set(std::string_view key, std::string_view value);

  /// Converts, derives raw densities, and validates.
  NetworkParams build() const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

/// Resolved parameters as a JSON object string (linear-unit fields plus the
/// derived densities), for the reproducibility sidecar.
std::string params_json_text(const NetworkParams& params);

}  // namespace relaycov
