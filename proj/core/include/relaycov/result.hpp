// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "relaycov/stats.hpp"

namespace relaycov {

/// How a coverage probability was obtained.
enum class Method {
  AnalyticalCorrelated,      // closed form, antenna correlation modeled
  AnalyticalUncorrelated,    // closed form, per-antenna independence assumed
  SimShared,                 // Monte Carlo, geometry shared across antennas
  SimIndependentPerAntenna,  // Monte Carlo, fresh geometry per antenna
};

std::string_view method_name(Method method);
std::optional<Method> method_from_name(std::string_view name);
bool method_is_simulation(Method method);

struct CoverageResult {
  double probability = 0.0;
  Method method = Method::AnalyticalCorrelated;
  std::optional<ConfidenceInterval> ci;  // simulation methods only
  std::uint64_t trials = 0;              // simulation methods only
};

}  // namespace relaycov
