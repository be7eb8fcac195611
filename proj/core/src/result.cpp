// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/result.hpp"

namespace relaycov {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::AnalyticalCorrelated: return "analytical_corr";
    case Method::AnalyticalUncorrelated: return "analytical_uncorr";
    case Method::SimShared: return "sim_shared";
    case Method::SimIndependentPerAntenna: return "sim_indep";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : {Method::AnalyticalCorrelated, Method::AnalyticalUncorrelated,
                   Method::SimShared, Method::SimIndependentPerAntenna}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool method_is_simulation(Method method) {
  return method == Method::SimShared || method == Method::SimIndependentPerAntenna;
}

}  // namespace relaycov
