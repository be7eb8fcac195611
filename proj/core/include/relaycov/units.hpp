// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace relaycov {

// All internal power arithmetic is linear (mW). dB/dBm values appear only at
// configuration and reporting boundaries; these two helpers are that boundary.

inline double db_to_linear(double value_db) { return std::pow(10.0, value_db / 10.0); }

inline double linear_to_db(double value_linear) { return 10.0 * std::log10(value_linear); }

}  // namespace relaycov
