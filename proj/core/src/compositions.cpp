// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#include "relaycov/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "relaycov/errors.hpp"

namespace relaycov {

int Composition::kappa() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::omega() const {
  int sum = 0;
  for (std::size_t q = 0; q < parts.size(); ++q) {
    sum += static_cast<int>(q + 1) * parts[q];
  }
  return sum;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result *= static_cast<double>(n - k + i);
    result /= static_cast<double>(i);
  }
  return result;
}

std::vector<Composition> enumerate_compositions(int m, int kappa) {
  if (m < 1 || kappa < 1) {
    throw ValidationError(ValidationError::Kind::NonPositive, "composition",
                          "need m >= 1 and kappa >= 1");
  }
  const double count = binomial(kappa + m - 1, m - 1);
  if (count > 1e6) {
    throw CombinatorialBlowup("composition count " + std::to_string(count) + " for m=" +
                              std::to_string(m) + ", kappa=" + std::to_string(kappa) +
                              " exceeds the 1e6 term budget");
  }
  std::vector<Composition> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> parts(static_cast<std::size_t>(m), 0);
  // Lexicographic recursion over the part vector.
  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == m - 1) {
      parts[static_cast<std::size_t>(slot)] = remaining;
      out.push_back(Composition{parts});
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, remaining - v);
    }
  };
  rec(rec, 0, kappa);
  return out;
}

double beta_coefficient(const Composition& comp, int m) {
  const int kappa = comp.kappa();
  const int omega = comp.omega();
  // multinomial(kappa; j_1..j_m) as the telescoping binomial product
  double coeff = 1.0;
  int remaining = kappa;
  for (int j : comp.parts) {
    coeff *= binomial(remaining, j);
    remaining -= j;
  }
  for (std::size_t q = 0; q < comp.parts.size(); ++q) {
    for (int rep = 0; rep < comp.parts[q]; ++rep) {
      coeff *= binomial(m, static_cast<int>(q + 1));
    }
  }
  return ((kappa + omega) % 2 == 0) ? coeff : -coeff;
}

}  // namespace relaycov
