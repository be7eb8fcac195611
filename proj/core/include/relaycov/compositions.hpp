// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace relaycov {

/// A weak composition: ordered nonnegative parts j_1..j_m summing to kappa.
/// Indexes one term of the selection-combining expansion; part q counts the
/// antennas assigned the q-th term of the per-antenna survival polynomial.
struct Composition {
  std::vector<int> parts;

  int kappa() const;  // sum of parts
  int omega() const;  // sum of q * j_q, the total fading order of the term
};

/// All C(kappa+m-1, m-1) weak compositions of kappa into m parts, in
/// lexicographic order of the part vector. Throws CombinatorialBlowup when
/// the count would exceed 1e6.
std::vector<Composition> enumerate_compositions(int m, int kappa);

/// Signed series weight of a composition:
///   multinomial(kappa; j_1..j_m) * prod_q C(m, q)^(j_q) * (-1)^(kappa+omega).
/// Equals the coefficient grouping when the per-antenna survival polynomial
/// (in t = e^(-alpha z)) is raised to the kappa-th power.
double beta_coefficient(const Composition& comp, int m);

/// Binomial coefficient as a double; exact while the result stays below 2^53.
double binomial(int n, int k);

}  // namespace relaycov
