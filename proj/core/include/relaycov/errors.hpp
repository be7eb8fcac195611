// Copyright (c) 2026 the relaycov developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace relaycov {

/// A parameter or configuration value violates its contract.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    NonPositive,
    ProbabilityOutOfRange,
    NonIntegerShape,
    OutOfRange,
  };

  ValidationError(Kind kind, std::string field, const std::string& message)
      : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }

 private:
  Kind kind_;
  std::string field_;
};

/// A series or integral evaluation produced a result that cannot be trusted
/// (raw probability outside [0,1] beyond tolerance, excessive cancellation,
/// or a failed node-doubling self check).
class NumericalInstability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A composition enumeration would exceed the term budget.
class CombinatorialBlowup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An SINR was requested for a link realization with no associated node.
class EmptyProcess : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A density was evaluated outside the support of its distribution.
class OutOfSupport : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace relaycov
