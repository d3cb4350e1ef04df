// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace metroforge {

/// A gate angle was requested from a parameter slot that has no bound value.
class UnboundSlotError : public std::runtime_error {
public:
  explicit UnboundSlotError(const std::string& what) : std::runtime_error(what) {}
};

/// A parameter array does not match the free-parameter count of a structure.
class LengthMismatchError : public std::invalid_argument {
public:
  explicit LengthMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// No non-degenerate ansatz structure could be drawn within the retry budget.
class ProposalExhaustedError : public std::runtime_error {
public:
  explicit ProposalExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

/// Experiment configuration is malformed or violates a physicality constraint.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace metroforge
