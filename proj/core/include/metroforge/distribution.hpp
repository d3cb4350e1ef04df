// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metroforge {

/// Probability mass over the 2^N Z-basis bitstrings. Qubit 0 is the most
/// significant bit of the outcome index.
struct OutcomeDistribution {
  int n_qubits = 0;
  std::vector<double> probs;

  static OutcomeDistribution zeros(int n_qubits);

  std::size_t dim() const { return probs.size(); }

  /// Bit of `qubit` within outcome index `x`.
  int bit(std::size_t x, int qubit) const {
    return static_cast<int>((x >> (n_qubits - 1 - qubit)) & 1U);
  }

  /// P(even parity), the fringe statistic of parity-readout protocols.
  double even_parity_probability() const;

  /// Marginal {P(0), P(1)} of one qubit.
  std::pair<double, double> marginal(int qubit) const;

  double sum() const;

  /// Throws std::invalid_argument if entries are negative beyond `tol` or the
  /// total mass deviates from 1 by more than `tol`.
  void validate(double tol = 1e-9) const;

  /// JSON array of probabilities indexed by bitstring value.
  std::string to_json() const;
};

/// Empirical distribution of `shots` multinomial draws from `exact`,
/// deterministic given the seed.
OutcomeDistribution sample_distribution(const OutcomeDistribution& exact, long shots,
                                        std::uint64_t seed);

} // namespace metroforge
