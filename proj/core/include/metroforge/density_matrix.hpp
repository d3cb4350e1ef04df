// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "metroforge/noise.hpp"

namespace metroforge {

/// 2^N x 2^N Hermitian PSD trace-1 complex matrix; the simulator state.
/// Qubit 0 is the most significant bit of basis indices.
class DensityMatrix {
public:
  /// Initializes to |0...0><0...0|.
  explicit DensityMatrix(int n_qubits);

  int n_qubits() const { return n_; }
  Eigen::Index dim() const { return rho_.rows(); }

  const Eigen::MatrixXcd& matrix() const { return rho_; }
  Eigen::MatrixXcd& matrix() { return rho_; }

  /// rho -> U rho U^dag on one qubit.
  void apply_unitary(const Eigen::Matrix2cd& u, int qubit);

  /// rho -> U rho U^dag on an ordered qubit pair; the 4x4 unitary's basis is
  /// |q0 q1> in {00, 01, 10, 11}.
  void apply_unitary(const Eigen::Matrix4cd& u, int q0, int q1);

  /// rho -> sum_k K rho K^dag for a single-qubit Kraus channel.
  void apply_channel(const KrausChannel& channel, int qubit);

  double trace_real() const { return rho_.trace().real(); }
  double purity() const;

  /// Real diagonal, clamped at zero and renormalized; the exact Z-basis
  /// probabilities.
  std::vector<double> diagonal_probabilities() const;

  /// Hermiticity / trace / positive-semidefiniteness check used by tests and
  /// debug paths. Throws std::runtime_error on violation.
  void check_valid(double tol = 1e-9) const;

private:
  Eigen::Index pair_mask(int qubit) const {
    return Eigen::Index{1} << (n_ - 1 - qubit);
  }

  int n_;
  Eigen::MatrixXcd rho_;
};

} // namespace metroforge
