// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/density_matrix.hpp"

#include <stdexcept>

namespace metroforge {

namespace {

// M * rho for a one-qubit operator M embedded at `mask`.
void left_multiply(Eigen::MatrixXcd& rho, const Eigen::Matrix2cd& m, Eigen::Index mask) {
  const Eigen::Index d = rho.rows();
  for (Eigen::Index r0 = 0; r0 < d; ++r0) {
    if (r0 & mask)
      continue;
    const Eigen::Index r1 = r0 | mask;
    const Eigen::RowVectorXcd a = rho.row(r0);
    const Eigen::RowVectorXcd b = rho.row(r1);
    rho.row(r0) = m(0, 0) * a + m(0, 1) * b;
    rho.row(r1) = m(1, 0) * a + m(1, 1) * b;
  }
}

// rho * M^dag for a one-qubit operator M embedded at `mask`.
void right_multiply_adjoint(Eigen::MatrixXcd& rho, const Eigen::Matrix2cd& m,
                            Eigen::Index mask) {
  const Eigen::Index d = rho.cols();
  for (Eigen::Index c0 = 0; c0 < d; ++c0) {
    if (c0 & mask)
      continue;
    const Eigen::Index c1 = c0 | mask;
    const Eigen::VectorXcd a = rho.col(c0);
    const Eigen::VectorXcd b = rho.col(c1);
    rho.col(c0) = std::conj(m(0, 0)) * a + std::conj(m(0, 1)) * b;
    rho.col(c1) = std::conj(m(1, 0)) * a + std::conj(m(1, 1)) * b;
  }
}

void left_multiply2(Eigen::MatrixXcd& rho, const Eigen::Matrix4cd& m, Eigen::Index mask0,
                    Eigen::Index mask1) {
  const Eigen::Index d = rho.rows();
  std::array<Eigen::RowVectorXcd, 4> rows;
  for (Eigen::Index base = 0; base < d; ++base) {
    if (base & (mask0 | mask1))
      continue;
    const std::array<Eigen::Index, 4> idx{base, base | mask1, base | mask0,
                                          base | mask0 | mask1};
    for (int i = 0; i < 4; ++i)
      rows[i] = rho.row(idx[i]);
    for (int i = 0; i < 4; ++i)
      rho.row(idx[i]) =
          m(i, 0) * rows[0] + m(i, 1) * rows[1] + m(i, 2) * rows[2] + m(i, 3) * rows[3];
  }
}

void right_multiply_adjoint2(Eigen::MatrixXcd& rho, const Eigen::Matrix4cd& m,
                             Eigen::Index mask0, Eigen::Index mask1) {
  const Eigen::Index d = rho.cols();
  std::array<Eigen::VectorXcd, 4> cols;
  for (Eigen::Index base = 0; base < d; ++base) {
    if (base & (mask0 | mask1))
      continue;
    const std::array<Eigen::Index, 4> idx{base, base | mask1, base | mask0,
                                          base | mask0 | mask1};
    for (int i = 0; i < 4; ++i)
      cols[i] = rho.col(idx[i]);
    for (int i = 0; i < 4; ++i)
      rho.col(idx[i]) = std::conj(m(i, 0)) * cols[0] + std::conj(m(i, 1)) * cols[1] +
                        std::conj(m(i, 2)) * cols[2] + std::conj(m(i, 3)) * cols[3];
  }
}

} // namespace

DensityMatrix::DensityMatrix(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 16)
    throw std::invalid_argument("qubit count must lie in [1, 16]");
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  rho_ = Eigen::MatrixXcd::Zero(d, d);
  rho_(0, 0) = 1.0;
}

void DensityMatrix::apply_unitary(const Eigen::Matrix2cd& u, int qubit) {
  if (qubit < 0 || qubit >= n_)
    throw std::out_of_range("qubit index out of range");
  const Eigen::Index mask = pair_mask(qubit);
  left_multiply(rho_, u, mask);
  right_multiply_adjoint(rho_, u, mask);
}

void DensityMatrix::apply_unitary(const Eigen::Matrix4cd& u, int q0, int q1) {
  if (q0 < 0 || q0 >= n_ || q1 < 0 || q1 >= n_ || q0 == q1)
    throw std::out_of_range("qubit pair out of range");
  const Eigen::Index mask0 = pair_mask(q0);
  const Eigen::Index mask1 = pair_mask(q1);
  left_multiply2(rho_, u, mask0, mask1);
  right_multiply_adjoint2(rho_, u, mask0, mask1);
}

void DensityMatrix::apply_channel(const KrausChannel& channel, int qubit) {
  if (qubit < 0 || qubit >= n_)
    throw std::out_of_range("qubit index out of range");
  const Eigen::Index mask = pair_mask(qubit);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rho_.rows(), rho_.cols());
  for (const Eigen::Matrix2cd& k : channel.ops) {
    Eigen::MatrixXcd term = rho_;
    left_multiply(term, k, mask);
    right_multiply_adjoint(term, k, mask);
    acc += term;
  }
  rho_ = std::move(acc);
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

std::vector<double> DensityMatrix::diagonal_probabilities() const {
  std::vector<double> probs(static_cast<std::size_t>(rho_.rows()));
  double total = 0.0;
  for (Eigen::Index x = 0; x < rho_.rows(); ++x) {
    probs[static_cast<std::size_t>(x)] = std::max(rho_(x, x).real(), 0.0);
    total += probs[static_cast<std::size_t>(x)];
  }
  if (total > 0.0)
    for (double& p : probs)
      p /= total;
  return probs;
}

void DensityMatrix::check_valid(double tol) const {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::runtime_error("density matrix is not Hermitian");
  if (std::abs(trace_real() - 1.0) > tol)
    throw std::runtime_error("density matrix trace deviates from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -10.0 * tol)
    throw std::runtime_error("density matrix has a negative eigenvalue");
}

} // namespace metroforge
