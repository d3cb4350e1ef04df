// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace metroforge {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
// matrix, weights the squared first components of its eigenvectors.
std::vector<QuadratureNode> golub_welsch(const Eigen::VectorXd& off_diagonal) {
  const Eigen::Index n = off_diagonal.size() + 1;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    jacobi(i, i + 1) = off_diagonal(i);
    jacobi(i + 1, i) = off_diagonal(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  std::vector<QuadratureNode> nodes(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double first = solver.eigenvectors()(0, i);
    nodes[static_cast<std::size_t>(i)] = {solver.eigenvalues()(i), first * first};
  }
  return nodes;
}

} // namespace

std::vector<QuadratureNode> gauss_hermite(int n, double mean, double stddev) {
  if (n < 1)
    throw std::invalid_argument("quadrature needs at least one node");
  if (stddev <= 0.0)
    throw std::invalid_argument("stddev must be positive");
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k)
    off(k - 1) = std::sqrt(k / 2.0);
  std::vector<QuadratureNode> nodes = golub_welsch(off);
  // x = mean + sqrt(2) * stddev * node; weights already sum to 1.
  for (QuadratureNode& node : nodes)
    node.x = mean + std::sqrt(2.0) * stddev * node.x;
  return nodes;
}

std::vector<QuadratureNode> gauss_legendre(int n, double lo, double hi) {
  if (n < 1)
    throw std::invalid_argument("quadrature needs at least one node");
  if (hi <= lo)
    throw std::invalid_argument("interval must be non-degenerate");
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k)
    off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  std::vector<QuadratureNode> nodes = golub_welsch(off);
  for (QuadratureNode& node : nodes)
    node.x = lo + 0.5 * (hi - lo) * (node.x + 1.0);
  return nodes;
}

} // namespace metroforge
