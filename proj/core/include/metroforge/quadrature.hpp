// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace metroforge {

struct QuadratureNode {
  double x = 0.0;
  double weight = 0.0;
};

/// Gauss-Hermite nodes/weights transformed to an expectation over
/// N(mean, stddev^2); weights sum to 1. Golub-Welsch on the Jacobi matrix.
std::vector<QuadratureNode> gauss_hermite(int n, double mean, double stddev);

/// Gauss-Legendre nodes/weights for a uniform average over [lo, hi];
/// weights sum to 1.
std::vector<QuadratureNode> gauss_legendre(int n, double lo, double hi);

} // namespace metroforge
