// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/distribution.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metroforge/rng.hpp"

namespace metroforge {

OutcomeDistribution OutcomeDistribution::zeros(int n_qubits) {
  OutcomeDistribution d;
  d.n_qubits = n_qubits;
  d.probs.assign(std::size_t{1} << n_qubits, 0.0);
  return d;
}

double OutcomeDistribution::even_parity_probability() const {
  double p = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x)
    if (std::popcount(x) % 2 == 0)
      p += probs[x];
  return p;
}

std::pair<double, double> OutcomeDistribution::marginal(int qubit) const {
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::size_t x = 0; x < probs.size(); ++x)
    (bit(x, qubit) == 0 ? p0 : p1) += probs[x];
  return {p0, p1};
}

double OutcomeDistribution::sum() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

void OutcomeDistribution::validate(double tol) const {
  if (probs.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("distribution size does not match qubit count");
  for (double p : probs)
    if (p < -tol)
      throw std::invalid_argument("distribution has a negative probability");
  if (std::abs(sum() - 1.0) > tol)
    throw std::invalid_argument("distribution is not normalized");
}

std::string OutcomeDistribution::to_json() const {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (std::size_t x = 0; x < probs.size(); ++x) {
    if (x)
      os << ",";
    os << probs[x];
  }
  os << "]";
  return os.str();
}

OutcomeDistribution sample_distribution(const OutcomeDistribution& exact, long shots,
                                        std::uint64_t seed) {
  if (shots <= 0)
    throw std::invalid_argument("shot count must be positive");
  std::vector<double> cdf(exact.probs.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < exact.probs.size(); ++x) {
    acc += std::max(exact.probs[x], 0.0);
    cdf[x] = acc;
  }
  const double total = acc;

  std::vector<long> counts(exact.probs.size(), 0);
  Rng rng(seed);
  for (long s = 0; s < shots; ++s) {
    const double u = rng.uniform() * total;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    std::size_t x = static_cast<std::size_t>(it - cdf.begin());
    if (x >= counts.size())
      x = counts.size() - 1;
    ++counts[x];
  }

  OutcomeDistribution out = OutcomeDistribution::zeros(exact.n_qubits);
  for (std::size_t x = 0; x < counts.size(); ++x)
    out.probs[x] = static_cast<double>(counts[x]) / static_cast<double>(shots);
  return out;
}

} // namespace metroforge
