// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "metroforge/distribution.hpp"
#include "metroforge/errors.hpp"

namespace metroforge {

double GateDurations::of(GateKind kind) const {
  switch (kind) {
  case GateKind::U3:
    return u3;
  case GateKind::CNOT:
    return cnot;
  case GateKind::H:
    return h;
  case GateKind::X:
    return x;
  case GateKind::Rz:
    return rz;
  }
  return 0.0;
}

NoiseModel NoiseModel::noiseless() {
  NoiseModel m;
  m.p1 = 0.0;
  m.p2 = 0.0;
  m.p_readout = 0.0;
  m.gate_noise_enabled = false;
  m.interrogation_noise_enabled = false;
  m.readout_noise_enabled = false;
  return m;
}

NoiseModel NoiseModel::superconducting_defaults() {
  NoiseModel m;
  m.p1 = 0.01;
  m.p2 = 0.03;
  m.p_readout = 0.05;
  m.t1 = 52.2e-6;
  m.t2 = 62.8e-6;
  return m;
}

void NoiseModel::validate() const {
  auto check_prob = [](double p, const char* name) {
    if (p < 0.0 || p > 1.0)
      throw ConfigError(std::string(name) + " must lie in [0, 1]");
  };
  check_prob(p1, "p1");
  check_prob(p2, "p2");
  check_prob(p_readout, "p_readout");
  if (t1 <= 0.0 || t2 <= 0.0)
    throw ConfigError("T1 and T2 must be positive");
  if (t2 > 2.0 * t1)
    throw ConfigError("unphysical lifetimes: T2 must not exceed 2*T1");
}

double KrausChannel::completeness_defect() const {
  Eigen::Matrix2cd sum = Eigen::Matrix2cd::Zero();
  for (const auto& k : ops)
    sum += k.adjoint() * k;
  return (sum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel depolarizing_channel(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::out_of_range("depolarizing probability must lie in [0, 1]");
  KrausChannel ch;
  if (p == 0.0) {
    ch.ops.push_back(Eigen::Matrix2cd::Identity());
    return ch;
  }
  ch.ops.push_back(std::sqrt(1.0 - 0.75 * p) * Eigen::Matrix2cd::Identity());
  ch.ops.push_back(std::sqrt(0.25 * p) * x_matrix());
  ch.ops.push_back(std::sqrt(0.25 * p) * y_matrix());
  ch.ops.push_back(std::sqrt(0.25 * p) * z_matrix());
  return ch;
}

KrausChannel interrogation_channel(double dt, double t1, double t2) {
  if (dt < 0.0)
    throw std::out_of_range("elapsed time must be non-negative");
  if (t1 <= 0.0 || t2 <= 0.0)
    throw ConfigError("T1 and T2 must be positive");
  if (t2 > 2.0 * t1)
    throw ConfigError("unphysical lifetimes: T2 must not exceed 2*T1");

  const double gamma = 1.0 - std::exp(-dt / t1);
  // Pure dephasing rate from the T1 contribution to total dephasing.
  const double inv_tphi = 1.0 / t2 - 1.0 / (2.0 * t1);
  // Phase-flip probability chosen so off-diagonals shrink by exp(-dt/Tphi),
  // giving exp(-dt/T2) once combined with damping's sqrt(1-gamma).
  const double flip = 0.5 * (1.0 - std::exp(-dt * inv_tphi));

  Eigen::Matrix2cd damp0 = Eigen::Matrix2cd::Zero();
  damp0(0, 0) = 1.0;
  damp0(1, 1) = std::sqrt(1.0 - gamma);
  Eigen::Matrix2cd damp1 = Eigen::Matrix2cd::Zero();
  damp1(0, 1) = std::sqrt(gamma);

  const Eigen::Matrix2cd deph0 = std::sqrt(1.0 - flip) * Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd deph1 = std::sqrt(flip) * z_matrix();

  KrausChannel ch;
  for (const Eigen::Matrix2cd& d : {deph0, deph1}) {
    for (const Eigen::Matrix2cd& a : {damp0, damp1}) {
      Eigen::Matrix2cd k = d * a;
      if (k.cwiseAbs().maxCoeff() > 0.0)
        ch.ops.push_back(k);
    }
  }
  return ch;
}

OutcomeDistribution readout_confusion(const OutcomeDistribution& dist, double p_readout) {
  if (p_readout < 0.0 || p_readout > 1.0)
    throw std::out_of_range("readout flip probability must lie in [0, 1]");
  OutcomeDistribution out = dist;
  const double keep = 1.0 - p_readout;
  // Per-qubit butterfly: mixes each index pair differing in one bit.
  for (int q = 0; q < dist.n_qubits; ++q) {
    const std::size_t mask = std::size_t{1} << (dist.n_qubits - 1 - q);
    for (std::size_t x = 0; x < out.probs.size(); ++x) {
      if (x & mask)
        continue;
      const double a = out.probs[x];
      const double b = out.probs[x | mask];
      out.probs[x] = keep * a + p_readout * b;
      out.probs[x | mask] = p_readout * a + keep * b;
    }
  }
  return out;
}

} // namespace metroforge
