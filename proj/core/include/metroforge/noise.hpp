// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "metroforge/gates.hpp"

namespace metroforge {

struct OutcomeDistribution;

/// Per-gate execution times, used to derive the encode/decode/measure time
/// overhead of a circuit.
struct GateDurations {
  double u3 = 5e-8;
  double h = 5e-8;
  double x = 5e-8;
  double rz = 5e-8;
  double cnot = 3e-7;

  double of(GateKind kind) const;
};

/// Hardware-style calibration record. Gate noise is depolarizing (p1 per
/// single-qubit gate; p2 independently on both qubits of each CNOT),
/// interrogation noise is T1/T2 decoherence during signal accumulation, and
/// readout noise is a per-qubit symmetric bit flip on the measured outcome.
struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  double p_readout = 0.0;
  double t1 = 52.2e-6; // seconds
  double t2 = 62.8e-6; // seconds
  GateDurations durations;
  bool gate_noise_enabled = true;
  bool interrogation_noise_enabled = true;
  bool readout_noise_enabled = true;

  /// All categories disabled and zero rates.
  static NoiseModel noiseless();

  /// Averaged superconducting-hardware calibration: 1% single-qubit
  /// depolarizing, 3% per-qubit CNOT depolarizing, 5% readout error,
  /// T1 = 52.2 us, T2 = 62.8 us.
  static NoiseModel superconducting_defaults();

  bool any_enabled() const {
    return gate_noise_enabled || interrogation_noise_enabled || readout_noise_enabled;
  }

  /// Throws ConfigError on out-of-range probabilities or T2 > 2*T1.
  void validate() const;
};

/// A completely positive trace-preserving map in Kraus form. The acted-on
/// qubit indices are supplied at application time.
struct KrausChannel {
  std::vector<Eigen::Matrix2cd> ops;

  /// Max-norm deviation of sum_k K_k^dag K_k from identity.
  double completeness_defect() const;
};

/// Uniform Pauli mixture: K0 = sqrt(1-3p/4) I, K_{1..3} = sqrt(p/4) {X,Y,Z}.
/// At p=1 every input maps to I/2. Throws std::out_of_range unless 0<=p<=1.
KrausChannel depolarizing_channel(double p);

/// Decoherence over dt: amplitude damping with gamma = 1 - exp(-dt/T1)
/// composed with pure dephasing at rate 1/Tphi = 1/T2 - 1/(2 T1), so
/// off-diagonal elements decay by exp(-dt/T2) overall.
/// Throws ConfigError if T2 > 2*T1 and std::out_of_range if dt < 0.
KrausChannel interrogation_channel(double dt, double t1, double t2);

/// Applies the per-qubit symmetric confusion matrix [[1-p, p], [p, 1-p]] to
/// a measured distribution. Throws std::out_of_range unless 0<=p<=1.
OutcomeDistribution readout_confusion(const OutcomeDistribution& dist, double p_readout);

} // namespace metroforge
