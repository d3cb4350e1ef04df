// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metroforge/simulator.hpp"

namespace metroforge {

/// Normalization and overhead terms of the sensitivity-per-unit-time
/// objective.
struct ObjectiveConfig {
  double t_overhead = 0.0;     // encode + decode + measure time, seconds
  double t_unit = 1.0;         // seconds
  double epsilon_floor = 1e-12; // probability floor for the CFI division

  void validate() const; // throws ConfigError
};

/// One circuit evaluation's figures of merit.
struct ObjectiveReport {
  double cfi_phi = 0.0;
  double cfi_omega = 0.0; // t^2 * cfi_phi
  double qfi_phi = 0.0;
  double t = 0.0; // seconds
  double objective_value = 0.0;

  std::string to_json(int indent = -1) const;
};

struct CfiDiagnostics {
  int flagged_outcomes = 0; // P below the floor while |dP| > sqrt(floor)
  double floor_used = 0.0;
};

/// Derivative of every outcome probability with respect to the common signal
/// angle, via the per-qubit parameter-shift rule:
///   dP(x)/dphi = sum_i (P(x | phi_i + pi/2) - P(x | phi_i - pi/2)) / 2,
/// where the shift touches only qubit i's signal rotation. Costs 2N backend
/// evaluations.
std::vector<double> signal_derivative_param_shift(
    const EvaluationBackend& backend, const ConcreteCircuit& circuit, double phi, double t,
    const NoiseModel& noise, std::optional<long> shots = {},
    std::optional<std::uint64_t> seed = {});

/// Classical Fisher information of the outcome distribution about the signal
/// angle: sum_x (dP(x)/dphi)^2 / max(P(x), floor). Uses 2N+1 backend
/// evaluations. The floor defaults to 1e-12 on the exact backend and
/// 0.5/shots on the sampled backend.
double cfi_phi(const EvaluationBackend& backend, const ConcreteCircuit& circuit, double phi,
               double t, const NoiseModel& noise, std::optional<long> shots = {},
               std::optional<std::uint64_t> seed = {}, CfiDiagnostics* diagnostics = nullptr,
               std::optional<double> floor_override = {});

/// Quantum Fisher information of a state given its signal derivative, from
/// the symmetric-logarithmic-derivative spectral formula
///   QFI = 2 sum_{j,k: l_j + l_k > cutoff} |<j|drho|k>|^2 / (l_j + l_k).
double qfi_from_state(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& drho,
                      double eigenvalue_cutoff = 1e-12);

/// QFI of the final circuit state about the signal angle. The derivative of
/// the density matrix is exact: the per-qubit shift rule applied to states
/// (channel linearity makes it exact). Exact simulation only.
double qfi_phi(const ConcreteCircuit& circuit, double phi, double t, const NoiseModel& noise);
double qfi_phi(const CircuitStructure& structure, const ParameterAssignment& assignment,
               double phi, const NoiseModel& noise, bool echo = false);

/// Sensitivity per unit time: t^2 * CFI(phi) / (t + t_overhead) * T_unit.
double objective_value(double cfi_phi_value, double t, const ObjectiveConfig& config);

/// CFI about the signal frequency: the chain rule contributes t per
/// derivative, so CFI(omega) = t^2 * CFI(phi).
inline double cfi_omega_from_phi(double cfi_phi_value, double t) {
  return t * t * cfi_phi_value;
}

/// SNR upper-bound scale sqrt(M * CFI(omega)) for M repetitions.
double snr_bound(double cfi_omega_value, double repetitions);

ObjectiveReport evaluate_circuit(const EvaluationBackend& backend,
                                 const ConcreteCircuit& circuit, double phi, double t,
                                 const NoiseModel& noise, const ObjectiveConfig& config,
                                 std::optional<long> shots = {},
                                 std::optional<std::uint64_t> seed = {});

struct StageValue {
  std::string stage;
  double value = 0.0;
};

/// Cumulative information as noisy operations are idealized one by one,
/// outermost first: full noise (reported as CFI), then ideal readout, ideal
/// decoder, ideal interrogation, and ideal encoder. Region sizes are the
/// successive differences. Exact simulation only.
std::vector<StageValue> stage_qfi_decomposition(const ConcreteCircuit& circuit, double phi,
                                                double t, const NoiseModel& noise);

/// Encode + decode time along the circuit's critical path plus the
/// measurement duration; the default t_overhead.
double circuit_time_overhead(const ConcreteCircuit& circuit, const GateDurations& durations,
                             double measurement_duration);

} // namespace metroforge
