// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/simulator.hpp"

#include <stdexcept>

namespace metroforge {

void apply_gate(DensityMatrix& rho, const BoundGate& gate, const NoiseModel& noise) {
  if (gate.is_two_qubit()) {
    Eigen::Matrix4cd u = gate_unitary(gate);
    rho.apply_unitary(u, gate.q0, gate.q1);
    if (noise.gate_noise_enabled && noise.p2 > 0.0) {
      const KrausChannel depol = depolarizing_channel(noise.p2);
      rho.apply_channel(depol, gate.q0);
      rho.apply_channel(depol, gate.q1);
    }
  } else {
    Eigen::Matrix2cd u = gate_unitary(gate);
    rho.apply_unitary(u, gate.q0);
    if (noise.gate_noise_enabled && noise.p1 > 0.0)
      rho.apply_channel(depolarizing_channel(noise.p1), gate.q0);
  }
}

namespace {

void apply_decoherence(DensityMatrix& rho, double dt, const NoiseModel& noise) {
  if (!noise.interrogation_noise_enabled || dt <= 0.0)
    return;
  const KrausChannel ch = interrogation_channel(dt, noise.t1, noise.t2);
  for (int q = 0; q < rho.n_qubits(); ++q)
    rho.apply_channel(ch, q);
}

} // namespace

void apply_signal_block(DensityMatrix& rho, std::span<const double> phases, double t,
                        const NoiseModel& noise, bool echo) {
  const int n = rho.n_qubits();
  if (static_cast<int>(phases.size()) != n)
    throw std::invalid_argument("one signal phase per qubit is required");
  if (t < 0.0)
    throw std::invalid_argument("interrogation time must be non-negative");

  if (!echo) {
    for (int q = 0; q < n; ++q)
      rho.apply_unitary(rz_matrix(phases[q]), q);
    apply_decoherence(rho, t, noise);
    return;
  }

  // Echo: half rotation, half decoherence, perfect X, negated half rotation,
  // second half of the decoherence.
  for (int q = 0; q < n; ++q)
    rho.apply_unitary(rz_matrix(phases[q] / 2.0), q);
  apply_decoherence(rho, t / 2.0, noise);
  const Eigen::Matrix2cd x = x_matrix();
  for (int q = 0; q < n; ++q)
    rho.apply_unitary(x, q);
  for (int q = 0; q < n; ++q)
    rho.apply_unitary(rz_matrix(-phases[q] / 2.0), q);
  apply_decoherence(rho, t / 2.0, noise);
}

DensityMatrix run_circuit(const ConcreteCircuit& circuit, std::span<const double> phases,
                          double t, const NoiseModel& noise) {
  DensityMatrix rho(circuit.n_qubits);
  for (const BoundGate& gate : circuit.encoder)
    apply_gate(rho, gate, noise);
  apply_signal_block(rho, phases, t, noise, circuit.echo);
  for (const BoundGate& gate : circuit.decoder)
    apply_gate(rho, gate, noise);
  return rho;
}

DensityMatrix run_circuit(const ConcreteCircuit& circuit, double phi, double t,
                          const NoiseModel& noise) {
  std::vector<double> phases(static_cast<std::size_t>(circuit.n_qubits), phi);
  return run_circuit(circuit, phases, t, noise);
}

DensityMatrix run_circuit(const CircuitStructure& structure,
                          const ParameterAssignment& assignment, double phi,
                          const NoiseModel& noise, bool echo) {
  ConcreteCircuit circuit = bind_parameters(structure, assignment);
  circuit.echo = echo;
  return run_circuit(circuit, phi, assignment.interrogation_time, noise);
}

OutcomeDistribution measure(const DensityMatrix& rho, const NoiseModel& noise,
                            std::optional<long> shots, std::optional<std::uint64_t> seed) {
  OutcomeDistribution dist;
  dist.n_qubits = rho.n_qubits();
  dist.probs = rho.diagonal_probabilities();
  if (noise.readout_noise_enabled && noise.p_readout > 0.0)
    dist = readout_confusion(dist, noise.p_readout);
  if (shots.has_value()) {
    if (!seed.has_value())
      throw std::invalid_argument("shot sampling requires an explicit seed");
    dist = sample_distribution(dist, *shots, *seed);
  }
  return dist;
}

OutcomeDistribution EvaluationBackend::evaluate_uniform(const ConcreteCircuit& circuit,
                                                        double phi, double t,
                                                        const NoiseModel& noise,
                                                        std::optional<long> shots,
                                                        std::optional<std::uint64_t> seed) const {
  std::vector<double> phases(static_cast<std::size_t>(circuit.n_qubits), phi);
  return evaluate(circuit, phases, t, noise, shots, seed);
}

OutcomeDistribution ExactBackend::evaluate(const ConcreteCircuit& circuit,
                                           std::span<const double> phases, double t,
                                           const NoiseModel& noise, std::optional<long>,
                                           std::optional<std::uint64_t>) const {
  const DensityMatrix rho = run_circuit(circuit, phases, t, noise);
  return measure(rho, noise);
}

OutcomeDistribution SampledBackend::evaluate(const ConcreteCircuit& circuit,
                                             std::span<const double> phases, double t,
                                             const NoiseModel& noise,
                                             std::optional<long> shots,
                                             std::optional<std::uint64_t> seed) const {
  const DensityMatrix rho = run_circuit(circuit, phases, t, noise);
  return measure(rho, noise, shots.value_or(default_shots_), seed);
}

} // namespace metroforge
