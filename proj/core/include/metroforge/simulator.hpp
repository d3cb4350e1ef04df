// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>

#include "metroforge/circuit.hpp"
#include "metroforge/density_matrix.hpp"
#include "metroforge/distribution.hpp"
#include "metroforge/noise.hpp"

namespace metroforge {

/// Applies one bound gate: the exact unitary followed by its depolarizing
/// channel(s) when gate noise is enabled (p1 on single-qubit gates, p2
/// independently on both qubits of a CNOT).
void apply_gate(DensityMatrix& rho, const BoundGate& gate, const NoiseModel& noise);

/// Applies the signal block with one phase per qubit plus interrogation
/// decoherence over t. With echo, each qubit sees Rz(phi/2), half the
/// decoherence, a perfect X, Rz(-phi/2), and the second half; the toggled
/// frame accumulates the same net phase.
void apply_signal_block(DensityMatrix& rho, std::span<const double> phases, double t,
                        const NoiseModel& noise, bool echo);

/// |0..0><0..0| -> encoder -> signal block -> decoder, with per-category
/// noise as configured; returns the final state.
DensityMatrix run_circuit(const ConcreteCircuit& circuit, std::span<const double> phases,
                          double t, const NoiseModel& noise);
DensityMatrix run_circuit(const ConcreteCircuit& circuit, double phi, double t,
                          const NoiseModel& noise);
DensityMatrix run_circuit(const CircuitStructure& structure,
                          const ParameterAssignment& assignment, double phi,
                          const NoiseModel& noise, bool echo = false);

/// Z-basis probabilities of rho, with readout confusion when enabled, then
/// optional multinomial sampling (seed required when shots are given).
OutcomeDistribution measure(const DensityMatrix& rho, const NoiseModel& noise,
                            std::optional<long> shots = {},
                            std::optional<std::uint64_t> seed = {});

/// Circuit evaluation contract shared by the exact and shot-sampled engines.
class EvaluationBackend {
public:
  virtual ~EvaluationBackend() = default;

  /// Evaluates the outcome distribution with one signal phase per qubit.
  virtual OutcomeDistribution evaluate(const ConcreteCircuit& circuit,
                                       std::span<const double> phases, double t,
                                       const NoiseModel& noise,
                                       std::optional<long> shots = {},
                                       std::optional<std::uint64_t> seed = {}) const = 0;

  virtual bool is_exact() const = 0;

  /// Uniform-phase convenience wrapper.
  OutcomeDistribution evaluate_uniform(const ConcreteCircuit& circuit, double phi, double t,
                                       const NoiseModel& noise,
                                       std::optional<long> shots = {},
                                       std::optional<std::uint64_t> seed = {}) const;
};

/// Deterministic exact probabilities from the density matrix.
class ExactBackend final : public EvaluationBackend {
public:
  OutcomeDistribution evaluate(const ConcreteCircuit& circuit,
                               std::span<const double> phases, double t,
                               const NoiseModel& noise, std::optional<long> shots = {},
                               std::optional<std::uint64_t> seed = {}) const override;
  bool is_exact() const override { return true; }
};

/// Multinomial shot sampling on top of the exact engine; deterministic given
/// an explicit per-call seed.
class SampledBackend final : public EvaluationBackend {
public:
  explicit SampledBackend(long default_shots) : default_shots_(default_shots) {}

  OutcomeDistribution evaluate(const ConcreteCircuit& circuit,
                               std::span<const double> phases, double t,
                               const NoiseModel& noise, std::optional<long> shots = {},
                               std::optional<std::uint64_t> seed = {}) const override;
  bool is_exact() const override { return false; }

private:
  long default_shots_;
};

} // namespace metroforge
