// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace metroforge {

std::string to_string(BaselineKind kind) {
  switch (kind) {
  case BaselineKind::ParallelRamsey:
    return "parallel-ramsey";
  case BaselineKind::GhzH:
    return "ghz-h";
  case BaselineKind::GhzInv:
    return "ghz-inv";
  }
  return "?";
}

BaselineKind baseline_from_string(std::string_view name) {
  if (name == "parallel-ramsey" || name == "ramsey")
    return BaselineKind::ParallelRamsey;
  if (name == "ghz-h")
    return BaselineKind::GhzH;
  if (name == "ghz-inv")
    return BaselineKind::GhzInv;
  throw std::invalid_argument("unknown baseline kind: " + std::string(name));
}

ConcreteCircuit build_baseline(BaselineKind kind, int n_qubits) {
  if (n_qubits < 1)
    throw std::invalid_argument("baseline needs at least one qubit");
  ConcreteCircuit circuit;
  circuit.n_qubits = n_qubits;
  switch (kind) {
  case BaselineKind::ParallelRamsey:
    for (int q = 0; q < n_qubits; ++q)
      circuit.encoder.push_back(BoundGate::h(q));
    for (int q = 0; q < n_qubits; ++q)
      circuit.decoder.push_back(BoundGate::h(q));
    break;
  case BaselineKind::GhzH:
    circuit.encoder.push_back(BoundGate::h(0));
    for (int q = 0; q + 1 < n_qubits; ++q)
      circuit.encoder.push_back(BoundGate::cnot(q, q + 1));
    for (int q = 0; q < n_qubits; ++q)
      circuit.decoder.push_back(BoundGate::h(q));
    break;
  case BaselineKind::GhzInv:
    circuit.encoder.push_back(BoundGate::h(0));
    for (int q = 0; q + 1 < n_qubits; ++q)
      circuit.encoder.push_back(BoundGate::cnot(q, q + 1));
    for (int q = n_qubits - 2; q >= 0; --q)
      circuit.decoder.push_back(BoundGate::cnot(q, q + 1));
    circuit.decoder.push_back(BoundGate::h(0));
    break;
  }
  return circuit;
}

CircuitStructure baseline_structure(BaselineKind kind, int n_qubits) {
  CircuitStructure structure;
  structure.n_qubits = n_qubits;
  structure.n_params = 0;
  Layer encoder;
  Layer decoder;
  switch (kind) {
  case BaselineKind::ParallelRamsey:
    for (int q = 0; q < n_qubits; ++q)
      encoder.push_back(Gate::h(q));
    for (int q = n_qubits - 1; q >= 0; --q)
      decoder.push_back(Gate::h(q));
    structure.hyper = {1, n_qubits, 0};
    break;
  case BaselineKind::GhzInv:
    encoder.push_back(Gate::h(0));
    for (int q = 0; q + 1 < n_qubits; ++q)
      encoder.push_back(Gate::cnot(q, q + 1));
    for (int q = n_qubits - 2; q >= 0; --q)
      decoder.push_back(Gate::cnot(q, q + 1));
    decoder.push_back(Gate::h(0));
    structure.hyper = {1, 1, n_qubits - 1};
    break;
  case BaselineKind::GhzH:
    throw std::invalid_argument("ghz-h has no structural mirror form");
  }
  structure.encoder_layers = {encoder};
  structure.decoder_layers = {decoder};
  return structure;
}

ObjectiveConfig ObjectiveSpec::resolve(const ConcreteCircuit& circuit,
                                       const GateDurations& durations) const {
  ObjectiveConfig config;
  config.t_overhead = t_overhead_override.has_value()
                          ? *t_overhead_override
                          : circuit_time_overhead(circuit, durations, measurement_duration);
  config.t_unit = t_unit;
  config.epsilon_floor = epsilon_floor;
  config.validate();
  return config;
}

TSweepResult baseline_t_sweep(BaselineKind kind, int n_qubits, const NoiseModel& noise,
                              const SignalSpec& signal, std::span<const double> t_grid,
                              const ObjectiveSpec& objective) {
  if (t_grid.empty())
    throw std::invalid_argument("time grid must be non-empty");
  ConcreteCircuit circuit = build_baseline(kind, n_qubits);
  circuit.echo = signal.echo;
  const ObjectiveConfig config = objective.resolve(circuit, noise.durations);
  const ExactBackend backend;

  std::vector<double> grid(t_grid.begin(), t_grid.end());
  std::sort(grid.begin(), grid.end());

  TSweepResult best;
  best.report.objective_value = -std::numeric_limits<double>::infinity();
  for (double t : grid) {
    ObjectiveReport report =
        evaluate_circuit(backend, circuit, signal.phase(t), t, noise, config);
    if (report.objective_value > best.report.objective_value) {
      best.t = t;
      best.report = report;
    }
  }
  return best;
}

std::vector<double> log_time_grid(double t_min, double t_max, int points) {
  if (t_min <= 0.0 || t_max <= t_min || points < 1)
    throw std::invalid_argument("bad time grid bounds");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(t_min);
    return grid;
  }
  const double step = std::log(t_max / t_min) / (points - 1);
  for (int i = 0; i < points; ++i)
    grid.push_back(t_min * std::exp(step * i));
  return grid;
}

} // namespace metroforge
