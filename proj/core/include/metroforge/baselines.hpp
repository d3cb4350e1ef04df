// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "metroforge/circuit.hpp"
#include "metroforge/metrics.hpp"

namespace metroforge {

/// The three reference protocols used as comparison oracles everywhere:
/// independent Ramsey interferometers, GHZ with uniform-H decoder, and GHZ
/// with inverse-symmetric decoder.
enum class BaselineKind { ParallelRamsey, GhzH, GhzInv };

std::string to_string(BaselineKind kind);
BaselineKind baseline_from_string(std::string_view name);

/// Gate sequences:
///   ParallelRamsey: H on every qubit | signal | H on every qubit
///   GhzH:           H0, CNOT chain   | signal | H on every qubit
///   GhzInv:         H0, CNOT chain   | signal | reversed chain, H0
ConcreteCircuit build_baseline(BaselineKind kind, int n_qubits);

/// Structure form for the mirror-symmetric baselines (ParallelRamsey and
/// GhzInv; GhzH has no structural mirror and is rejected).
CircuitStructure baseline_structure(BaselineKind kind, int n_qubits);

/// Spec of the per-circuit resolved objective terms.
struct ObjectiveSpec {
  std::optional<double> t_overhead_override;
  double measurement_duration = 1e-6; // seconds
  double t_unit = 1.0;                // seconds
  double epsilon_floor = 1e-12;

  ObjectiveConfig resolve(const ConcreteCircuit& circuit,
                          const GateDurations& durations) const;
};

struct TSweepResult {
  double t = 0.0;
  ObjectiveReport report;
};

/// Evaluates the objective on a grid of interrogation times with
/// phi = omega * t and returns the argmax; ties break toward smaller t.
TSweepResult baseline_t_sweep(BaselineKind kind, int n_qubits, const NoiseModel& noise,
                              const SignalSpec& signal, std::span<const double> t_grid,
                              const ObjectiveSpec& objective);

/// Log-spaced grid helper for time sweeps.
std::vector<double> log_time_grid(double t_min, double t_max, int points);

} // namespace metroforge
