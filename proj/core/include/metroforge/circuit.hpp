// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metroforge/gates.hpp"

namespace metroforge {

/// Undirected coupling map of the device. Edges are stored normalized with
/// the smaller index first; CNOTs may use either orientation of an edge.
struct ConnectivityGraph {
  int n_qubits = 0;
  std::vector<std::pair<int, int>> edges;

  static ConnectivityGraph chain(int n_qubits);
  static ConnectivityGraph complete(int n_qubits);

  bool has_edge(int a, int b) const;
  bool has_chain() const; // edges {i, i+1} for all i
  void add_edge(int a, int b);
  void validate() const; // throws std::invalid_argument on bad invariants
};

/// Ansatz hyperparameters: l layers, k single-qubit gates per layer,
/// m entanglement gates per layer.
struct Hyperparams {
  int layers = 1;             // l
  int singles_per_layer = 1;  // k
  int entanglers_per_layer = 0; // m
};

using Layer = std::vector<Gate>;

/// A parameterized encoder/decoder gate sequence with free-parameter slots.
/// The decoder is the structural mirror of the encoder (reversed gate order,
/// same kinds and qubit placements) with an independent set of slots.
struct CircuitStructure {
  int n_qubits = 0;
  std::vector<Layer> encoder_layers;
  std::vector<Layer> decoder_layers;
  int n_params = 0;
  Hyperparams hyper;
};

/// Values for every free parameter slot plus the interrogation time.
struct ParameterAssignment {
  std::vector<double> theta;
  double interrogation_time = 0.0; // seconds
};

/// The sensed signal: an Rz rotation applied uniformly to all qubits with
/// accumulated angle phi = omega * t over interrogation time t.
struct SignalSpec {
  double omega = 0.0; // rad/s
  bool echo = false;

  double phase(double t) const { return omega * t; }
};

/// A fully bound gate sequence. The signal block sits between encoder and
/// decoder as an implicit placeholder; the signal angle is injected at
/// simulation time so one bound circuit serves many phase values.
struct ConcreteCircuit {
  int n_qubits = 0;
  std::vector<BoundGate> encoder;
  std::vector<BoundGate> decoder;
  bool echo = false;
};

/// Binds every free slot of the structure to the assignment's theta values.
/// Throws LengthMismatchError if theta length differs from n_params and
/// UnboundSlotError if a slot index falls outside the array.
ConcreteCircuit bind_parameters(const CircuitStructure& structure,
                                const ParameterAssignment& assignment);

enum class ViolationKind { EdgeNotInGraph, IndexOutOfRange, DecoderAsymmetry };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string to_string(ViolationKind kind);

/// Structural validation: CNOTs on graph edges, indices in range, and the
/// decoder an exact structural mirror of the encoder. Returns all violations
/// found (empty means Ok).
std::vector<Violation> validate_structure(const CircuitStructure& structure,
                                          const ConnectivityGraph& graph);

/// JSON round-trip of circuit structures. Parameter slots serialize as
/// {"slot": i}, bound angles as plain numbers.
std::string structure_to_json(const CircuitStructure& structure, int indent = -1);
CircuitStructure structure_from_json(std::string_view text);

} // namespace metroforge
