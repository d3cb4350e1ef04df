// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/circuit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace metroforge {

ConnectivityGraph ConnectivityGraph::chain(int n_qubits) {
  ConnectivityGraph g;
  g.n_qubits = n_qubits;
  for (int i = 0; i + 1 < n_qubits; ++i)
    g.edges.emplace_back(i, i + 1);
  return g;
}

ConnectivityGraph ConnectivityGraph::complete(int n_qubits) {
  ConnectivityGraph g;
  g.n_qubits = n_qubits;
  for (int a = 0; a < n_qubits; ++a)
    for (int b = a + 1; b < n_qubits; ++b)
      g.edges.emplace_back(a, b);
  return g;
}

bool ConnectivityGraph::has_edge(int a, int b) const {
  if (a > b)
    std::swap(a, b);
  return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

bool ConnectivityGraph::has_chain() const {
  for (int i = 0; i + 1 < n_qubits; ++i)
    if (!has_edge(i, i + 1))
      return false;
  return true;
}

void ConnectivityGraph::add_edge(int a, int b) {
  if (a > b)
    std::swap(a, b);
  if (!has_edge(a, b))
    edges.emplace_back(a, b);
}

void ConnectivityGraph::validate() const {
  if (n_qubits <= 0)
    throw std::invalid_argument("connectivity graph must have at least one qubit");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a == b)
      throw std::invalid_argument("connectivity graph contains a self-loop");
    if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits)
      throw std::invalid_argument("connectivity edge index out of range");
    auto norm = std::minmax(a, b);
    if (!seen.insert({norm.first, norm.second}).second)
      throw std::invalid_argument("connectivity graph contains a duplicate edge");
  }
}

namespace {

void bind_layer(const Layer& layer, const std::vector<double>& theta,
                std::vector<BoundGate>& out) {
  for (const Gate& gate : layer) {
    BoundGate bound;
    bound.kind = gate.kind;
    bound.q0 = gate.q0;
    bound.q1 = gate.q1;
    for (std::size_t i = 0; i < gate.params.size(); ++i) {
      const ParamRef& p = gate.params[i];
      if (p.is_slot()) {
        const int slot = p.slot_index();
        if (slot < 0 || slot >= static_cast<int>(theta.size()))
          throw UnboundSlotError("slot " + std::to_string(slot) +
                                 " is outside the bound parameter array");
        bound.params[i] = theta[static_cast<std::size_t>(slot)];
      } else {
        bound.params[i] = p.bound_value();
      }
    }
    out.push_back(bound);
  }
}

} // namespace

ConcreteCircuit bind_parameters(const CircuitStructure& structure,
                                const ParameterAssignment& assignment) {
  if (static_cast<int>(assignment.theta.size()) != structure.n_params)
    throw LengthMismatchError("parameter array length " +
                              std::to_string(assignment.theta.size()) +
                              " does not match structure n_params " +
                              std::to_string(structure.n_params));
  ConcreteCircuit circuit;
  circuit.n_qubits = structure.n_qubits;
  for (const Layer& layer : structure.encoder_layers)
    bind_layer(layer, assignment.theta, circuit.encoder);
  for (const Layer& layer : structure.decoder_layers)
    bind_layer(layer, assignment.theta, circuit.decoder);
  return circuit;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
  case ViolationKind::EdgeNotInGraph:
    return "EdgeNotInGraph";
  case ViolationKind::IndexOutOfRange:
    return "IndexOutOfRange";
  case ViolationKind::DecoderAsymmetry:
    return "DecoderAsymmetry";
  }
  return "?";
}

namespace {

void check_gates(const std::vector<Layer>& layers, const char* which, int n_qubits,
                 const ConnectivityGraph& graph, std::vector<Violation>& out) {
  for (std::size_t li = 0; li < layers.size(); ++li) {
    for (const Gate& gate : layers[li]) {
      const std::string where =
          std::string(which) + " layer " + std::to_string(li) + " " + to_string(gate.kind);
      if (gate.q0 < 0 || gate.q0 >= n_qubits ||
          (gate.is_two_qubit() && (gate.q1 < 0 || gate.q1 >= n_qubits)))
        out.push_back({ViolationKind::IndexOutOfRange, where + " qubit index out of range"});
      else if (gate.is_two_qubit() && !graph.has_edge(gate.q0, gate.q1))
        out.push_back({ViolationKind::EdgeNotInGraph,
                       where + " uses edge (" + std::to_string(gate.q0) + "," +
                           std::to_string(gate.q1) + ") not in graph"});
    }
  }
}

struct GateShape {
  GateKind kind;
  int q0;
  int q1;
  bool operator==(const GateShape&) const = default;
};

std::vector<GateShape> flatten_shapes(const std::vector<Layer>& layers, bool reversed) {
  std::vector<GateShape> shapes;
  for (const Layer& layer : layers)
    for (const Gate& gate : layer)
      shapes.push_back({gate.kind, gate.q0, gate.q1});
  if (reversed)
    std::reverse(shapes.begin(), shapes.end());
  return shapes;
}

} // namespace

std::vector<Violation> validate_structure(const CircuitStructure& structure,
                                          const ConnectivityGraph& graph) {
  std::vector<Violation> violations;
  const int n = structure.n_qubits;
  if (graph.n_qubits < n)
    violations.push_back({ViolationKind::IndexOutOfRange,
                          "graph has fewer qubits than the structure"});
  check_gates(structure.encoder_layers, "encoder", n, graph, violations);
  check_gates(structure.decoder_layers, "decoder", n, graph, violations);

  const auto encoder = flatten_shapes(structure.encoder_layers, false);
  const auto mirrored_decoder = flatten_shapes(structure.decoder_layers, true);
  if (encoder != mirrored_decoder)
    violations.push_back({ViolationKind::DecoderAsymmetry,
                          "decoder is not the reversed structural mirror of the encoder"});
  return violations;
}

} // namespace metroforge
