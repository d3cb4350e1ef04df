// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/ansatz.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "metroforge/errors.hpp"
#include "metroforge/rng.hpp"

namespace metroforge {

namespace {

bool touches(const Gate& gate, int qubit) {
  return gate.q0 == qubit || (gate.is_two_qubit() && gate.q1 == qubit);
}

// Draws one encoder attempt; returns false when the entangler constraints
// leave no legal pair to pick.
bool draw_encoder(int n_qubits, const ConnectivityGraph& graph, const Hyperparams& hyper,
                  Rng& rng, std::vector<Layer>& encoder, int& next_slot) {
  encoder.clear();
  next_slot = 0;
  for (int layer_index = 0; layer_index < hyper.layers; ++layer_index) {
    Layer layer;

    std::vector<int> qubits(static_cast<std::size_t>(n_qubits));
    std::iota(qubits.begin(), qubits.end(), 0);
    for (int i = 0; i < hyper.singles_per_layer; ++i) {
      const int j = i + rng.uniform_int(n_qubits - i);
      std::swap(qubits[static_cast<std::size_t>(i)], qubits[static_cast<std::size_t>(j)]);
    }
    std::set<int> dressed;
    for (int i = 0; i < hyper.singles_per_layer; ++i) {
      const int q = qubits[static_cast<std::size_t>(i)];
      layer.push_back(Gate::u3(q, ParamRef::slot(next_slot), ParamRef::slot(next_slot + 1),
                               ParamRef::slot(next_slot + 2)));
      next_slot += 3;
      dressed.insert(q);
    }

    std::set<std::pair<int, int>> used_pairs;
    std::vector<int> usage(static_cast<std::size_t>(n_qubits), 0);
    std::set<int> prior_targets;
    for (int e = 0; e < hyper.entanglers_per_layer; ++e) {
      std::vector<std::pair<int, int>> candidates;
      for (auto [a, b] : graph.edges) {
        for (auto [control, target] : {std::pair{a, b}, std::pair{b, a}}) {
          if (used_pairs.count({control, target}))
            continue;
          if (usage[static_cast<std::size_t>(control)] >= 2 ||
              usage[static_cast<std::size_t>(target)] >= 2)
            continue;
          if (layer_index == 0 && !dressed.count(control) && !prior_targets.count(control))
            continue;
          candidates.emplace_back(control, target);
        }
      }
      if (candidates.empty())
        return false;
      const auto [control, target] =
          candidates[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(candidates.size())))];
      layer.push_back(Gate::cnot(control, target));
      used_pairs.insert({control, target});
      ++usage[static_cast<std::size_t>(control)];
      ++usage[static_cast<std::size_t>(target)];
      prior_targets.insert(target);
    }
    encoder.push_back(std::move(layer));
  }
  return true;
}

std::vector<Layer> mirror_decoder(const std::vector<Layer>& encoder, int& next_slot) {
  std::vector<Layer> decoder;
  for (auto layer_it = encoder.rbegin(); layer_it != encoder.rend(); ++layer_it) {
    Layer mirrored;
    for (auto gate_it = layer_it->rbegin(); gate_it != layer_it->rend(); ++gate_it) {
      Gate gate = *gate_it;
      for (ParamRef& p : gate.params)
        if (p.is_slot())
          p = ParamRef::slot(next_slot++);
      mirrored.push_back(std::move(gate));
    }
    decoder.push_back(std::move(mirrored));
  }
  return decoder;
}

} // namespace

CircuitStructure propose(int n_qubits, const ConnectivityGraph& graph,
                         const Hyperparams& hyper, std::uint64_t seed) {
  if (n_qubits < 1)
    throw std::invalid_argument("need at least one qubit");
  if (hyper.layers < 1)
    throw std::invalid_argument("layer count must be at least 1");
  if (hyper.singles_per_layer < 1 || hyper.singles_per_layer > n_qubits)
    throw std::invalid_argument("single-qubit gates per layer must lie in [1, N]");
  if (hyper.entanglers_per_layer < 0 ||
      hyper.entanglers_per_layer > static_cast<int>(graph.edges.size()))
    throw std::invalid_argument("entanglers per layer must lie in [0, |edges|]");
  graph.validate();

  Rng rng(seed);
  for (int attempt = 0; attempt < kProposalRetryBudget; ++attempt) {
    CircuitStructure structure;
    structure.n_qubits = n_qubits;
    structure.hyper = hyper;
    int next_slot = 0;
    if (!draw_encoder(n_qubits, graph, hyper, rng, structure.encoder_layers, next_slot))
      continue;
    structure.decoder_layers = mirror_decoder(structure.encoder_layers, next_slot);
    structure.n_params = next_slot;
    if (structure.n_params != 6 * hyper.singles_per_layer * hyper.layers)
      throw std::logic_error("proposal produced an unexpected parameter count");
    if (!validate_structure(structure, graph).empty())
      continue;
    if (is_degenerate(structure))
      continue;
    return structure;
  }
  throw ProposalExhaustedError("no non-degenerate structure found within " +
                               std::to_string(kProposalRetryBudget) +
                               " attempts; hyperparameters may be infeasible for the graph");
}

bool is_degenerate(const CircuitStructure& structure) {
  std::vector<Gate> sequence;
  for (const Layer& layer : structure.encoder_layers)
    for (const Gate& gate : layer)
      sequence.push_back(gate);

  // (a) canceling CNOT pair: same ordered pair, nothing touching either qubit
  // in between.
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Gate& gate = sequence[i];
    if (!gate.is_two_qubit())
      continue;
    for (std::size_t j = i + 1; j < sequence.size(); ++j) {
      const Gate& later = sequence[j];
      if (!touches(later, gate.q0) && !touches(later, gate.q1))
        continue;
      if (later.is_two_qubit() && later.q0 == gate.q0 && later.q1 == gate.q1)
        return true;
      break;
    }
  }

  // (b) spurious CNOT: control still in a Z eigenstate.
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const Gate& gate = sequence[i];
    if (!gate.is_two_qubit())
      continue;
    bool prepared = false;
    for (std::size_t j = 0; j < i; ++j) {
      const Gate& earlier = sequence[j];
      if ((!earlier.is_two_qubit() && earlier.q0 == gate.q0) ||
          (earlier.is_two_qubit() && earlier.q1 == gate.q0)) {
        prepared = true;
        break;
      }
    }
    if (!prepared)
      return true;
  }

  // (c) two U3 gates on a qubit in one layer with no entangler between them.
  for (const Layer& layer : structure.encoder_layers) {
    std::vector<int> open;
    for (const Gate& gate : layer) {
      if (gate.kind == GateKind::U3) {
        if (std::find(open.begin(), open.end(), gate.q0) != open.end())
          return true;
        open.push_back(gate.q0);
      } else if (gate.is_two_qubit()) {
        std::erase(open, gate.q0);
        std::erase(open, gate.q1);
      }
    }
  }

  return false;
}

} // namespace metroforge
