// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <nlohmann/json.hpp>

#include "metroforge/circuit.hpp"

namespace metroforge {

using nlohmann::json;

namespace {

json gate_to_json(const Gate& gate) {
  json j;
  j["kind"] = to_string(gate.kind);
  if (gate.is_two_qubit())
    j["qubits"] = {gate.q0, gate.q1};
  else
    j["qubits"] = {gate.q0};
  json params = json::array();
  for (const ParamRef& p : gate.params) {
    if (p.is_slot())
      params.push_back(json{{"slot", p.slot_index()}});
    else
      params.push_back(p.bound_value());
  }
  j["params"] = params;
  return j;
}

Gate gate_from_json(const json& j) {
  Gate gate;
  gate.kind = gate_kind_from_string(j.at("kind").get<std::string>());
  const auto& qubits = j.at("qubits");
  gate.q0 = qubits.at(0).get<int>();
  gate.q1 = gate.kind == GateKind::CNOT ? qubits.at(1).get<int>() : -1;
  for (const auto& p : j.at("params")) {
    if (p.is_object())
      gate.params.push_back(ParamRef::slot(p.at("slot").get<int>()));
    else
      gate.params.push_back(ParamRef::value(p.get<double>()));
  }
  if (static_cast<int>(gate.params.size()) != param_count(gate.kind))
    throw std::invalid_argument("gate " + to_string(gate.kind) + " expects " +
                                std::to_string(param_count(gate.kind)) + " params");
  return gate;
}

json layers_to_json(const std::vector<Layer>& layers) {
  json out = json::array();
  for (const Layer& layer : layers) {
    json jl = json::array();
    for (const Gate& gate : layer)
      jl.push_back(gate_to_json(gate));
    out.push_back(jl);
  }
  return out;
}

std::vector<Layer> layers_from_json(const json& j) {
  std::vector<Layer> layers;
  for (const auto& jl : j) {
    Layer layer;
    for (const auto& jg : jl)
      layer.push_back(gate_from_json(jg));
    layers.push_back(std::move(layer));
  }
  return layers;
}

} // namespace

std::string structure_to_json(const CircuitStructure& structure, int indent) {
  json j;
  j["n_qubits"] = structure.n_qubits;
  j["hyperparams"] = {{"l", structure.hyper.layers},
                      {"k", structure.hyper.singles_per_layer},
                      {"m", structure.hyper.entanglers_per_layer}};
  j["n_params"] = structure.n_params;
  j["encoder"] = layers_to_json(structure.encoder_layers);
  j["decoder"] = layers_to_json(structure.decoder_layers);
  return j.dump(indent);
}

CircuitStructure structure_from_json(std::string_view text) {
  const json j = json::parse(text);
  CircuitStructure structure;
  structure.n_qubits = j.at("n_qubits").get<int>();
  const auto& hyper = j.at("hyperparams");
  structure.hyper.layers = hyper.at("l").get<int>();
  structure.hyper.singles_per_layer = hyper.at("k").get<int>();
  structure.hyper.entanglers_per_layer = hyper.at("m").get<int>();
  structure.n_params = j.at("n_params").get<int>();
  structure.encoder_layers = layers_from_json(j.at("encoder"));
  structure.decoder_layers = layers_from_json(j.at("decoder"));
  return structure;
}

} // namespace metroforge
