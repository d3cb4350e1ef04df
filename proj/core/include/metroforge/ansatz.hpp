// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "metroforge/circuit.hpp"

namespace metroforge {

/// Draws a random ansatz structure under the gateset and connectivity
/// constraints: per layer, k U3 gates on distinct random qubits followed by
/// m non-repeating CNOT pairs from the graph edges. First-layer CNOT
/// controls must carry a U3 from this layer or be the target of an earlier
/// first-layer CNOT. The decoder is the structural mirror with fresh
/// parameter slots; total free parameters 6*k*l.
///
/// Deterministic per seed. Redraws degenerate or invalid structures up to a
/// retry budget and throws ProposalExhaustedError when the hyperparameters
/// admit no acceptable structure on the graph.
CircuitStructure propose(int n_qubits, const ConnectivityGraph& graph,
                         const Hyperparams& hyper, std::uint64_t seed);

/// True iff the encoder contains redundant, canceling, or spurious gates:
///  (a) two CNOTs on the same ordered pair with no gate on either qubit
///      between them,
///  (b) a CNOT whose control has no preceding single-qubit gate and was
///      never an earlier CNOT's target (control still in a Z eigenstate),
///  (c) two U3 gates on one qubit in the same layer with no entangler on
///      that qubit between them.
bool is_degenerate(const CircuitStructure& structure);

inline constexpr int kProposalRetryBudget = 1000;

} // namespace metroforge
