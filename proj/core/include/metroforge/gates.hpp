// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "metroforge/errors.hpp"

namespace metroforge {

enum class GateKind { U3, CNOT, H, X, Rz };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Number of angle parameters a gate kind carries (3 for U3, 1 for Rz, else 0).
int param_count(GateKind kind);

/// An angle that is either a bound value or a reference to a free-parameter
/// slot of the owning circuit structure.
class ParamRef {
public:
  ParamRef() = default;

  static ParamRef value(double v) {
    ParamRef p;
    p.value_ = v;
    return p;
  }

  static ParamRef slot(int index) {
    ParamRef p;
    p.slot_ = index;
    return p;
  }

  bool is_slot() const { return slot_ >= 0; }

  double bound_value() const {
    if (is_slot())
      throw UnboundSlotError("parameter slot " + std::to_string(slot_) + " has no bound value");
    return value_;
  }

  int slot_index() const { return slot_; }

private:
  double value_ = 0.0;
  int slot_ = -1;
};

/// One gate of a parameterized circuit. q0 is the acted-on qubit for
/// single-qubit gates and the control for CNOT; q1 is the CNOT target.
struct Gate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  std::vector<ParamRef> params;

  static Gate u3(int q, ParamRef theta, ParamRef phi, ParamRef lambda);
  static Gate cnot(int control, int target);
  static Gate h(int q);
  static Gate x(int q);
  static Gate rz(int q, ParamRef angle);

  bool is_two_qubit() const { return kind == GateKind::CNOT; }
};

/// A gate with all angles bound to concrete values; what the simulator runs.
struct BoundGate {
  GateKind kind = GateKind::H;
  int q0 = 0;
  int q1 = -1;
  std::array<double, 3> params{0.0, 0.0, 0.0};

  static BoundGate u3(int q, double theta, double phi, double lambda);
  static BoundGate cnot(int control, int target);
  static BoundGate h(int q);
  static BoundGate x(int q);
  static BoundGate rz(int q, double angle);

  bool is_two_qubit() const { return kind == GateKind::CNOT; }
};

// U3(theta, phi, lambda) = [[cos(t/2), -e^{i l} sin(t/2)],
//                           [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]]
Eigen::Matrix2cd u3_matrix(double theta, double phi, double lambda);

// Rz(a) = diag(e^{-i a/2}, e^{+i a/2})
Eigen::Matrix2cd rz_matrix(double angle);

Eigen::Matrix2cd h_matrix();
Eigen::Matrix2cd x_matrix();
Eigen::Matrix2cd y_matrix();
Eigen::Matrix2cd z_matrix();

/// CNOT on the local ordered pair (control, target); basis order
/// |c t> = |00>, |01>, |10>, |11>.
Eigen::Matrix4cd cnot_matrix();

/// Exact unitary of a fully bound gate (2x2, or 4x4 for CNOT).
/// Throws UnboundSlotError if any parameter is still a free slot.
Eigen::MatrixXcd gate_unitary(const Gate& gate);
Eigen::MatrixXcd gate_unitary(const BoundGate& gate);

} // namespace metroforge
