// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace metroforge {

namespace {
using namespace std::complex_literals;
}

std::string to_string(GateKind kind) {
  switch (kind) {
  case GateKind::U3:
    return "u3";
  case GateKind::CNOT:
    return "cnot";
  case GateKind::H:
    return "h";
  case GateKind::X:
    return "x";
  case GateKind::Rz:
    return "rz";
  }
  throw std::logic_error("unknown gate kind");
}

GateKind gate_kind_from_string(std::string_view name) {
  if (name == "u3")
    return GateKind::U3;
  if (name == "cnot")
    return GateKind::CNOT;
  if (name == "h")
    return GateKind::H;
  if (name == "x")
    return GateKind::X;
  if (name == "rz")
    return GateKind::Rz;
  throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

int param_count(GateKind kind) {
  switch (kind) {
  case GateKind::U3:
    return 3;
  case GateKind::Rz:
    return 1;
  default:
    return 0;
  }
}

Gate Gate::u3(int q, ParamRef theta, ParamRef phi, ParamRef lambda) {
  return Gate{GateKind::U3, q, -1, {theta, phi, lambda}};
}

Gate Gate::cnot(int control, int target) {
  if (control == target)
    throw std::invalid_argument("cnot control and target must differ");
  return Gate{GateKind::CNOT, control, target, {}};
}

Gate Gate::h(int q) { return Gate{GateKind::H, q, -1, {}}; }

Gate Gate::x(int q) { return Gate{GateKind::X, q, -1, {}}; }

Gate Gate::rz(int q, ParamRef angle) { return Gate{GateKind::Rz, q, -1, {angle}}; }

BoundGate BoundGate::u3(int q, double theta, double phi, double lambda) {
  return BoundGate{GateKind::U3, q, -1, {theta, phi, lambda}};
}

BoundGate BoundGate::cnot(int control, int target) {
  if (control == target)
    throw std::invalid_argument("cnot control and target must differ");
  return BoundGate{GateKind::CNOT, control, target, {}};
}

BoundGate BoundGate::h(int q) { return BoundGate{GateKind::H, q, -1, {}}; }

BoundGate BoundGate::x(int q) { return BoundGate{GateKind::X, q, -1, {}}; }

BoundGate BoundGate::rz(int q, double angle) {
  return BoundGate{GateKind::Rz, q, -1, {angle, 0.0, 0.0}};
}

Eigen::Matrix2cd u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Eigen::Matrix2cd u;
  u(0, 0) = c;
  u(0, 1) = -std::exp(1i * lambda) * s;
  u(1, 0) = std::exp(1i * phi) * s;
  u(1, 1) = std::exp(1i * (phi + lambda)) * c;
  return u;
}

Eigen::Matrix2cd rz_matrix(double angle) {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  u(0, 0) = std::exp(-1i * (angle / 2.0));
  u(1, 1) = std::exp(1i * (angle / 2.0));
  return u;
}

Eigen::Matrix2cd h_matrix() {
  Eigen::Matrix2cd u;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  u << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
  return u;
}

Eigen::Matrix2cd x_matrix() {
  Eigen::Matrix2cd u;
  u << 0, 1, 1, 0;
  return u;
}

Eigen::Matrix2cd y_matrix() {
  Eigen::Matrix2cd u;
  u << 0.0 + 0.0i, -1i, 1i, 0.0 + 0.0i;
  return u;
}

Eigen::Matrix2cd z_matrix() {
  Eigen::Matrix2cd u;
  u << 1, 0, 0, -1;
  return u;
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  u(0, 0) = 1;
  u(1, 1) = 1;
  u(2, 3) = 1;
  u(3, 2) = 1;
  return u;
}

Eigen::MatrixXcd gate_unitary(const Gate& gate) {
  switch (gate.kind) {
  case GateKind::U3:
    return u3_matrix(gate.params[0].bound_value(), gate.params[1].bound_value(),
                     gate.params[2].bound_value());
  case GateKind::CNOT:
    return cnot_matrix();
  case GateKind::H:
    return h_matrix();
  case GateKind::X:
    return x_matrix();
  case GateKind::Rz:
    return rz_matrix(gate.params[0].bound_value());
  }
  throw std::logic_error("unknown gate kind");
}

Eigen::MatrixXcd gate_unitary(const BoundGate& gate) {
  switch (gate.kind) {
  case GateKind::U3:
    return u3_matrix(gate.params[0], gate.params[1], gate.params[2]);
  case GateKind::CNOT:
    return cnot_matrix();
  case GateKind::H:
    return h_matrix();
  case GateKind::X:
    return x_matrix();
  case GateKind::Rz:
    return rz_matrix(gate.params[0]);
  }
  throw std::logic_error("unknown gate kind");
}

} // namespace metroforge
