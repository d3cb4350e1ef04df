// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/metrics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "metroforge/errors.hpp"
#include "metroforge/rng.hpp"

namespace metroforge {

void ObjectiveConfig::validate() const {
  if (t_overhead < 0.0)
    throw ConfigError("t_overhead must be non-negative");
  if (t_unit <= 0.0)
    throw ConfigError("T_unit must be positive");
  if (epsilon_floor <= 0.0 || epsilon_floor > 1e-6)
    throw ConfigError("epsilon_floor must lie in (0, 1e-6]");
}

std::string ObjectiveReport::to_json(int indent) const {
  std::ostringstream os;
  os.precision(17);
  os << "{\"cfi_phi\":" << cfi_phi << ",\"cfi_omega\":" << cfi_omega
     << ",\"qfi_phi\":" << qfi_phi << ",\"t_s\":" << t
     << ",\"objective\":" << objective_value << "}";
  (void)indent;
  return os.str();
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::vector<double> uniform_phases(int n, double phi) {
  return std::vector<double>(static_cast<std::size_t>(n), phi);
}

} // namespace

std::vector<double> signal_derivative_param_shift(const EvaluationBackend& backend,
                                                  const ConcreteCircuit& circuit, double phi,
                                                  double t, const NoiseModel& noise,
                                                  std::optional<long> shots,
                                                  std::optional<std::uint64_t> seed) {
  const int n = circuit.n_qubits;
  std::vector<double> derivative(std::size_t{1} << n, 0.0);
  std::vector<double> phases = uniform_phases(n, phi);
  for (int q = 0; q < n; ++q) {
    auto shifted_seed = [&](int sign) -> std::optional<std::uint64_t> {
      if (!seed.has_value())
        return {};
      return derive_seed(*seed, static_cast<std::uint64_t>(2 * q + (sign > 0 ? 1 : 2)));
    };
    phases[static_cast<std::size_t>(q)] = phi + kHalfPi;
    const OutcomeDistribution plus =
        backend.evaluate(circuit, phases, t, noise, shots, shifted_seed(+1));
    phases[static_cast<std::size_t>(q)] = phi - kHalfPi;
    const OutcomeDistribution minus =
        backend.evaluate(circuit, phases, t, noise, shots, shifted_seed(-1));
    phases[static_cast<std::size_t>(q)] = phi;
    for (std::size_t x = 0; x < derivative.size(); ++x)
      derivative[x] += 0.5 * (plus.probs[x] - minus.probs[x]);
  }
  return derivative;
}

double cfi_phi(const EvaluationBackend& backend, const ConcreteCircuit& circuit, double phi,
               double t, const NoiseModel& noise, std::optional<long> shots,
               std::optional<std::uint64_t> seed, CfiDiagnostics* diagnostics,
               std::optional<double> floor_override) {
  double floor = 1e-12;
  if (!backend.is_exact())
    floor = 0.5 / static_cast<double>(shots.value_or(1000));
  if (floor_override.has_value())
    floor = *floor_override;

  const std::optional<std::uint64_t> base_seed =
      seed.has_value() ? std::optional<std::uint64_t>(derive_seed(*seed, 0)) : std::nullopt;
  const OutcomeDistribution probs =
      backend.evaluate_uniform(circuit, phi, t, noise, shots, base_seed);
  const std::vector<double> derivative =
      signal_derivative_param_shift(backend, circuit, phi, t, noise, shots, seed);

  double cfi = 0.0;
  int flagged = 0;
  const double flag_threshold = std::sqrt(floor);
  for (std::size_t x = 0; x < derivative.size(); ++x) {
    const double p = probs.probs[x];
    const double dp = derivative[x];
    if (p < floor && std::abs(dp) > flag_threshold)
      ++flagged;
    cfi += dp * dp / std::max(p, floor);
  }
  if (diagnostics != nullptr) {
    diagnostics->flagged_outcomes = flagged;
    diagnostics->floor_used = floor;
  }
  return cfi;
}

double qfi_from_state(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& drho,
                      double eigenvalue_cutoff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  const Eigen::VectorXd lambda = solver.eigenvalues();
  const Eigen::MatrixXcd v = solver.eigenvectors();
  const Eigen::MatrixXcd b = v.adjoint() * drho * v;

  double qfi = 0.0;
  const Eigen::Index d = lambda.size();
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      const double denom = lambda(j) + lambda(k);
      if (denom <= eigenvalue_cutoff)
        continue;
      qfi += 2.0 * std::norm(b(j, k)) / denom;
    }
  }
  return qfi;
}

namespace {

// Final-state density matrix and its exact signal derivative, the per-qubit
// shift rule applied at the state level.
struct StateAndDerivative {
  Eigen::MatrixXcd rho;
  Eigen::MatrixXcd drho;
};

template <typename RunFn>
StateAndDerivative state_derivative(int n_qubits, double phi, RunFn&& run) {
  StateAndDerivative out;
  out.rho = run(uniform_phases(n_qubits, phi)).matrix();
  out.drho = Eigen::MatrixXcd::Zero(out.rho.rows(), out.rho.cols());
  std::vector<double> phases = uniform_phases(n_qubits, phi);
  for (int q = 0; q < n_qubits; ++q) {
    phases[static_cast<std::size_t>(q)] = phi + kHalfPi;
    const Eigen::MatrixXcd plus = run(phases).matrix();
    phases[static_cast<std::size_t>(q)] = phi - kHalfPi;
    const Eigen::MatrixXcd minus = run(phases).matrix();
    phases[static_cast<std::size_t>(q)] = phi;
    out.drho += 0.5 * (plus - minus);
  }
  return out;
}

} // namespace

double qfi_phi(const ConcreteCircuit& circuit, double phi, double t, const NoiseModel& noise) {
  const auto sd = state_derivative(circuit.n_qubits, phi, [&](const std::vector<double>& ph) {
    return run_circuit(circuit, ph, t, noise);
  });
  return qfi_from_state(sd.rho, sd.drho);
}

double qfi_phi(const CircuitStructure& structure, const ParameterAssignment& assignment,
               double phi, const NoiseModel& noise, bool echo) {
  ConcreteCircuit circuit = bind_parameters(structure, assignment);
  circuit.echo = echo;
  return qfi_phi(circuit, phi, assignment.interrogation_time, noise);
}

double objective_value(double cfi_phi_value, double t, const ObjectiveConfig& config) {
  if (t <= 0.0)
    throw std::invalid_argument("interrogation time must be positive");
  return t * t * cfi_phi_value / (t + config.t_overhead) * config.t_unit;
}

double snr_bound(double cfi_omega_value, double repetitions) {
  if (repetitions < 1.0)
    throw std::invalid_argument("repetition count must be at least 1");
  return std::sqrt(repetitions * std::max(cfi_omega_value, 0.0));
}

ObjectiveReport evaluate_circuit(const EvaluationBackend& backend,
                                 const ConcreteCircuit& circuit, double phi, double t,
                                 const NoiseModel& noise, const ObjectiveConfig& config,
                                 std::optional<long> shots,
                                 std::optional<std::uint64_t> seed) {
  ObjectiveReport report;
  report.t = t;
  report.cfi_phi = cfi_phi(backend, circuit, phi, t, noise, shots, seed, nullptr,
                           backend.is_exact() ? std::optional<double>(config.epsilon_floor)
                                              : std::nullopt);
  report.cfi_omega = cfi_omega_from_phi(report.cfi_phi, t);
  report.qfi_phi = qfi_phi(circuit, phi, t, noise);
  report.objective_value = objective_value(report.cfi_phi, t, config);
  return report;
}

namespace {

// Encoder and signal block only; where the decomposition reads the
// information still present in the state.
DensityMatrix run_to_post_signal(const ConcreteCircuit& circuit,
                                 const std::vector<double>& phases, double t,
                                 const NoiseModel& noise) {
  DensityMatrix rho(circuit.n_qubits);
  for (const BoundGate& gate : circuit.encoder)
    apply_gate(rho, gate, noise);
  apply_signal_block(rho, phases, t, noise, circuit.echo);
  return rho;
}

} // namespace

std::vector<StageValue> stage_qfi_decomposition(const ConcreteCircuit& circuit, double phi,
                                                double t, const NoiseModel& noise) {
  const ExactBackend exact;
  std::vector<StageValue> stages;

  // All noise on: what the measured distribution actually delivers.
  stages.push_back({"full_noise", cfi_phi(exact, circuit, phi, t, noise)});

  // Ideal readout: information in the pre-measurement state.
  {
    const auto sd = state_derivative(circuit.n_qubits, phi, [&](const std::vector<double>& ph) {
      return run_circuit(circuit, ph, t, noise);
    });
    stages.push_back({"ideal_readout", qfi_from_state(sd.rho, sd.drho)});
  }

  // Ideal decoder (and readout): information right after the signal block.
  {
    const auto sd = state_derivative(circuit.n_qubits, phi, [&](const std::vector<double>& ph) {
      return run_to_post_signal(circuit, ph, t, noise);
    });
    stages.push_back({"ideal_decoder", qfi_from_state(sd.rho, sd.drho)});
  }

  // Ideal interrogation: decoherence off, encoder noise still on.
  {
    NoiseModel no_decoherence = noise;
    no_decoherence.interrogation_noise_enabled = false;
    const auto sd = state_derivative(circuit.n_qubits, phi, [&](const std::vector<double>& ph) {
      return run_to_post_signal(circuit, ph, t, no_decoherence);
    });
    stages.push_back({"ideal_interrogation", qfi_from_state(sd.rho, sd.drho)});
  }

  // Ideal encoder: fully noiseless information capacity of the protocol.
  {
    NoiseModel ideal = noise;
    ideal.interrogation_noise_enabled = false;
    ideal.gate_noise_enabled = false;
    const auto sd = state_derivative(circuit.n_qubits, phi, [&](const std::vector<double>& ph) {
      return run_to_post_signal(circuit, ph, t, ideal);
    });
    stages.push_back({"ideal_encoder", qfi_from_state(sd.rho, sd.drho)});
  }

  return stages;
}

double circuit_time_overhead(const ConcreteCircuit& circuit, const GateDurations& durations,
                             double measurement_duration) {
  auto critical_path = [&](const std::vector<BoundGate>& gates) {
    std::vector<double> finish(static_cast<std::size_t>(circuit.n_qubits), 0.0);
    for (const BoundGate& gate : gates) {
      const double duration = durations.of(gate.kind);
      if (gate.is_two_qubit()) {
        const double start = std::max(finish[static_cast<std::size_t>(gate.q0)],
                                      finish[static_cast<std::size_t>(gate.q1)]);
        finish[static_cast<std::size_t>(gate.q0)] = start + duration;
        finish[static_cast<std::size_t>(gate.q1)] = start + duration;
      } else {
        finish[static_cast<std::size_t>(gate.q0)] += duration;
      }
    }
    double longest = 0.0;
    for (double f : finish)
      longest = std::max(longest, f);
    return longest;
  };
  return critical_path(circuit.encoder) + critical_path(circuit.decoder) +
         measurement_duration;
}

} // namespace metroforge
