// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metroforge/baselines.hpp"
#include "metroforge/optimize.hpp"
#include "metroforge/quadrature.hpp"

namespace metroforge {

/// Distribution of the accumulated signal angle, for optimization against a
/// non-constant signal. Expectations use fixed quadrature nodes.
struct SignalDistribution {
  enum class Kind { Uniform, Gaussian };
  Kind kind = Kind::Gaussian;
  double mean = 1.0;   // radians
  double stddev = 0.1; // radians
  double lo = 0.0;     // radians, uniform
  double hi = 6.283185307179586;
  int nodes = 9;

  std::vector<QuadratureNode> quadrature() const;
  void validate() const; // throws ConfigError
};

/// A hyperparameter entry whose k and m may be written relative to the qubit
/// count ("n", "n-1", ...), resolved per N.
struct HyperTemplate {
  int layers = 1;
  bool k_relative = false;
  int k_value = 1; // k = k_value, or N + k_value when relative
  bool m_relative = false;
  int m_value = 0;

  Hyperparams resolve(int n_qubits, const ConnectivityGraph& graph) const;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::vector<int> qubit_range;
  std::optional<std::uint64_t> seed;
  int iter_max = 30;
  std::string output_dir = "results";
  int threads = 0; // 0: METROFORGE_THREADS env or hardware concurrency

  NoiseModel noise;

  std::string graph_kind = "chain"; // chain | complete | edges
  std::vector<std::pair<int, int>> graph_edges;
  int graph_n_qubits = 0; // with kind = edges

  SignalSpec signal;
  std::optional<SignalDistribution> distribution;
  std::vector<double> study_sigmas{0.1, 0.3, 0.6, 1.0};

  ObjectiveSpec objective;
  OptimizerSettings optimizer;
  std::vector<HyperTemplate> hyper_schedule;

  int t_grid_points = 60;
  double t_grid_min = 1e-6; // seconds
  double t_grid_max = 5e-4; // seconds

  double decomposition_t = 20e-6; // seconds, fixed probing time

  std::optional<long> shots;

  ConnectivityGraph graph_for(int n_qubits) const;
  std::vector<Hyperparams> schedule_for(int n_qubits, const ConnectivityGraph& graph) const;
  int resolve_threads() const;
  void validate() const; // throws ConfigError
};

ExperimentConfig config_from_toml_file(const std::string& path);
ExperimentConfig config_from_json_text(std::string_view json_text);

/// Canonical (sorted-key) JSON form of the config; the basis of the config
/// hash and the config-echo output.
std::string config_canonical_json(const ExperimentConfig& config);
std::string config_hash_hex(const ExperimentConfig& config);

struct ResultRow {
  std::string experiment;
  int n = 0;
  std::string protocol;
  double cfi_phi = 0.0;
  double cfi_omega = 0.0;
  double qfi = 0.0;
  double t_star = 0.0; // seconds
  double objective = 0.0;
  double snr_bound = 0.0;
  std::uint64_t seed = 0;
};

struct DecompositionRow {
  std::string protocol;
  std::string stage;
  double value = 0.0;
  double region = 0.0;
};

struct ResultRecord {
  std::string experiment_id;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::vector<ResultRow> rows;
  std::vector<DecompositionRow> decomposition;
  std::vector<std::string> errors;        // per-N failures, run continues
  std::vector<std::string> search_jsons;  // serialized SearchResults
};

std::string record_to_json(const ResultRecord& record, int indent = 2);
std::string record_to_csv(const ResultRecord& record);
std::string decomposition_to_csv(const std::vector<DecompositionRow>& rows);

enum class Ablation { RemoveGateNoise, RemoveReadoutNoise, SuppressT1T2x10 };

std::string to_string(Ablation ablation);
Ablation ablation_from_string(std::string_view name);
NoiseModel apply_ablation(const NoiseModel& noise, Ablation ablation);

/// Baselines (t-sweep) plus the full structure search, for every N in the
/// qubit range. Per-N failures are recorded as error entries.
ResultRecord run_scaling_study(const ExperimentConfig& config, std::uint64_t seed);

/// Scaling study under a modified noise model.
ResultRecord run_ablation_study(const ExperimentConfig& config, Ablation ablation,
                                std::uint64_t seed);

/// Structure search only, for a single qubit count.
ResultRecord run_optimize(const ExperimentConfig& config, int n_qubits, std::uint64_t seed);

/// Per-stage information decomposition at the configured operating point for
/// the named circuits ("parallel-ramsey", "ghz-h", "ghz-inv", or a search
/// result JSON path).
ResultRecord run_decomposition(const ExperimentConfig& config,
                               const std::vector<std::string>& circuit_sources);

/// Optimizes against the uniform angle prior and against Gaussian priors of
/// each study sigma; reports both evaluated on the Gaussian, plus baselines.
ResultRecord run_signal_distribution_study(const ExperimentConfig& config,
                                           std::uint64_t seed);

/// Single baseline evaluation (t-sweep, or fixed operating point when the
/// grid has one entry).
ResultRecord run_baseline(const ExperimentConfig& config, BaselineKind kind, int n_qubits);

/// Writes results.csv, results.json, config_echo.json (and decomposition.csv
/// when present) into output_dir with atomic renames.
void write_outputs(const ResultRecord& record, const ExperimentConfig& config);

} // namespace metroforge
