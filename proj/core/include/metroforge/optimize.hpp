// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "metroforge/ansatz.hpp"
#include "metroforge/circuit.hpp"

namespace metroforge {

enum class OptimizerKind { NelderMead, Powell };

std::string to_string(OptimizerKind kind);
OptimizerKind optimizer_from_string(std::string_view name);

struct OptimizerSettings {
  OptimizerKind kind = OptimizerKind::Powell;
  int max_evaluations = 2000; // per restart
  double x_tolerance = 1e-6;
  double f_tolerance = 1e-6; // relative
  double t_min = 1e-6;       // seconds
  double t_max = 1e-3;       // seconds
  double t_init = 1e-5;      // seconds, clipped into [t_min, t_max]
  int restarts = 1;

  void validate() const; // throws ConfigError
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

struct MinimizeOptions {
  int max_evaluations = 2000;
  double x_tolerance = 1e-6;
  double f_tolerance = 1e-6;
  double initial_step = 0.5;
  double line_tolerance = 1e-4; // golden-section width, in step units
};

struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  int evaluations = 0;
  bool budget_exhausted = false;
};

/// Downhill simplex with the standard reflection/expansion/contraction/shrink
/// coefficients 1, 2, 0.5, 0.5. Returns the incumbent (best point evaluated).
MinimizeResult nelder_mead(const ObjectiveFn& f, std::vector<double> x0,
                           const MinimizeOptions& options);

/// Direction-set method with a bracketing golden-section line search and
/// Powell's direction-replacement rule. Returns the incumbent.
MinimizeResult powell(const ObjectiveFn& f, std::vector<double> x0,
                      const MinimizeOptions& options);

/// Pluggable minimizer hook matching nelder_mead / powell.
using Minimizer =
    std::function<MinimizeResult(const ObjectiveFn&, std::vector<double>, const MinimizeOptions&)>;

/// Objective over a structure's free parameters and the interrogation time;
/// larger is better.
using ThetaTimeObjective =
    std::function<double(std::span<const double> theta, double t)>;

struct ContinuousResult {
  std::vector<double> theta;
  double t = 0.0;
  double value = 0.0;
  int evaluations = 0;
  bool budget_exhausted = false;
  std::vector<std::pair<int, double>> trace; // (evaluation index, incumbent)
};

/// Maximizes the objective over (theta, t). Theta starts uniform in [0, 2pi)
/// and is treated as periodic (wrapped mod 2pi); t is searched through a
/// log-scale coordinate clipped to [t_min, t_max], starting from t_init.
/// With restarts = r the result is the max over r independently seeded runs.
ContinuousResult optimize_continuous(const ThetaTimeObjective& objective,
                                     const CircuitStructure& structure,
                                     const OptimizerSettings& settings, std::uint64_t seed,
                                     const Minimizer& custom_minimizer = {});

struct ProposalRecord {
  int iteration = 0;
  Hyperparams hyper;
  double best_value = 0.0;
  int evaluations = 0;
  bool skipped = false;
};

struct SearchResult {
  CircuitStructure best_structure;
  std::vector<double> best_theta;
  double best_t = 0.0;
  double best_objective = 0.0;
  int best_iteration = -1;
  std::vector<std::pair<int, double>> trace; // (iteration, objective)
  std::vector<ProposalRecord> proposals;
};

/// Builds the (theta, t) objective for one proposed structure.
using StructureObjectiveFactory =
    std::function<ThetaTimeObjective(const CircuitStructure&)>;

/// Full structure search: per iteration, propose an ansatz for the next
/// hyperparameter set in the schedule, optimize (theta, t), and keep the
/// global best (ties resolved toward the lowest iteration index).
/// Iterations whose proposal is exhausted are recorded as skipped.
/// Iterations run concurrently on up to `threads` workers with per-iteration
/// derived seeds; the reduction is deterministic.
SearchResult outer_loop(int n_qubits, const ConnectivityGraph& graph,
                        std::span<const Hyperparams> schedule, int iter_max,
                        const StructureObjectiveFactory& make_objective,
                        const OptimizerSettings& settings, std::uint64_t seed,
                        int threads = 1);

std::string search_result_to_json(const SearchResult& result, int indent = -1);

} // namespace metroforge
