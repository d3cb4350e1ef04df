// Copyright (c) 2026 The Metroforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "metroforge/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "metroforge/errors.hpp"
#include "metroforge/rng.hpp"

namespace metroforge {

std::string to_string(OptimizerKind kind) {
  return kind == OptimizerKind::NelderMead ? "nelder-mead" : "powell";
}

OptimizerKind optimizer_from_string(std::string_view name) {
  if (name == "nelder-mead")
    return OptimizerKind::NelderMead;
  if (name == "powell")
    return OptimizerKind::Powell;
  throw std::invalid_argument("unknown optimizer kind: " + std::string(name));
}

void OptimizerSettings::validate() const {
  if (max_evaluations < 1)
    throw ConfigError("max_evaluations must be at least 1");
  if (x_tolerance <= 0.0 || f_tolerance <= 0.0)
    throw ConfigError("optimizer tolerances must be positive");
  if (t_min <= 0.0 || t_min >= t_max)
    throw ConfigError("time bounds must satisfy 0 < t_min < t_max");
  if (restarts < 1)
    throw ConfigError("restart count must be at least 1");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct BudgetExhausted {};

// Counts evaluations, tracks the incumbent, and aborts via exception once
// the budget is spent so the algorithms can unwind to their incumbent.
class Tracked {
public:
  Tracked(const ObjectiveFn& f, int max_evaluations)
      : f_(f), max_evaluations_(max_evaluations) {}

  double operator()(const std::vector<double>& x) {
    if (count_ >= max_evaluations_)
      throw BudgetExhausted{};
    ++count_;
    const double value = f_(x);
    if (value < best_f_) {
      best_f_ = value;
      best_x_ = x;
    }
    return value;
  }

  MinimizeResult result(bool exhausted) const {
    MinimizeResult r;
    r.x = best_x_;
    r.f = best_f_;
    r.evaluations = count_;
    r.budget_exhausted = exhausted;
    return r;
  }

  int count() const { return count_; }

private:
  const ObjectiveFn& f_;
  int max_evaluations_;
  int count_ = 0;
  double best_f_ = kInf;
  std::vector<double> best_x_;
};

double max_edge_length(const std::vector<std::vector<double>>& simplex) {
  double edge = 0.0;
  for (std::size_t i = 1; i < simplex.size(); ++i)
    for (std::size_t d = 0; d < simplex[0].size(); ++d)
      edge = std::max(edge, std::abs(simplex[i][d] - simplex[0][d]));
  return edge;
}

void nelder_mead_loop(Tracked& f, std::vector<double> x0, const MinimizeOptions& options) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex;
  std::vector<double> values;
  simplex.push_back(x0);
  values.push_back(f(x0));
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<double> vertex = x0;
    vertex[d] += options.initial_step;
    simplex.push_back(vertex);
    values.push_back(f(vertex));
  }

  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::vector<std::size_t> order(n + 1);
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    const double spread = std::abs(values[worst] - values[best]);
    if (spread <= options.f_tolerance * (std::abs(values[best]) + std::abs(values[worst])) +
                      1e-300 ||
        max_edge_length(simplex) <= options.x_tolerance)
      return;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst)
        continue;
      for (std::size_t d = 0; d < n; ++d)
        centroid[d] += simplex[i][d];
    }
    for (double& c : centroid)
      c /= static_cast<double>(n);

    auto blend = [&](double coeff) {
      std::vector<double> point(n);
      for (std::size_t d = 0; d < n; ++d)
        point[d] = centroid[d] + coeff * (simplex[worst][d] - centroid[d]);
      return point;
    };

    const std::vector<double> reflected = blend(-kReflect);
    const double f_reflected = f(reflected);
    if (f_reflected < values[best]) {
      const std::vector<double> expanded = blend(-kReflect * kExpand);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    const bool outside = f_reflected < values[worst];
    const std::vector<double> contracted = blend(outside ? -kContract : kContract);
    const double f_contracted = f(contracted);
    if (f_contracted < std::min(f_reflected, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }

    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best)
        continue;
      for (std::size_t d = 0; d < n; ++d)
        simplex[i][d] = simplex[best][d] + kShrink * (simplex[i][d] - simplex[best][d]);
      values[i] = f(simplex[i]);
    }
  }
}

struct LinePoint {
  double alpha = 0.0;
  double value = 0.0;
};

// Bracket a minimum of g along alpha >= 0 starting from alpha=0 (value f0),
// then golden-section down to `tol` in alpha units. Returns the best point.
template <typename G>
LinePoint line_minimum(G&& g, double f0, double tol) {
  constexpr double kGolden = 1.618033988749895;
  double a = 0.0;
  double fa = f0;
  double b = 1.0;
  double fb = g(b);
  if (fb > fa) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = b + kGolden * (b - a);
  double fc = g(c);
  int expansions = 0;
  while (fc < fb && std::abs(c) < 1e4 && expansions < 64) {
    a = b;
    fa = fb;
    b = c;
    fb = fc;
    c = b + kGolden * (b - a);
    fc = g(c);
    ++expansions;
  }

  double lo = std::min(a, c);
  double hi = std::max(a, c);
  constexpr double kRatio = 0.6180339887498949;
  double x1 = hi - kRatio * (hi - lo);
  double x2 = lo + kRatio * (hi - lo);
  double f1 = g(x1);
  double f2 = g(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kRatio * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kRatio * (hi - lo);
      f2 = g(x2);
    }
  }

  LinePoint best{0.0, f0};
  for (const LinePoint p : {LinePoint{b, fb}, LinePoint{x1, f1}, LinePoint{x2, f2}}) {
    if (p.value < best.value)
      best = p;
  }
  return best;
}

void powell_loop(Tracked& f, std::vector<double> x0, const MinimizeOptions& options) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> directions(n, std::vector<double>(n, 0.0));
  for (std::size_t d = 0; d < n; ++d)
    directions[d][d] = options.initial_step;

  std::vector<double> x = x0;
  double fx = f(x);

  auto minimize_along = [&](const std::vector<double>& direction, double current) {
    auto g = [&](double alpha) {
      std::vector<double> point(n);
      for (std::size_t d = 0; d < n; ++d)
        point[d] = x[d] + alpha * direction[d];
      return f(point);
    };
    const LinePoint best = line_minimum(g, current, options.line_tolerance);
    for (std::size_t d = 0; d < n; ++d)
      x[d] += best.alpha * direction[d];
    return best.value;
  };

  for (int sweep = 0; sweep < 500; ++sweep) {
    const double f_start = fx;
    const std::vector<double> x_start = x;
    double largest_drop = 0.0;
    std::size_t drop_index = 0;
    for (std::size_t d = 0; d < n; ++d) {
      const double before = fx;
      fx = minimize_along(directions[d], fx);
      if (before - fx > largest_drop) {
        largest_drop = before - fx;
        drop_index = d;
      }
    }

    if (2.0 * (f_start - fx) <=
        options.f_tolerance * (std::abs(f_start) + std::abs(fx)) + 1e-300)
      return;

    std::vector<double> extrapolated(n);
    std::vector<double> sweep_direction(n);
    double step_norm = 0.0;
    for (std::size_t d = 0; d < n; ++d) {
      sweep_direction[d] = x[d] - x_start[d];
      extrapolated[d] = 2.0 * x[d] - x_start[d];
      step_norm = std::max(step_norm, std::abs(sweep_direction[d]));
    }
    if (step_norm <= options.x_tolerance)
      return;

    const double f_extrapolated = f(extrapolated);
    if (f_extrapolated < f_start) {
      const double t = 2.0 * (f_start - 2.0 * fx + f_extrapolated) *
                           (f_start - fx - largest_drop) * (f_start - fx - largest_drop) -
                       largest_drop * (f_start - f_extrapolated) * (f_start - f_extrapolated);
      if (t < 0.0) {
        fx = minimize_along(sweep_direction, fx);
        directions[drop_index] = directions[n - 1];
        directions[n - 1] = sweep_direction;
      }
    }
  }
}

} // namespace

MinimizeResult nelder_mead(const ObjectiveFn& f, std::vector<double> x0,
                           const MinimizeOptions& options) {
  Tracked tracked(f, options.max_evaluations);
  bool exhausted = false;
  try {
    nelder_mead_loop(tracked, std::move(x0), options);
  } catch (const BudgetExhausted&) {
    exhausted = true;
  }
  return tracked.result(exhausted);
}

MinimizeResult powell(const ObjectiveFn& f, std::vector<double> x0,
                      const MinimizeOptions& options) {
  Tracked tracked(f, options.max_evaluations);
  bool exhausted = false;
  try {
    powell_loop(tracked, std::move(x0), options);
  } catch (const BudgetExhausted&) {
    exhausted = true;
  }
  return tracked.result(exhausted);
}

namespace {

double wrap_angle(double a) {
  constexpr double kTau = 2.0 * std::numbers::pi;
  a = std::fmod(a, kTau);
  return a < 0.0 ? a + kTau : a;
}

} // namespace

ContinuousResult optimize_continuous(const ThetaTimeObjective& objective,
                                     const CircuitStructure& structure,
                                     const OptimizerSettings& settings, std::uint64_t seed,
                                     const Minimizer& custom_minimizer) {
  settings.validate();
  const std::size_t n = static_cast<std::size_t>(structure.n_params);
  const double t_start = std::clamp(settings.t_init, settings.t_min, settings.t_max);

  ContinuousResult incumbent;
  incumbent.value = -kInf;
  int global_evaluations = 0;

  for (int restart = 0; restart < settings.restarts; ++restart) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
    std::vector<double> x0(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      x0[i] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    x0[n] = std::log(t_start);

    std::vector<double> theta(n);
    const ObjectiveFn minimized = [&](std::span<const double> x) {
      for (std::size_t i = 0; i < n; ++i)
        theta[i] = wrap_angle(x[i]);
      const double t = std::clamp(std::exp(x[n]), settings.t_min, settings.t_max);
      const double value = objective(theta, t);
      ++global_evaluations;
      if (value > incumbent.value) {
        incumbent.value = value;
        incumbent.theta = theta;
        incumbent.t = t;
        incumbent.trace.emplace_back(global_evaluations, value);
      }
      return -value;
    };

    MinimizeOptions options;
    options.max_evaluations = settings.max_evaluations;
    options.x_tolerance = settings.x_tolerance;
    options.f_tolerance = settings.f_tolerance;
    options.initial_step = 0.5;
    options.line_tolerance = std::max(settings.x_tolerance, 1e-6);

    MinimizeResult run;
    if (custom_minimizer)
      run = custom_minimizer(minimized, std::move(x0), options);
    else if (settings.kind == OptimizerKind::NelderMead)
      run = nelder_mead(minimized, std::move(x0), options);
    else
      run = powell(minimized, std::move(x0), options);
    incumbent.budget_exhausted = incumbent.budget_exhausted || run.budget_exhausted;
  }

  incumbent.evaluations = global_evaluations;
  return incumbent;
}

SearchResult outer_loop(int n_qubits, const ConnectivityGraph& graph,
                        std::span<const Hyperparams> schedule, int iter_max,
                        const StructureObjectiveFactory& make_objective,
                        const OptimizerSettings& settings, std::uint64_t seed, int threads) {
  if (iter_max < 1)
    throw std::invalid_argument("iter_max must be at least 1");
  if (schedule.empty())
    throw std::invalid_argument("hyperparameter schedule must be non-empty");
  settings.validate();

  struct IterationOutcome {
    bool skipped = false;
    CircuitStructure structure;
    ContinuousResult continuous;
    Hyperparams hyper;
  };
  std::vector<IterationOutcome> outcomes(static_cast<std::size_t>(iter_max));

  auto run_iteration = [&](int i) {
    IterationOutcome out;
    out.hyper = schedule[static_cast<std::size_t>(i) % schedule.size()];
    try {
      out.structure =
          propose(n_qubits, graph, out.hyper, derive_seed(seed, 1000 + static_cast<std::uint64_t>(i)));
    } catch (const ProposalExhaustedError&) {
      out.skipped = true;
      return out;
    }
    const ThetaTimeObjective objective = make_objective(out.structure);
    out.continuous = optimize_continuous(objective, out.structure, settings,
                                         derive_seed(seed, 5000 + static_cast<std::uint64_t>(i)));
    return out;
  };

  const int workers = std::max(1, threads);
  if (workers == 1) {
    for (int i = 0; i < iter_max; ++i)
      outcomes[static_cast<std::size_t>(i)] = run_iteration(i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= iter_max)
          return;
        try {
          outcomes[static_cast<std::size_t>(i)] = run_iteration(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error)
            error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, iter_max); ++w)
      pool.emplace_back(worker);
    for (std::thread& t : pool)
      t.join();
    if (error)
      std::rethrow_exception(error);
  }

  SearchResult result;
  result.best_objective = -kInf;
  for (int i = 0; i < iter_max; ++i) {
    const IterationOutcome& out = outcomes[static_cast<std::size_t>(i)];
    ProposalRecord record;
    record.iteration = i;
    record.hyper = out.hyper;
    record.skipped = out.skipped;
    if (!out.skipped) {
      record.best_value = out.continuous.value;
      record.evaluations = out.continuous.evaluations;
      result.trace.emplace_back(i, out.continuous.value);
      if (out.continuous.value > result.best_objective) {
        result.best_objective = out.continuous.value;
        result.best_structure = out.structure;
        result.best_theta = out.continuous.theta;
        result.best_t = out.continuous.t;
        result.best_iteration = i;
      }
    }
    result.proposals.push_back(record);
  }
  return result;
}

std::string search_result_to_json(const SearchResult& result, int indent) {
  nlohmann::json j;
  j["best_objective"] = result.best_objective;
  j["best_iteration"] = result.best_iteration;
  j["best_t_s"] = result.best_t;
  j["best_theta"] = result.best_theta;
  j["best_structure"] =
      result.best_iteration >= 0
          ? nlohmann::json::parse(structure_to_json(result.best_structure))
          : nlohmann::json();
  nlohmann::json trace = nlohmann::json::array();
  for (auto [iteration, value] : result.trace)
    trace.push_back({{"iteration", iteration}, {"objective", value}});
  j["trace"] = trace;
  nlohmann::json proposals = nlohmann::json::array();
  for (const ProposalRecord& p : result.proposals) {
    proposals.push_back({{"iteration", p.iteration},
                         {"l", p.hyper.layers},
                         {"k", p.hyper.singles_per_layer},
                         {"m", p.hyper.entanglers_per_layer},
                         {"best_value", p.best_value},
                         {"evaluations", p.evaluations},
                         {"skipped", p.skipped}});
  }
  j["proposals"] = proposals;
  return j.dump(indent);
}

} // namespace metroforge
