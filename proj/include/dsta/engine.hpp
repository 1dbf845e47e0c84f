#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "dsta/objective.hpp"
#include "dsta/operators.hpp"
#include "dsta/params.hpp"
#include "dsta/rng.hpp"

namespace dsta {

struct TraceEntry {
  int iteration = 0;  // 1-based
  double current_cost = 0.0;
  double incumbent_cost = 0.0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Working point and incumbent of one run. The current point may be worse than
// the incumbent in Dynamic mode.
struct SearchState {
  std::vector<int> current;
  double current_cost = 0.0;
  std::vector<int> incumbent;
  double incumbent_cost = 0.0;
};

struct RunResult {
  std::vector<int> best_solution;
  double best_cost = 0.0;
  std::vector<TraceEntry> trace;  // one entry per outer iteration
  std::uint64_t evaluations = 0;
  std::chrono::nanoseconds wall_time{0};
};

// Strict improvement, or in Dynamic mode a risk draw below p2. The uniform
// draw is taken only when the candidate does not improve.
bool accept_candidate(double current_cost, double candidate_cost, Mode mode,
                      double risk_probability, Rng& rng);

// In Dynamic mode, with probability p1, current := incumbent. One draw per call
// in Dynamic mode, none in Simple mode.
void restore_step(SearchState& state, Mode mode, double restore_probability, Rng& rng);

Transform transform_for(OperatorKind kind, const StaParams& params);

// Samples se neighbors of state.current with `kind`, keeps the first
// minimum-cost one and applies accept_candidate to it. Performs exactly se
// evaluations and returns that count.
std::uint64_t operator_round(SearchState& state, OperatorKind kind, const Objective& objective,
                             const StaParams& params, Rng& rng);

// Uniform random permutation or index vector.
std::vector<int> initial_solution(const Objective& objective, Rng& rng);

// Validates params and operator/representation compatibility.
// Throws InvalidParams, IncompatibleOperator or DegenerateState.
void check_run(const Objective& objective, const StaParams& params);

// max_iterations outer iterations: every operator round in order, then the
// greedy incumbent update, then (Dynamic mode) the restore step.
// Deterministic given (objective, params); the generator is seeded from
// params.seed.
RunResult run(const Objective& objective, const StaParams& params);
RunResult run(const Objective& objective, const StaParams& params, Rng& rng);

}  // namespace dsta
