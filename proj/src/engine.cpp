#include "dsta/engine.hpp"

#include <algorithm>
#include <numeric>

#include "dsta/errors.hpp"

namespace dsta {

namespace {

Entries entries_of(const Objective& objective) {
  return objective.representation() == Representation::Permutation ? Entries::Distinct
                                                                    : Entries::Repeated;
}

}  // namespace

bool accept_candidate(double current_cost, double candidate_cost, Mode mode,
                      double risk_probability, Rng& rng) {
  if (candidate_cost < current_cost) return true;
  return mode == Mode::Dynamic && rng.uniform() < risk_probability;
}

void restore_step(SearchState& state, Mode mode, double restore_probability, Rng& rng) {
  if (mode != Mode::Dynamic) return;
  if (rng.uniform() < restore_probability) {
    state.current = state.incumbent;
    state.current_cost = state.incumbent_cost;
  }
}

Transform transform_for(OperatorKind kind, const StaParams& params) {
  switch (kind) {
    case OperatorKind::Swap:
      return {kind, params.swap_factor};
    case OperatorKind::Shift:
      return {kind, params.shift_factor};
    case OperatorKind::Symmetry:
      return {kind, params.symmetry_factor};
    case OperatorKind::Substitute:
      return {kind, params.substitute_factor};
  }
  throw InvalidParams("unknown operator kind");
}

std::uint64_t operator_round(SearchState& state, OperatorKind kind, const Objective& objective,
                             const StaParams& params, Rng& rng) {
  const Transform t = transform_for(kind, params);
  const Entries entries = entries_of(objective);
  const int alphabet = objective.alphabet_size();

  std::vector<int> candidate(state.current.size());
  std::vector<int> round_best;
  double round_best_cost = 0.0;
  for (int i = 0; i < params.search_enforcement; ++i) {
    std::copy(state.current.begin(), state.current.end(), candidate.begin());
    ops::apply(t, candidate, entries, alphabet, rng);
    const double cost = objective.evaluate(candidate);
    if (i == 0 || cost < round_best_cost) {
      round_best.swap(candidate);
      round_best_cost = cost;
      candidate.resize(state.current.size());
    }
  }
  if (accept_candidate(state.current_cost, round_best_cost, params.mode,
                       params.risk_probability, rng)) {
    state.current.swap(round_best);
    state.current_cost = round_best_cost;
  }
  return static_cast<std::uint64_t>(params.search_enforcement);
}

std::vector<int> initial_solution(const Objective& objective, Rng& rng) {
  const std::size_t n = objective.dimension();
  std::vector<int> solution(n);
  if (objective.representation() == Representation::Permutation) {
    std::iota(solution.begin(), solution.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(solution[i], solution[rng.below(i + 1)]);
  } else {
    const auto m = static_cast<std::uint64_t>(objective.alphabet_size());
    for (int& v : solution) v = static_cast<int>(rng.below(m));
  }
  return solution;
}

void check_run(const Objective& objective, const StaParams& params) {
  params.validate();
  for (OperatorKind kind : params.operators) {
    if (kind == OperatorKind::Substitute &&
        objective.representation() == Representation::Permutation) {
      throw IncompatibleOperator("substitute cannot be applied to a permutation problem");
    }
    ops::check_fits(transform_for(kind, params), objective.dimension());
  }
  if (objective.representation() == Representation::Value && objective.alphabet_size() < 2) {
    throw DegenerateState("value problems need an alphabet of size >= 2");
  }
}

RunResult run(const Objective& objective, const StaParams& params) {
  Rng rng(params.seed);
  return run(objective, params, rng);
}

RunResult run(const Objective& objective, const StaParams& params, Rng& rng) {
  check_run(objective, params);
  const auto started = std::chrono::steady_clock::now();

  SearchState state;
  state.current = initial_solution(objective, rng);
  state.current_cost = objective.evaluate(state.current);
  state.incumbent = state.current;
  state.incumbent_cost = state.current_cost;

  RunResult result;
  result.evaluations = 1;
  result.trace.reserve(static_cast<std::size_t>(params.max_iterations));
  for (int iteration = 1; iteration <= params.max_iterations; ++iteration) {
    for (OperatorKind kind : params.operators) {
      result.evaluations += operator_round(state, kind, objective, params, rng);
    }
    if (state.current_cost < state.incumbent_cost) {
      state.incumbent = state.current;
      state.incumbent_cost = state.current_cost;
    }
    restore_step(state, params.mode, params.restore_probability, rng);
    result.trace.push_back({iteration, state.current_cost, state.incumbent_cost});
  }

  result.best_solution = std::move(state.incumbent);
  result.best_cost = state.incumbent_cost;
  result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return result;
}

}  // namespace dsta
