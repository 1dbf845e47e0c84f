#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "dsta/bench.hpp"
#include "dsta/engine.hpp"
#include "dsta/errors.hpp"
#include "dsta/instance_io.hpp"
#include "dsta/problems.hpp"
#include "support.hpp"

namespace dsta {
namespace {

StaParams all_operators() {
  StaParams p;
  p.operators = {OperatorKind::Swap, OperatorKind::Shift, OperatorKind::Symmetry,
                 OperatorKind::Substitute};
  return p;
}

StaParams tsp_operators() {
  StaParams p;
  p.operators = {OperatorKind::Swap, OperatorKind::Shift, OperatorKind::Symmetry};
  return p;
}

double enumerate_tours(const TspInstance& inst) {
  std::vector<int> rest = test::iota_vector(inst.size() - 1, 1);
  double best = INFINITY;
  do {
    std::vector<int> tour{0};
    tour.insert(tour.end(), rest.begin(), rest.end());
    double len = 0.0;
    for (std::size_t i = 0; i < tour.size(); ++i) {
      len += inst.distance(static_cast<std::size_t>(tour[i]),
                           static_cast<std::size_t>(tour[(i + 1) % tour.size()]));
    }
    best = std::min(best, len);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

TEST(Accept, Examples) {
  Rng rng(1);
  EXPECT_TRUE(accept_candidate(10, 9, Mode::Simple, 0.0557, rng));
  EXPECT_FALSE(accept_candidate(10, 10, Mode::Simple, 0.0557, rng));
  EXPECT_FALSE(accept_candidate(10, 11, Mode::Simple, 1.0, rng));
  EXPECT_TRUE(accept_candidate(10, 11, Mode::Dynamic, 1.0, rng));
  EXPECT_FALSE(accept_candidate(10, 10, Mode::Dynamic, 0.0, rng));
}

TEST(Accept, RiskFrequency) {
  Rng rng(2024);
  const int draws = 100000;
  int accepted = 0;
  for (int i = 0; i < draws; ++i) accepted += accept_candidate(10, 11, Mode::Dynamic, 0.0557, rng);
  EXPECT_NEAR(static_cast<double>(accepted) / draws, 0.0557, 0.005);
}

TEST(Restore, SimpleIsIdentity) {
  Rng rng(1);
  SearchState s{{1, 2}, 20.0, {2, 1}, 15.0};
  restore_step(s, Mode::Simple, 1.0, rng);
  EXPECT_EQ(s.current, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.current_cost, 20.0);
}

TEST(Restore, ForcedCopiesIncumbent) {
  Rng rng(1);
  SearchState s{{1, 2}, 20.0, {2, 1}, 15.0};
  restore_step(s, Mode::Dynamic, 1.0, rng);
  EXPECT_EQ(s.current, (std::vector<int>{2, 1}));
  EXPECT_EQ(s.current_cost, 15.0);
}

TEST(Restore, Frequency) {
  Rng rng(77);
  const int draws = 100000;
  int restored = 0;
  for (int i = 0; i < draws; ++i) {
    SearchState s{{0}, 20.0, {1}, 15.0};
    restore_step(s, Mode::Dynamic, 0.1459, rng);
    restored += s.current_cost == 15.0;
  }
  EXPECT_NEAR(static_cast<double>(restored) / draws, 0.1459, 0.005);
}

TEST(OperatorRound, TakesStrictImprovement) {
  test::ScriptedObjective obj({7, 9, 8});
  StaParams p = all_operators();
  p.search_enforcement = 3;
  p.mode = Mode::Simple;
  SearchState s{{0, 1, 2, 0}, 10.0, {0, 1, 2, 0}, 10.0};
  Rng rng(1);
  EXPECT_EQ(operator_round(s, OperatorKind::Substitute, obj, p, rng), 3u);
  EXPECT_EQ(s.current_cost, 7.0);
}

TEST(OperatorRound, SimpleRejectsWorse) {
  test::ScriptedObjective obj({12});
  StaParams p = all_operators();
  p.search_enforcement = 1;
  p.mode = Mode::Simple;
  SearchState s{{0, 1, 2, 0}, 10.0, {0, 1, 2, 0}, 10.0};
  Rng rng(1);
  operator_round(s, OperatorKind::Substitute, obj, p, rng);
  EXPECT_EQ(s.current_cost, 10.0);
  EXPECT_EQ(s.current, (std::vector<int>{0, 1, 2, 0}));
}

TEST(OperatorRound, DynamicRiskFrequency) {
  test::ScriptedObjective obj({12});
  StaParams p = all_operators();
  p.search_enforcement = 1;
  p.mode = Mode::Dynamic;
  Rng rng(5);
  const int reps = 100000;
  int accepted = 0;
  for (int i = 0; i < reps; ++i) {
    SearchState s{{0, 1, 2, 0}, 10.0, {0, 1, 2, 0}, 10.0};
    operator_round(s, OperatorKind::Substitute, obj, p, rng);
    accepted += s.current_cost == 12.0;
  }
  EXPECT_NEAR(static_cast<double>(accepted) / reps, p.risk_probability, 0.005);
}

TEST(Run, TspFiveMatchesEnumeration) {
  const auto inst = std::get<TspInstance>(random_instance(EuclideanTspSpec{5}, 3));
  TspObjective obj(inst);
  StaParams p = tsp_operators();
  p.mode = Mode::Simple;
  p.max_iterations = 200;
  p.search_enforcement = 16;
  const auto r = run(obj, p);
  EXPECT_NEAR(r.best_cost, enumerate_tours(inst), 1e-12);
}

TEST(Run, SingleIterationNeverWorsens) {
  const auto inst = std::get<TspInstance>(random_instance(EuclideanTspSpec{9}, 4));
  TspObjective obj(inst);
  StaParams p;
  p.operators = {OperatorKind::Swap};
  p.max_iterations = 1;
  p.search_enforcement = 1;
  Rng probe(p.seed);
  const double initial = obj.evaluate(initial_solution(obj, probe));
  const auto r = run(obj, p);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_LE(r.trace[0].incumbent_cost, initial);
}

TEST(Run, RosenbrockFiveTrials) {
  const auto problem = make_rosenbrock(5);
  DvsObjective obj(problem);
  StaParams p = all_operators();
  p.max_iterations = 10;
  const auto batch = run_trials(obj, p, 20, 1);
  EXPECT_EQ(batch.stats.best, 0.0);
  EXPECT_EQ(batch.stats.mean, 0.0);
  EXPECT_EQ(batch.stats.std, 0.0);
}

TEST(Run, DeterministicAndBudgeted) {
  const auto graph = std::get<MaxCutInstance>(random_instance(WeightedGraphSpec{10, 0.7}, 2));
  QuboObjective obj(graph);
  StaParams p = all_operators();
  p.max_iterations = 60;
  p.search_enforcement = 7;
  p.seed = 99;
  const auto a = run(obj, p);
  const auto b = run(obj, p);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.best_solution, b.best_solution);
  EXPECT_EQ(a.evaluations, 1u + 60u * 4u * 7u);
  EXPECT_EQ(a.best_cost, a.trace.back().incumbent_cost);
  EXPECT_DOUBLE_EQ(obj.evaluate(a.best_solution), a.best_cost);
}

TEST(Run, TraceInvariants) {
  const auto inst = std::get<TspInstance>(random_instance(EuclideanTspSpec{25}, 8));
  TspObjective obj(inst);
  for (Mode mode : {Mode::Simple, Mode::Dynamic}) {
    StaParams p = tsp_operators();
    p.mode = mode;
    p.max_iterations = 300;
    p.search_enforcement = 4;
    const auto r = run(obj, p);
    ASSERT_EQ(r.trace.size(), 300u);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      EXPECT_EQ(r.trace[i].iteration, static_cast<int>(i) + 1);
      if (i == 0) continue;
      EXPECT_LE(r.trace[i].incumbent_cost, r.trace[i - 1].incumbent_cost);
      if (mode == Mode::Simple) EXPECT_LE(r.trace[i].current_cost, r.trace[i - 1].current_cost);
    }
  }
}

TEST(Run, SimpleIgnoresProbabilities) {
  const auto problem = make_rosenbrock(8);
  DvsObjective obj(problem);
  StaParams a = all_operators();
  a.mode = Mode::Simple;
  a.max_iterations = 40;
  StaParams b = a;
  b.restore_probability = 0.9;
  b.risk_probability = 0.9;
  EXPECT_EQ(run(obj, a).trace, run(obj, b).trace);
}

TEST(Run, Errors) {
  const auto inst = std::get<TspInstance>(random_instance(EuclideanTspSpec{6}, 1));
  TspObjective obj(inst);
  StaParams p = all_operators();
  EXPECT_THROW(run(obj, p), IncompatibleOperator);

  const auto bad = [&](auto mutate) {
    StaParams q = tsp_operators();
    mutate(q);
    EXPECT_THROW(run(obj, q), InvalidParams);
  };
  bad([](StaParams& q) { q.search_enforcement = 0; });
  bad([](StaParams& q) { q.swap_factor = 1; });
  bad([](StaParams& q) { q.shift_factor = 0; });
  bad([](StaParams& q) { q.symmetry_factor = -1; });
  bad([](StaParams& q) { q.substitute_factor = 0; });
  bad([](StaParams& q) { q.restore_probability = 1.5; });
  bad([](StaParams& q) { q.risk_probability = -0.1; });
  bad([](StaParams& q) { q.max_iterations = 0; });
  bad([](StaParams& q) { q.operators.clear(); });
  bad([](StaParams& q) { q.operators = {OperatorKind::Swap, OperatorKind::Swap}; });
}

// Every index vector is reachable with risk enabled: on Rosenbrock n=5 at
// least 95 of 100 seeded runs reach the global minimum within 50 iterations.
TEST(Run, ReachesGlobalMinimum) {
  const auto problem = make_rosenbrock(5);
  DvsObjective obj(problem);
  StaParams p = all_operators();
  p.max_iterations = 50;
  const auto batch = run_trials(obj, p, 100, 1);
  int reached = 0;
  for (double v : batch.stats.values) reached += v == 0.0;
  EXPECT_GE(reached, 95);
}

}  // namespace
}  // namespace dsta
