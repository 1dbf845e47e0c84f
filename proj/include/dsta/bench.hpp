#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dsta/engine.hpp"
#include "dsta/problems.hpp"

namespace dsta {

enum class Sense { Minimize, Maximize };

// Statistics over per-trial best values. `std` uses the n - 1 denominator
// (0 for a single trial); `best` is the min (Minimize) or max (Maximize).
struct TrialStats {
  int trials = 0;
  double best = 0.0;
  double mean = 0.0;
  double std = 0.0;
  std::optional<double> error;  // percentage, filled in by the caller's metric
  std::vector<double> values;   // by trial index
};

TrialStats summarize(std::span<const double> values, Sense sense = Sense::Minimize);

// Seed of trial `trial` under `base_seed`: mix64(base_seed + phi * (trial + 1)).
// Injective in `trial` for a fixed base seed.
std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t trial);

struct TrialRun {
  std::uint64_t seed = 0;
  RunResult result;
};

struct TrialBatch {
  std::vector<TrialRun> runs;  // by trial index
  TrialStats stats;            // over engine costs (minimization)
};

// Runs `trials` independent seeded runs; trial i uses
// derive_trial_seed(base_seed, i) in place of params.seed. Trials are spread
// over `threads` worker threads (0 = hardware concurrency); results do not
// depend on the thread count.
TrialBatch run_trials(const Objective& objective, const StaParams& params, int trials,
                      std::uint64_t base_seed, unsigned threads = 0);

struct ModeComparison {
  TrialBatch simple;
  TrialBatch dynamic;
  // dynamic minus simple
  double best_difference = 0.0;
  double mean_difference = 0.0;
  double std_difference = 0.0;
};

// Same trial seeds for both modes.
ModeComparison compare_modes(const Objective& objective, const StaParams& params, int trials,
                             std::uint64_t base_seed, unsigned threads = 0);

// ---- Exact oracles -----------------------------------------------------------

inline constexpr std::size_t kMaxOracleCities = 10;
inline constexpr std::size_t kMaxOracleQuboVariables = 20;
inline constexpr std::uint64_t kMaxOracleDvsPoints = 1'000'000;

struct TspOptimum {
  double cost = 0.0;
  std::vector<int> tour;  // 0-based, starts at city 0
  std::uint64_t tours_examined = 0;
};

// Minimum over the (n-1)!/2 distinct tours. Throws TooLarge for n > 10.
TspOptimum brute_force_tsp(const TspInstance& instance);

struct QuboOptimum {
  double value = 0.0;
  std::vector<std::vector<int>> optimizers;  // sign-index vectors, ascending
};

// Minimum of (1/2) x^T Q x - x^T c over {-1, 1}^n by Gray-code enumeration.
// Points within `tolerance` of the minimum count as optimizers.
// Throws TooLarge for n > 20, DimensionMismatch on inconsistent sizes.
QuboOptimum brute_force_qubo(std::span<const double> q, std::span<const double> c,
                             double tolerance = 1e-9);

struct DvsOptimum {
  double value = 0.0;
  std::vector<int> optimizer;  // first minimizer in lexicographic order
  std::uint64_t points_examined = 0;
};

// Throws TooLarge when m^n > 10^6.
DvsOptimum brute_force_dvs(const DvsProblem& problem);

}  // namespace dsta
