#include "dsta/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "dsta/errors.hpp"

namespace dsta {

TrialStats summarize(std::span<const double> values, Sense sense) {
  TrialStats stats;
  stats.trials = static_cast<int>(values.size());
  stats.values.assign(values.begin(), values.end());
  if (values.empty()) return stats;
  stats.best = sense == Sense::Minimize ? *std::min_element(values.begin(), values.end())
                                        : *std::max_element(values.begin(), values.end());
  stats.mean = std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
  if (values.size() > 1) {
    double squares = 0.0;
    for (double v : values) squares += (v - stats.mean) * (v - stats.mean);
    stats.std = std::sqrt(squares / static_cast<double>(values.size() - 1));
  }
  return stats;
}

std::uint64_t derive_trial_seed(std::uint64_t base_seed, std::uint64_t trial) {
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  return mix64(base_seed + kGolden * (trial + 1));
}

TrialBatch run_trials(const Objective& objective, const StaParams& params, int trials,
                      std::uint64_t base_seed, unsigned threads) {
  if (trials < 1) throw InvalidParams("trials must be >= 1");
  check_run(objective, params);

  TrialBatch batch;
  batch.runs.resize(static_cast<std::size_t>(trials));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(trials));

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < trials; i = next++) {
      try {
        StaParams trial_params = params;
        trial_params.seed = derive_trial_seed(base_seed, static_cast<std::uint64_t>(i));
        auto& slot = batch.runs[static_cast<std::size_t>(i)];
        slot.seed = trial_params.seed;
        slot.result = run(objective, trial_params);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> costs;
  costs.reserve(batch.runs.size());
  for (const auto& r : batch.runs) costs.push_back(r.result.best_cost);
  batch.stats = summarize(costs);
  return batch;
}

ModeComparison compare_modes(const Objective& objective, const StaParams& params, int trials,
                             std::uint64_t base_seed, unsigned threads) {
  ModeComparison report;
  StaParams simple = params;
  simple.mode = Mode::Simple;
  StaParams dynamic = params;
  dynamic.mode = Mode::Dynamic;
  report.simple = run_trials(objective, simple, trials, base_seed, threads);
  report.dynamic = run_trials(objective, dynamic, trials, base_seed, threads);
  report.best_difference = report.dynamic.stats.best - report.simple.stats.best;
  report.mean_difference = report.dynamic.stats.mean - report.simple.stats.mean;
  report.std_difference = report.dynamic.stats.std - report.simple.stats.std;
  return report;
}

TspOptimum brute_force_tsp(const TspInstance& instance) {
  const std::size_t n = instance.size();
  if (n > kMaxOracleCities) {
    throw TooLarge("TSP oracle is limited to " + std::to_string(kMaxOracleCities) +
                   " cities, instance has " + std::to_string(n));
  }
  // City 0 fixed first; orientation fixed by tour[1] < tour[n-1].
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  TspOptimum best;
  best.cost = std::numeric_limits<double>::infinity();
  do {
    if (rest.front() > rest.back()) continue;
    ++best.tours_examined;
    double cost = instance.distance(0, static_cast<std::size_t>(rest.front())) +
                  instance.distance(static_cast<std::size_t>(rest.back()), 0);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
      cost += instance.distance(static_cast<std::size_t>(rest[i]),
                                static_cast<std::size_t>(rest[i + 1]));
    }
    if (cost < best.cost) {
      best.cost = cost;
      best.tour.assign(1, 0);
      best.tour.insert(best.tour.end(), rest.begin(), rest.end());
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

QuboOptimum brute_force_qubo(std::span<const double> q, std::span<const double> c,
                             double tolerance) {
  const std::size_t n = c.size();
  if (q.size() != n * n) throw DimensionMismatch("Q must be n x n with n = |c|");
  if (n > kMaxOracleQuboVariables) {
    throw TooLarge("QUBO oracle is limited to " + std::to_string(kMaxOracleQuboVariables) +
                   " variables, problem has " + std::to_string(n));
  }
  QuboOptimum result;
  if (n == 0) {
    result.optimizers.emplace_back();
    return result;
  }

  // Start at x = (-1, ..., -1) and walk the reflected Gray code, flipping one
  // coordinate per step and updating field = Q x incrementally.
  std::vector<double> x(n, -1.0);
  std::vector<double> field(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) field[i] += q[i * n + j] * x[j];
  }
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) value += 0.5 * x[i] * field[i] - x[i] * c[i];

  std::vector<std::pair<double, std::uint64_t>> points;
  const std::uint64_t count = std::uint64_t{1} << n;
  points.reserve(static_cast<std::size_t>(count));
  std::uint64_t gray = 0;
  points.emplace_back(value, gray);
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto k = static_cast<std::size_t>(std::countr_zero(step));
    const double old = x[k];
    // P(x') - P(x) with x'_k = -x_k: (1/2)(x'^T Q x' - x^T Q x) - (x'_k - x_k) c_k
    //   = -2 x_k (field_k - Q_kk x_k) + 2 x_k c_k.
    value += -2.0 * old * (field[k] - q[k * n + k] * old) + 2.0 * old * c[k];
    x[k] = -old;
    for (std::size_t i = 0; i < n; ++i) field[i] -= 2.0 * old * q[i * n + k];
    gray ^= std::uint64_t{1} << k;
    points.emplace_back(value, gray);
  }

  double best = points.front().first;
  for (const auto& p : points) best = std::min(best, p.first);
  result.value = best;
  std::vector<std::uint64_t> masks;
  for (const auto& p : points) {
    if (p.first <= best + tolerance) masks.push_back(p.second);
  }
  std::sort(masks.begin(), masks.end());
  for (std::uint64_t mask : masks) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>((mask >> i) & 1u);
    result.optimizers.push_back(std::move(v));
  }
  return result;
}

DvsOptimum brute_force_dvs(const DvsProblem& problem) {
  problem.validate();
  const std::size_t n = problem.dimension;
  const std::size_t m = problem.alphabet.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kMaxOracleDvsPoints / m) {
      throw TooLarge("DVS oracle is limited to 10^6 points");
    }
    total *= m;
  }

  std::vector<int> index(n, 0);
  std::vector<double> x(n, problem.alphabet[0]);
  DvsOptimum result;
  result.value = std::numeric_limits<double>::infinity();
  while (true) {
    ++result.points_examined;
    const double v = problem.objective(x);
    if (v < result.value) {
      result.value = v;
      result.optimizer = index;
    }
    // Odometer, last coordinate fastest.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++index[i] < static_cast<int>(m)) {
        x[i] = problem.alphabet[static_cast<std::size_t>(index[i])];
        break;
      }
      index[i] = 0;
      x[i] = problem.alphabet[0];
      if (i == 0) return result;
    }
  }
}

}  // namespace dsta
