#include <algorithm>
#include <string>

#include "dsta/errors.hpp"
#include "dsta/instance_io.hpp"
#include "dsta/rng.hpp"

namespace dsta {

namespace {

TspInstance euclidean_tsp(const EuclideanTspSpec& spec, std::uint64_t seed) {
  if (spec.n < 3 || spec.n > 20'000) throw InvalidSize("Euclidean TSP needs 3 <= n <= 20000");
  Rng rng(seed);
  std::vector<Point> points(spec.n);
  for (auto& p : points) {
    p.x = rng.uniform();
    p.y = rng.uniform();
  }
  const std::size_t n = spec.n;
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i * n + j] = d[j * n + i] = euclidean_distance(points[i], points[j]);
    }
  }
  return TspInstance("euclid" + std::to_string(n) + "-s" + std::to_string(seed), n, std::move(d),
                     std::move(points));
}

MaxCutInstance weighted_graph(const WeightedGraphSpec& spec, std::uint64_t seed) {
  if (spec.vertices < 2 || spec.vertices > 20'000) {
    throw InvalidSize("weighted graph needs 2 <= vertices <= 20000");
  }
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw InvalidSize("edge density must lie in [0, 1]");
  }
  Rng rng(seed);
  const std::size_t n = spec.vertices;
  std::vector<double> w(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Both draws always happen so the weights of a denser graph extend a
      // sparser one with the same seed.
      const bool present = rng.uniform() < spec.density;
      const double weight = rng.uniform();
      if (present) w[i * n + j] = w[j * n + i] = weight;
    }
  }
  return MaxCutInstance("graph" + std::to_string(n) + "-s" + std::to_string(seed), n, std::move(w));
}

DvsProblem random_dvs(const DvsSpec& spec, std::uint64_t seed) {
  if (spec.n < 2 || spec.m < 2) throw InvalidSize("DVS needs n >= 2 and m >= 2");
  if (spec.m > 1'000'000) throw InvalidSize("DVS alphabet too large");
  Rng rng(seed);
  std::vector<double> alphabet;
  while (alphabet.size() < spec.m) {
    const double v = 2.0 * rng.uniform() - 1.0;
    if (std::find(alphabet.begin(), alphabet.end(), v) == alphabet.end()) alphabet.push_back(v);
  }
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<double> targets(spec.n);
  for (double& t : targets) t = 2.0 * rng.uniform() - 1.0;

  DvsProblem problem;
  problem.name = "dvs" + std::to_string(spec.n) + "x" + std::to_string(spec.m) + "-s" +
                 std::to_string(seed);
  problem.alphabet = std::move(alphabet);
  problem.dimension = spec.n;
  problem.objective = [targets = std::move(targets)](std::span<const double> x) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = x[i] - targets[i];
      total += r * r;
    }
    return total;
  };
  return problem;
}

}  // namespace

ProblemInstance random_instance(const RandomSpec& spec, std::uint64_t seed) {
  return std::visit(
      [seed](const auto& s) -> ProblemInstance {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EuclideanTspSpec>) {
          return euclidean_tsp(s, seed);
        } else if constexpr (std::is_same_v<T, WeightedGraphSpec>) {
          return weighted_graph(s, seed);
        } else {
          return random_dvs(s, seed);
        }
      },
      spec);
}

}  // namespace dsta
