#include "dsta/problems.hpp"

#include <cmath>
#include <string>

#include "dsta/errors.hpp"
#include "dsta/kernels.hpp"

namespace dsta {

namespace {

void check_square_symmetric(std::span<const double> m, std::size_t n, const char* what) {
  if (m.size() != n * n) {
    throw InvalidSize(std::string(what) + " matrix has " + std::to_string(m.size()) +
                      " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i * n + i] != 0.0) {
      throw DomainViolation(std::string(what) + " matrix has a nonzero diagonal at " +
                            std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = m[i * n + j];
      if (!std::isfinite(a)) throw DomainViolation(std::string(what) + " entry is not finite");
      if (a != m[j * n + i]) {
        throw DomainViolation(std::string(what) + " matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

// Per-thread scratch for decoded vectors; keeps evaluate() allocation free.
// Distinct tags for callers that may nest.
enum class Scratch { Signs, Decoded };

template <Scratch>
std::vector<double>& scratch(std::size_t n) {
  thread_local std::vector<double> buffer;
  buffer.resize(n);
  return buffer;
}

void signs_into(std::span<const int> indices, std::vector<double>& out) {
  for (std::size_t i = 0; i < indices.size(); ++i) out[i] = sign_of(indices[i]);
}

}  // namespace

TspInstance::TspInstance(std::string name, std::size_t n, std::vector<double> distances,
                         std::vector<Point> coordinates)
    : name_(std::move(name)),
      n_(n),
      distances_(std::move(distances)),
      coordinates_(std::move(coordinates)) {
  if (n_ < 3) throw InvalidSize("a TSP instance needs at least 3 cities");
  check_square_symmetric(distances_, n_, "distance");
  for (double d : distances_) {
    if (d < 0.0) throw DomainViolation("negative distance");
  }
  if (!coordinates_.empty() && coordinates_.size() != n_) {
    throw InvalidSize("coordinate count does not match city count");
  }
}

double tour_length(std::span<const int> tour, const TspInstance& instance) {
  if (tour.size() != instance.size()) {
    throw DimensionMismatch("tour has " + std::to_string(tour.size()) + " cities, instance has " +
                            std::to_string(instance.size()));
  }
  return kernels::active().tour_length(instance.matrix().data(), instance.size(), tour.data());
}

double tour_length(const PermutationState& tour, const TspInstance& instance) {
  return tour_length(tour.order(), instance);
}

MaxCutInstance::MaxCutInstance(std::string name, std::size_t vertices,
                               std::vector<double> weights)
    : name_(std::move(name)), vertices_(vertices), weights_(std::move(weights)) {
  if (vertices_ < 2) throw InvalidSize("MAX-CUT needs at least 2 vertices");
  check_square_symmetric(weights_, vertices_, "weight");
  const std::size_t n = vertices_ - 1;
  q_.resize(n * n);
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q_[i * n + j] = weights_[i * vertices_ + j];
    c_[i] = -weights_[i * vertices_ + n];
  }
  weight_sum_ = kernels::scalar().matrix_sum(weights_.data(), vertices_);
}

double cut_weight(std::span<const int> y, const MaxCutInstance& instance) {
  const std::size_t n = instance.vertex_count();
  if (y.size() != n) {
    throw DimensionMismatch("cut assignment has " + std::to_string(y.size()) +
                            " entries, graph has " + std::to_string(n) + " vertices");
  }
  auto& signs = scratch<Scratch::Signs>(n);
  signs_into(y, signs);
  return kernels::active().cut_weight(instance.weights().data(), n, signs.data());
}

double qubo_value(std::span<const int> x, std::span<const double> q, std::span<const double> c) {
  const std::size_t n = x.size();
  if (c.size() != n || q.size() != n * n) {
    throw DimensionMismatch("QUBO of size " + std::to_string(c.size()) +
                            " evaluated on a vector of size " + std::to_string(n));
  }
  auto& signs = scratch<Scratch::Signs>(n);
  signs_into(x, signs);
  const auto& k = kernels::active();
  return 0.5 * k.quadratic_form(q.data(), n, signs.data()) - k.dot(signs.data(), c.data(), n);
}

double rosenbrock_value(std::span<const double> x) {
  for (double v : x) {
    if (v != std::round(v) || v < -2.0 || v > 2.0) {
      throw DomainViolation("integer Rosenbrock is defined on {-2,...,2}, got " +
                            std::to_string(v));
    }
  }
  return kernels::active().rosenbrock(x.data(), x.size());
}

void DvsProblem::validate() const {
  if (alphabet.size() < 2) throw InvalidSize("a DVS alphabet needs at least 2 values");
  if (dimension < 2) throw InvalidSize("a DVS problem needs at least 2 variables");
  if (!objective) throw InvalidSize("a DVS problem needs an objective");
}

DvsProblem make_rosenbrock(std::size_t n) {
  if (n < 2) throw InvalidSize("integer Rosenbrock needs n >= 2");
  DvsProblem problem;
  problem.name = "rosenbrock" + std::to_string(n);
  problem.alphabet.assign(kRosenbrockAlphabet.begin(), kRosenbrockAlphabet.end());
  problem.dimension = n;
  // Decoded values always lie in the alphabet, so the domain check is skipped.
  problem.objective = [](std::span<const double> x) {
    return kernels::active().rosenbrock(x.data(), x.size());
  };
  return problem;
}

std::vector<double> dvs_decode(std::span<const int> indices, std::span<const double> alphabet) {
  std::vector<double> out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const int k = indices[i];
    if (k < 0 || static_cast<std::size_t>(k) >= alphabet.size()) {
      throw IndexOutOfRange("value index " + std::to_string(k) + " outside alphabet of size " +
                            std::to_string(alphabet.size()));
    }
    out[i] = alphabet[static_cast<std::size_t>(k)];
  }
  return out;
}

double tsp_error(double best, double optimum) {
  if (optimum == 0.0) throw DivisionByZero("tsp error needs a nonzero optimum");
  return (best - optimum) / optimum * 100.0;
}

double maxcut_error(double best, double optimum) {
  if (optimum == 0.0) throw DivisionByZero("max-cut error needs a nonzero optimum");
  return (optimum - best) / optimum * 100.0;
}

std::string instance_name(const ProblemInstance& instance) {
  return std::visit(
      [](const auto& i) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(i)>, DvsProblem>) {
          return i.name;
        } else {
          return i.name();
        }
      },
      instance);
}

double TspObjective::evaluate(std::span<const int> tour) const {
  return kernels::active().tour_length(instance_.matrix().data(), instance_.size(), tour.data());
}

double QuboObjective::evaluate(std::span<const int> x) const {
  return qubo_value(x, instance_.qubo_matrix(), instance_.qubo_linear());
}

DvsObjective::DvsObjective(const DvsProblem& problem) : problem_(problem) { problem_.validate(); }

double DvsObjective::evaluate(std::span<const int> indices) const {
  auto& decoded = scratch<Scratch::Decoded>(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    decoded[i] = problem_.alphabet[static_cast<std::size_t>(indices[i])];
  }
  return problem_.objective(decoded);
}

std::unique_ptr<Objective> make_objective(const ProblemInstance& instance) {
  return std::visit(
      [](const auto& i) -> std::unique_ptr<Objective> {
        using T = std::decay_t<decltype(i)>;
        if constexpr (std::is_same_v<T, TspInstance>) {
          return std::make_unique<TspObjective>(i);
        } else if constexpr (std::is_same_v<T, MaxCutInstance>) {
          return std::make_unique<QuboObjective>(i);
        } else {
          return std::make_unique<DvsObjective>(i);
        }
      },
      instance);
}

}  // namespace dsta
