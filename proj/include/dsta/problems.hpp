#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dsta/objective.hpp"
#include "dsta/state.hpp"

namespace dsta {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Symmetric TSP with a dense distance matrix.
class TspInstance {
 public:
  // `distances` is row-major n x n. Throws InvalidSize if n < 3 or the matrix
  // is not square, DomainViolation if it is asymmetric, has a nonzero
  // diagonal or a negative or non-finite entry.
  TspInstance(std::string name, std::size_t n, std::vector<double> distances,
              std::vector<Point> coordinates = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return n_; }
  double distance(std::size_t i, std::size_t j) const { return distances_[i * n_ + j]; }
  std::span<const double> matrix() const noexcept { return distances_; }
  // Empty for explicit-matrix instances.
  std::span<const Point> coordinates() const noexcept { return coordinates_; }

 private:
  std::string name_;
  std::size_t n_;
  std::vector<double> distances_;
  std::vector<Point> coordinates_;
};

// Closed tour length, invariant under rotation and reversal.
// Throws DimensionMismatch.
double tour_length(std::span<const int> tour, const TspInstance& instance);
double tour_length(const PermutationState& tour, const TspInstance& instance);

// MAX-CUT on n + 1 vertices together with its QUBO form over n variables
// obtained by fixing the last vertex to +1:
//   Q[i][j] = w[i][j] for i, j < n,   c[i] = -w[i][n].
// For x in {-1, 1}^n:  cut((x, 1)) = sum(W) / 4 - P(x) / 2.
class MaxCutInstance {
 public:
  // `weights` is row-major (n+1) x (n+1). Throws InvalidSize if fewer than 2
  // vertices, DomainViolation if asymmetric, with a nonzero diagonal, or
  // non-finite.
  MaxCutInstance(std::string name, std::size_t vertices, std::vector<double> weights);

  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t variable_count() const noexcept { return vertices_ - 1; }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t i, std::size_t j) const { return weights_[i * vertices_ + j]; }
  std::span<const double> qubo_matrix() const noexcept { return q_; }
  std::span<const double> qubo_linear() const noexcept { return c_; }
  double weight_sum() const noexcept { return weight_sum_; }

  // Cut weight of (x, 1) recovered from P(x).
  double cut_from_qubo(double qubo) const noexcept { return 0.25 * weight_sum_ - 0.5 * qubo; }

 private:
  std::string name_;
  std::size_t vertices_;
  std::vector<double> weights_;
  std::vector<double> q_;
  std::vector<double> c_;
  double weight_sum_ = 0.0;
};

// Sign encoding of boolean states: index 0 is -1, index 1 is +1.
constexpr double sign_of(int index) noexcept { return index == 0 ? -1.0 : 1.0; }
constexpr int index_of_sign(double sign) noexcept { return sign < 0.0 ? 0 : 1; }

// (1/4) sum_ij w_ij (1 - y_i y_j) over all n + 1 vertices; `y` holds sign
// indices. Throws DimensionMismatch.
double cut_weight(std::span<const int> y, const MaxCutInstance& instance);

// P(x) = (1/2) x^T Q x - x^T c with x given as sign indices; Q row-major n x n.
// Throws DimensionMismatch.
double qubo_value(std::span<const int> x, std::span<const double> q,
                  std::span<const double> c);

inline constexpr std::array<double, 5> kRosenbrockAlphabet{-2.0, -1.0, 0.0, 1.0, 2.0};

// Integer Rosenbrock: sum_{i<n-1} 100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2.
// Throws DomainViolation if an entry is outside {-2, ..., 2}.
double rosenbrock_value(std::span<const double> x);

// Discrete value selection: each of `dimension` variables takes a value from
// `alphabet`; solutions are index vectors.
struct DvsProblem {
  std::string name;
  std::vector<double> alphabet;
  std::size_t dimension = 0;
  std::function<double(std::span<const double>)> objective;

  // Throws InvalidSize if the alphabet has fewer than 2 values or dimension < 2.
  void validate() const;
};

DvsProblem make_rosenbrock(std::size_t n);

// x_i = alphabet[indices_i]. Throws IndexOutOfRange.
std::vector<double> dvs_decode(std::span<const int> indices, std::span<const double> alphabet);

// (best - optimum) / optimum * 100. Throws DivisionByZero when optimum == 0.
double tsp_error(double best, double optimum);
// (optimum - best) / optimum * 100. Throws DivisionByZero when optimum == 0.
double maxcut_error(double best, double optimum);

using ProblemInstance = std::variant<TspInstance, MaxCutInstance, DvsProblem>;

std::string instance_name(const ProblemInstance& instance);

// ---- Engine adapters -------------------------------------------------------
// Adapters keep a reference: the instance must outlive them.

class TspObjective final : public Objective {
 public:
  explicit TspObjective(const TspInstance& instance) : instance_(instance) {}

  Representation representation() const override { return Representation::Permutation; }
  std::size_t dimension() const override { return instance_.size(); }
  int alphabet_size() const override { return 0; }
  double evaluate(std::span<const int> tour) const override;

 private:
  const TspInstance& instance_;
};

// Minimizes P(x) over the n free variables.
class QuboObjective final : public Objective {
 public:
  explicit QuboObjective(const MaxCutInstance& instance) : instance_(instance) {}

  Representation representation() const override { return Representation::Value; }
  std::size_t dimension() const override { return instance_.variable_count(); }
  int alphabet_size() const override { return 2; }
  double evaluate(std::span<const int> x) const override;

 private:
  const MaxCutInstance& instance_;
};

class DvsObjective final : public Objective {
 public:
  explicit DvsObjective(const DvsProblem& problem);

  Representation representation() const override { return Representation::Value; }
  std::size_t dimension() const override { return problem_.dimension; }
  int alphabet_size() const override { return static_cast<int>(problem_.alphabet.size()); }
  double evaluate(std::span<const int> indices) const override;

 private:
  const DvsProblem& problem_;
};

std::unique_ptr<Objective> make_objective(const ProblemInstance& instance);

}  // namespace dsta
