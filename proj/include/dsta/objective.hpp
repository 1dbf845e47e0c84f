#pragma once

#include <cstddef>
#include <span>

namespace dsta {

enum class Representation { Permutation, Value };

// What the engine minimizes. Implementations must be pure: evaluate() may be
// called concurrently from independent runs.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual Representation representation() const = 0;
  virtual std::size_t dimension() const = 0;
  // Size of the value alphabet; 0 for permutation problems.
  virtual int alphabet_size() const = 0;
  // `solution` is a 0-based permutation or an index vector, per representation().
  virtual double evaluate(std::span<const int> solution) const = 0;
};

}  // namespace dsta
