#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dsta {

// A tour: an ordering of the city indices 0..n-1, each exactly once.
// City indices are 0-based internally; use from_one_based/one_based for the
// 1-based numbering of TSPLIB files and published routes.
class PermutationState {
 public:
  // Throws DegenerateState if n < 3 or the sequence is not a bijection.
  explicit PermutationState(std::vector<int> order);

  static PermutationState identity(std::size_t n);
  static PermutationState from_one_based(std::span<const int> order);

  std::span<const int> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  int operator[](std::size_t i) const { return order_[i]; }
  std::vector<int> one_based() const;

  static bool is_valid(std::span<const int> order) noexcept;

  friend bool operator==(const PermutationState&, const PermutationState&) = default;

 private:
  std::vector<int> order_;
};

// An index vector into a finite value alphabet of size m: entries in [0, m).
class ValueState {
 public:
  // Throws DegenerateState if the length is < 2 or m < 2, DomainViolation if an
  // entry is out of range.
  ValueState(std::vector<int> values, int alphabet_size);

  std::span<const int> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  int alphabet_size() const noexcept { return alphabet_size_; }
  int operator[](std::size_t i) const { return values_[i]; }

  static bool is_valid(std::span<const int> values, int alphabet_size) noexcept;

  friend bool operator==(const ValueState&, const ValueState&) = default;

 private:
  std::vector<int> values_;
  int alphabet_size_;
};

}  // namespace dsta
