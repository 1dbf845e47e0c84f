#include "dsta/state.hpp"

#include <numeric>
#include <string>

#include "dsta/errors.hpp"

namespace dsta {

bool PermutationState::is_valid(std::span<const int> order) noexcept {
  const std::size_t n = order.size();
  std::vector<bool> seen(n, false);
  for (int city : order) {
    if (city < 0 || static_cast<std::size_t>(city) >= n || seen[city]) return false;
    seen[city] = true;
  }
  return true;
}

PermutationState::PermutationState(std::vector<int> order) : order_(std::move(order)) {
  if (order_.size() < 3) {
    throw DegenerateState("a tour needs at least 3 cities, got " +
                          std::to_string(order_.size()));
  }
  if (!is_valid(order_)) throw DegenerateState("tour is not a permutation of 0..n-1");
}

PermutationState PermutationState::identity(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return PermutationState(std::move(order));
}

PermutationState PermutationState::from_one_based(std::span<const int> order) {
  std::vector<int> zero_based(order.begin(), order.end());
  for (int& city : zero_based) --city;
  return PermutationState(std::move(zero_based));
}

std::vector<int> PermutationState::one_based() const {
  std::vector<int> out(order_);
  for (int& city : out) ++city;
  return out;
}

bool ValueState::is_valid(std::span<const int> values, int alphabet_size) noexcept {
  for (int v : values) {
    if (v < 0 || v >= alphabet_size) return false;
  }
  return true;
}

ValueState::ValueState(std::vector<int> values, int alphabet_size)
    : values_(std::move(values)), alphabet_size_(alphabet_size) {
  if (values_.size() < 2) {
    throw DegenerateState("a value state needs at least 2 entries, got " +
                          std::to_string(values_.size()));
  }
  if (alphabet_size_ < 2) {
    throw DegenerateState("alphabet size must be at least 2, got " +
                          std::to_string(alphabet_size_));
  }
  if (!is_valid(values_, alphabet_size_)) {
    throw DomainViolation("value index outside [0, " + std::to_string(alphabet_size_) + ")");
  }
}

}  // namespace dsta
