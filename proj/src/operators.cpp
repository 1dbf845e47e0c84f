#include "dsta/operators.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "dsta/errors.hpp"

namespace dsta::ops {

namespace {

// Inline buffer for the handful of positions a move touches.
using Positions = std::vector<std::size_t>;

// k distinct positions from [0, n), Floyd's algorithm. Order is by insertion.
void choose_positions(std::size_t n, std::size_t k, Rng& rng, Positions& out) {
  out.clear();
  for (std::size_t j = n - k; j < n; ++j) {
    const auto t = static_cast<std::size_t>(rng.below(j + 1));
    if (std::find(out.begin(), out.end(), t) == out.end()) {
      out.push_back(t);
    } else {
      out.push_back(j);
    }
  }
}

// Fisher-Yates over 0..k-1, redrawn while it is the identity.
void non_identity_arrangement(std::size_t k, Rng& rng, Positions& out) {
  out.resize(k);
  bool identity = true;
  while (identity) {
    std::iota(out.begin(), out.end(), std::size_t{0});
    for (std::size_t i = k - 1; i > 0; --i) {
      std::swap(out[i], out[rng.below(i + 1)]);
    }
    identity = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (out[i] != i) {
        identity = false;
        break;
      }
    }
  }
}

void draw_swap(std::span<int> seq, int swap_factor, Rng& rng) {
  Positions positions, arrangement;
  const auto k = static_cast<std::size_t>(rng.between(2, swap_factor));
  choose_positions(seq.size(), k, rng, positions);
  non_identity_arrangement(k, rng, arrangement);
  exchange(seq, positions, arrangement);
}

void draw_shift(std::span<int> seq, int shift_factor, Rng& rng) {
  const std::size_t n = seq.size();
  const auto length = static_cast<std::size_t>(rng.between(1, shift_factor));
  const auto first = static_cast<std::size_t>(rng.below(n - length + 1));
  auto slot = static_cast<std::size_t>(rng.below(n - length));
  if (slot >= first) ++slot;
  move_segment(seq, first, length, slot);
}

void draw_symmetry(std::span<int> seq, int symmetry_factor, Rng& rng) {
  const std::size_t n = seq.size();
  const auto center = static_cast<std::size_t>(rng.between(0, symmetry_factor));
  // Center start s leaves s entries before and n - s - center after, both >= 1.
  const std::size_t start = 1 + static_cast<std::size_t>(rng.below(n - center - 1));
  const std::size_t room = std::min(start, n - start - center);
  const std::size_t half = 1 + static_cast<std::size_t>(rng.below(room));
  reverse_window(seq, start - half, 2 * half + center);
}

template <class Draw>
bool draw_changed(std::span<int> seq, Entries entries, Draw draw) {
  if (entries == Entries::Distinct) {
    draw();
    return true;
  }
  if (is_constant(seq)) return false;
  const std::vector<int> before(seq.begin(), seq.end());
  do {
    std::copy(before.begin(), before.end(), seq.begin());
    draw();
  } while (std::equal(before.begin(), before.end(), seq.begin()));
  return true;
}

std::string fit_message(const Transform& t, std::size_t n, std::size_t need) {
  return std::string(to_string(t.kind)) + " with factor " + std::to_string(t.factor) +
         " needs at least " + std::to_string(need) + " entries, state has " +
         std::to_string(n);
}

}  // namespace

void exchange(std::span<int> seq, std::span<const std::size_t> positions,
              std::span<const std::size_t> arrangement) {
  assert(positions.size() == arrangement.size());
  int old[64];
  std::vector<int> spill;
  int* buffer = old;
  if (positions.size() > std::size(old)) {
    spill.resize(positions.size());
    buffer = spill.data();
  }
  for (std::size_t i = 0; i < positions.size(); ++i) buffer[i] = seq[positions[i]];
  for (std::size_t i = 0; i < positions.size(); ++i) {
    seq[positions[i]] = buffer[arrangement[i]];
  }
}

void move_segment(std::span<int> seq, std::size_t first, std::size_t length,
                  std::size_t slot) {
  assert(first + length <= seq.size());
  assert(slot <= seq.size() - length);
  auto base = seq.begin();
  if (slot < first) {
    std::rotate(base + slot, base + first, base + first + length);
  } else if (slot > first) {
    std::rotate(base + first, base + first + length, base + slot + length);
  }
}

void reverse_window(std::span<int> seq, std::size_t first, std::size_t length) {
  assert(first + length <= seq.size());
  std::reverse(seq.begin() + first, seq.begin() + first + length);
}

void substitute(std::span<int> seq, std::span<const std::size_t> positions,
                std::span<const int> new_values) {
  assert(positions.size() == new_values.size());
  for (std::size_t i = 0; i < positions.size(); ++i) seq[positions[i]] = new_values[i];
}

bool is_constant(std::span<const int> seq) noexcept {
  return std::adjacent_find(seq.begin(), seq.end(), std::not_equal_to<>()) == seq.end();
}

void check_fits(const Transform& t, std::size_t n) {
  std::size_t need = 2;
  switch (t.kind) {
    case OperatorKind::Swap:
      need = std::max<std::size_t>(2, static_cast<std::size_t>(t.factor));
      break;
    case OperatorKind::Shift:
      need = static_cast<std::size_t>(t.factor) + 1;
      break;
    case OperatorKind::Symmetry:
      need = static_cast<std::size_t>(t.factor) + 3;
      break;
    case OperatorKind::Substitute:
      need = std::max<std::size_t>(1, static_cast<std::size_t>(t.factor));
      break;
  }
  if (n < need) throw DegenerateState(fit_message(t, n, need));
}

bool swap_in_place(std::span<int> seq, int swap_factor, Rng& rng, Entries entries) {
  check_fits({OperatorKind::Swap, swap_factor}, seq.size());
  return draw_changed(seq, entries, [&] { draw_swap(seq, swap_factor, rng); });
}

bool shift_in_place(std::span<int> seq, int shift_factor, Rng& rng, Entries entries) {
  check_fits({OperatorKind::Shift, shift_factor}, seq.size());
  return draw_changed(seq, entries, [&] { draw_shift(seq, shift_factor, rng); });
}

bool symmetry_in_place(std::span<int> seq, int symmetry_factor, Rng& rng,
                       Entries entries) {
  check_fits({OperatorKind::Symmetry, symmetry_factor}, seq.size());
  return draw_changed(seq, entries, [&] { draw_symmetry(seq, symmetry_factor, rng); });
}

void substitute_in_place(std::span<int> seq, int substitute_factor, int alphabet_size,
                         Rng& rng) {
  check_fits({OperatorKind::Substitute, substitute_factor}, seq.size());
  if (alphabet_size < 2) throw DegenerateState("substitute needs an alphabet of size >= 2");
  Positions positions;
  const auto k = static_cast<std::size_t>(rng.between(1, substitute_factor));
  choose_positions(seq.size(), k, rng, positions);
  for (std::size_t p : positions) {
    int value = static_cast<int>(rng.below(static_cast<std::uint64_t>(alphabet_size - 1)));
    if (value >= seq[p]) ++value;
    seq[p] = value;
  }
}

void apply(const Transform& t, std::span<int> seq, Entries entries, int alphabet_size,
           Rng& rng) {
  switch (t.kind) {
    case OperatorKind::Swap:
      swap_in_place(seq, t.factor, rng, entries);
      return;
    case OperatorKind::Shift:
      shift_in_place(seq, t.factor, rng, entries);
      return;
    case OperatorKind::Symmetry:
      symmetry_in_place(seq, t.factor, rng, entries);
      return;
    case OperatorKind::Substitute:
      if (entries == Entries::Distinct) {
        throw IncompatibleRepresentation("substitute cannot be applied to a permutation");
      }
      substitute_in_place(seq, t.factor, alphabet_size, rng);
      return;
  }
}

}  // namespace dsta::ops

namespace dsta {

namespace {

template <class Fn>
PermutationState on_copy(const PermutationState& state, Fn fn) {
  std::vector<int> order(state.order().begin(), state.order().end());
  fn(std::span<int>(order));
  return PermutationState(std::move(order));
}

template <class Fn>
ValueState on_copy(const ValueState& state, Fn fn) {
  std::vector<int> values(state.values().begin(), state.values().end());
  fn(std::span<int>(values));
  return ValueState(std::move(values), state.alphabet_size());
}

}  // namespace

PermutationState swap_sample(const PermutationState& state, int swap_factor, Rng& rng) {
  return on_copy(state, [&](std::span<int> s) { ops::swap_in_place(s, swap_factor, rng); });
}

ValueState swap_sample(const ValueState& state, int swap_factor, Rng& rng) {
  return on_copy(state, [&](std::span<int> s) {
    ops::swap_in_place(s, swap_factor, rng, Entries::Repeated);
  });
}

PermutationState shift_sample(const PermutationState& state, int shift_factor, Rng& rng) {
  return on_copy(state, [&](std::span<int> s) { ops::shift_in_place(s, shift_factor, rng); });
}

ValueState shift_sample(const ValueState& state, int shift_factor, Rng& rng) {
  return on_copy(state, [&](std::span<int> s) {
    ops::shift_in_place(s, shift_factor, rng, Entries::Repeated);
  });
}

PermutationState symmetry_sample(const PermutationState& state, int symmetry_factor,
                                 Rng& rng) {
  return on_copy(state,
                 [&](std::span<int> s) { ops::symmetry_in_place(s, symmetry_factor, rng); });
}

ValueState symmetry_sample(const ValueState& state, int symmetry_factor, Rng& rng) {
  return on_copy(state, [&](std::span<int> s) {
    ops::symmetry_in_place(s, symmetry_factor, rng, Entries::Repeated);
  });
}

ValueState substitute_sample(const ValueState& state, int substitute_factor, Rng& rng) {
  return on_copy(state, [&](std::span<int> s) {
    ops::substitute_in_place(s, substitute_factor, state.alphabet_size(), rng);
  });
}

PermutationState substitute_sample(const PermutationState&, int, Rng&) {
  throw IncompatibleRepresentation("substitute cannot be applied to a permutation");
}

std::vector<PermutationState> sample_neighborhood(const PermutationState& state,
                                                  const Transform& t, int se, Rng& rng) {
  std::vector<PermutationState> out;
  out.reserve(static_cast<std::size_t>(std::max(se, 0)));
  for (int i = 0; i < se; ++i) {
    out.push_back(on_copy(state, [&](std::span<int> s) {
      ops::apply(t, s, Entries::Distinct, 0, rng);
    }));
  }
  return out;
}

std::vector<ValueState> sample_neighborhood(const ValueState& state, const Transform& t,
                                            int se, Rng& rng) {
  std::vector<ValueState> out;
  out.reserve(static_cast<std::size_t>(std::max(se, 0)));
  for (int i = 0; i < se; ++i) {
    out.push_back(on_copy(state, [&](std::span<int> s) {
      ops::apply(t, s, Entries::Repeated, state.alphabet_size(), rng);
    }));
  }
  return out;
}

}  // namespace dsta
