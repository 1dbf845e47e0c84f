#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsta/params.hpp"
#include "dsta/rng.hpp"
#include "dsta/state.hpp"

namespace dsta {

// One geometric transformation together with its factor (m_a .. m_d).
struct Transform {
  OperatorKind kind;
  int factor;

  friend bool operator==(const Transform&, const Transform&) = default;
};

// Whether the entries of a sequence are pairwise distinct (permutations) or
// may repeat (value vectors). Repeated entries need identity rejection.
enum class Entries { Distinct, Repeated };

namespace ops {

// ---- Deterministic moves -------------------------------------------------
//
// These are the moves the samplers draw from, with every random choice made
// explicit. Positions are 0-based.

// new[positions[i]] = old[positions[arrangement[i]]]; `arrangement` is a
// permutation of 0..k-1.
void exchange(std::span<int> seq, std::span<const std::size_t> positions,
              std::span<const std::size_t> arrangement);

// Removes [first, first + length) and reinserts it at `slot`, an insertion
// index into the n - length remaining entries (0 = front, n - length = back).
// slot == first leaves the sequence unchanged.
void move_segment(std::span<int> seq, std::size_t first, std::size_t length,
                  std::size_t slot);

// Reverses [first, first + length).
void reverse_window(std::span<int> seq, std::size_t first, std::size_t length);

// seq[positions[i]] = new_values[i].
void substitute(std::span<int> seq, std::span<const std::size_t> positions,
                std::span<const int> new_values);

// ---- Samplers --------------------------------------------------------------
//
// Each sampler applies one random move in place. With Entries::Repeated the
// move is redrawn until the sequence changes; a constant sequence has no
// internal neighbor and is left as is (the functions return false then).

// k uniform in {2..swap_factor}, k distinct positions, a uniformly random
// non-identity rearrangement of their entries.
bool swap_in_place(std::span<int> seq, int swap_factor, Rng& rng,
                   Entries entries = Entries::Distinct);

// Segment length uniform in {1..shift_factor}, segment start uniform, and a
// reinsertion slot uniform over every slot except the origin.
bool shift_in_place(std::span<int> seq, int shift_factor, Rng& rng,
                    Entries entries = Entries::Distinct);

// Center length c uniform in {0..symmetry_factor}, center start uniform over
// the places leaving at least one entry on each side, half-length h uniform in
// {1..room}; reverses the 2h + c window around the center.
bool symmetry_in_place(std::span<int> seq, int symmetry_factor, Rng& rng,
                       Entries entries = Entries::Distinct);

// k uniform in {1..substitute_factor}, k distinct positions, each redrawn
// uniformly from the alphabet minus its current value. Always changes exactly
// k entries.
void substitute_in_place(std::span<int> seq, int substitute_factor,
                         int alphabet_size, Rng& rng);

// Dispatches on t.kind. alphabet_size is ignored except for Substitute, which
// throws IncompatibleRepresentation when entries are Distinct.
void apply(const Transform& t, std::span<int> seq, Entries entries,
           int alphabet_size, Rng& rng);

// Checks the size precondition of `t` for a sequence of length n.
// Throws DegenerateState.
void check_fits(const Transform& t, std::size_t n);

bool is_constant(std::span<const int> seq) noexcept;

}  // namespace ops

PermutationState swap_sample(const PermutationState& state, int swap_factor, Rng& rng);
ValueState swap_sample(const ValueState& state, int swap_factor, Rng& rng);
PermutationState shift_sample(const PermutationState& state, int shift_factor, Rng& rng);
ValueState shift_sample(const ValueState& state, int shift_factor, Rng& rng);
PermutationState symmetry_sample(const PermutationState& state, int symmetry_factor,
                                 Rng& rng);
ValueState symmetry_sample(const ValueState& state, int symmetry_factor, Rng& rng);
ValueState substitute_sample(const ValueState& state, int substitute_factor, Rng& rng);
// Always throws IncompatibleRepresentation.
PermutationState substitute_sample(const PermutationState& state, int substitute_factor,
                                   Rng& rng);

// se independent draws of `t` applied to `state`.
std::vector<PermutationState> sample_neighborhood(const PermutationState& state,
                                                  const Transform& t, int se, Rng& rng);
std::vector<ValueState> sample_neighborhood(const ValueState& state, const Transform& t,
                                            int se, Rng& rng);

}  // namespace dsta
