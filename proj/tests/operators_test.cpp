#include <gtest/gtest.h>

#include <set>

#include "dsta/errors.hpp"
#include "dsta/operators.hpp"
#include "support.hpp"

namespace dsta {
namespace {

using Seq = std::vector<int>;

int hamming(const Seq& a, const Seq& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// Independent enumerations of each operator's neighbor set.

std::set<Seq> swap_support(const Seq& s, int ma) {
  std::set<Seq> out;
  const std::size_t n = s.size();
  // every non-identity rearrangement of at most ma positions
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2 || k > ma) continue;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) pos.push_back(i);
    }
    std::vector<std::size_t> perm(pos);
    while (std::next_permutation(perm.begin(), perm.end())) {
      Seq t = s;
      for (std::size_t i = 0; i < pos.size(); ++i) t[pos[i]] = s[perm[i]];
      if (t != s) out.insert(t);
    }
  }
  return out;
}

std::set<Seq> shift_support(const Seq& s, int mb) {
  std::set<Seq> out;
  const int n = static_cast<int>(s.size());
  for (int len = 1; len <= mb; ++len) {
    for (int first = 0; first + len <= n; ++first) {
      Seq segment(s.begin() + first, s.begin() + first + len);
      Seq rest = s;
      rest.erase(rest.begin() + first, rest.begin() + first + len);
      for (int slot = 0; slot <= n - len; ++slot) {
        Seq t = rest;
        t.insert(t.begin() + slot, segment.begin(), segment.end());
        if (t != s) out.insert(t);
      }
    }
  }
  return out;
}

std::set<Seq> symmetry_support(const Seq& s, int mc) {
  std::set<Seq> out;
  const int n = static_cast<int>(s.size());
  for (int c = 0; c <= mc; ++c) {
    for (int h = 1; 2 * h + c <= n; ++h) {
      for (int a = 0; a + 2 * h + c <= n; ++a) {
        Seq t = s;
        std::reverse(t.begin() + a, t.begin() + a + 2 * h + c);
        if (t != s) out.insert(t);
      }
    }
  }
  return out;
}

std::set<Seq> substitute_support(const Seq& s, int md, int m) {
  std::set<Seq> out;
  const std::size_t n = s.size();
  // all vectors at Hamming distance 1..md
  Seq t(n, 0);
  while (true) {
    const int d = hamming(s, t);
    if (d >= 1 && d <= md) out.insert(t);
    std::size_t i = 0;
    while (i < n && ++t[i] == m) t[i++] = 0;
    if (i == n) break;
  }
  return out;
}

template <class Sample>
std::set<Seq> sampled_support(int draws, Sample sample) {
  std::set<Seq> out;
  for (int i = 0; i < draws; ++i) out.insert(sample());
  return out;
}

TEST(Moves, ExchangeTransposition) {
  Seq s{1, 2, 3, 4, 5};
  const std::size_t pos[] = {1, 3};
  const std::size_t arr[] = {1, 0};
  ops::exchange(s, pos, arr);
  EXPECT_EQ(s, (Seq{1, 4, 3, 2, 5}));

  Seq v{0, 1, 1, 0};
  const std::size_t vpos[] = {0, 1};
  ops::exchange(v, vpos, arr);
  EXPECT_EQ(v, (Seq{1, 0, 1, 0}));
}

TEST(Moves, ShiftPositionThreeAfterFive) {
  Seq s{1, 2, 3, 4, 5};
  ops::move_segment(s, 2, 1, 4);
  EXPECT_EQ(s, (Seq{1, 2, 4, 5, 3}));

  Seq v{0, 1, 0};
  ops::move_segment(v, 0, 1, 2);
  EXPECT_EQ(v, (Seq{1, 0, 0}));
}

TEST(Moves, SymmetryWindowReversal) {
  Seq s{1, 2, 3, 4, 5};
  ops::reverse_window(s, 1, 4);
  EXPECT_EQ(s, (Seq{1, 5, 4, 3, 2}));

  Seq v{0, 0, 1, 1};
  ops::reverse_window(v, 0, 4);
  EXPECT_EQ(v, (Seq{1, 1, 0, 0}));
}

TEST(Moves, Substitute) {
  Seq v{0, 1, 1, 0, 1};
  const std::size_t pos[] = {1};
  const int val[] = {0};
  ops::substitute(v, pos, val);
  EXPECT_EQ(v, (Seq{0, 0, 1, 0, 1}));

  Seq w{1, 3, 2};
  const std::size_t wpos[] = {0};
  const int wval[] = {2};
  ops::substitute(w, wpos, wval);
  EXPECT_EQ(w, (Seq{2, 3, 2}));
}

TEST(Swap, TranspositionsOfFive) {
  Rng rng(11);
  const PermutationState start(test::iota_vector(5));
  const auto oracle = swap_support(test::iota_vector(5), 2);
  ASSERT_EQ(oracle.size(), 10u);
  std::set<Seq> seen;
  for (int i = 0; i < 10000; ++i) {
    const auto out = swap_sample(start, 2, rng);
    const Seq s(out.order().begin(), out.order().end());
    ASSERT_TRUE(PermutationState::is_valid(s));
    ASSERT_EQ(hamming(s, test::iota_vector(5)), 2);
    seen.insert(s);
  }
  EXPECT_EQ(seen, oracle);
}

TEST(Shift, SingleInsertions) {
  Rng rng(12);
  const Seq base = test::iota_vector(5);
  const PermutationState start(base);
  const auto oracle = shift_support(base, 1);
  std::set<Seq> seen;
  for (int i = 0; i < 10000; ++i) {
    const auto out = shift_sample(start, 1, rng);
    const Seq s(out.order().begin(), out.order().end());
    ASSERT_TRUE(PermutationState::is_valid(s));
    ASSERT_NE(s, base);
    ASSERT_TRUE(oracle.count(s)) << "not a single insertion";
    seen.insert(s);
  }
  EXPECT_EQ(seen, oracle);
}

TEST(Symmetry, SingleWindowReversal) {
  Rng rng(13);
  const Seq base = test::iota_vector(6);
  const PermutationState start(base);
  for (int i = 0; i < 10000; ++i) {
    const auto out = symmetry_sample(start, 0, rng);
    Seq s(out.order().begin(), out.order().end());
    ASSERT_NE(s, base);
    std::size_t lo = 0;
    while (s[lo] == base[lo]) ++lo;
    std::size_t hi = s.size();
    while (s[hi - 1] == base[hi - 1]) --hi;
    std::reverse(s.begin() + static_cast<long>(lo), s.begin() + static_cast<long>(hi));
    ASSERT_EQ(s, base);
    ASSERT_EQ((hi - lo) % 2, 0u) << "an empty center gives an even window";
  }
}

TEST(Substitute, BinarySingleFlip) {
  Rng rng(14);
  const ValueState start({0, 1, 1, 0, 1}, 2);
  const Seq base(start.values().begin(), start.values().end());
  for (int i = 0; i < 10000; ++i) {
    const auto out = substitute_sample(start, 1, rng);
    const Seq s(out.values().begin(), out.values().end());
    ASSERT_EQ(hamming(s, base), 1);
  }
}

TEST(Substitute, RejectsPermutations) {
  Rng rng(1);
  EXPECT_THROW(substitute_sample(PermutationState::identity(4), 1, rng),
               IncompatibleRepresentation);
  Seq s = test::iota_vector(4);
  EXPECT_THROW(ops::apply({OperatorKind::Substitute, 1}, s, Entries::Distinct, 0, rng),
               IncompatibleRepresentation);
}

TEST(Operators, DegenerateSizes) {
  Rng rng(1);
  const auto p3 = PermutationState::identity(3);
  EXPECT_THROW(swap_sample(p3, 4, rng), DegenerateState);
  EXPECT_THROW(shift_sample(p3, 3, rng), DegenerateState);
  EXPECT_THROW(symmetry_sample(p3, 1, rng), DegenerateState);
  EXPECT_THROW(substitute_sample(ValueState({0, 1}, 2), 3, rng), DegenerateState);
}

TEST(Operators, ConstantValueVectorHasNoInternalNeighbor) {
  Rng rng(2);
  Seq v{1, 1, 1, 1};
  EXPECT_FALSE(ops::swap_in_place(v, 2, rng, Entries::Repeated));
  EXPECT_FALSE(ops::shift_in_place(v, 1, rng, Entries::Repeated));
  EXPECT_FALSE(ops::symmetry_in_place(v, 0, rng, Entries::Repeated));
  EXPECT_EQ(v, (Seq{1, 1, 1, 1}));
}

TEST(Neighborhood, EmptyForZeroEnforcement) {
  Rng rng(3);
  EXPECT_TRUE(sample_neighborhood(PermutationState::identity(4), {OperatorKind::Swap, 2}, 0, rng)
                  .empty());
}

TEST(Neighborhood, SwapOnThree) {
  Rng rng(4);
  const auto base = PermutationState::identity(3);
  const auto oracle = swap_support(test::iota_vector(3), 2);
  const auto out = sample_neighborhood(base, {OperatorKind::Swap, 2}, 5, rng);
  ASSERT_EQ(out.size(), 5u);
  for (const auto& p : out) {
    EXPECT_TRUE(oracle.count(Seq(p.order().begin(), p.order().end())));
  }
}

TEST(Neighborhood, SubstituteCoversAllFlips) {
  Rng rng(5);
  const ValueState base({0, 1, 0, 1}, 2);
  std::set<Seq> seen;
  for (const auto& v : sample_neighborhood(base, {OperatorKind::Substitute, 1}, 100, rng)) {
    seen.insert(Seq(v.values().begin(), v.values().end()));
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Neighborhood, ValueStatesNeverEqualInput) {
  Rng rng(6);
  const ValueState base({0, 2, 2, 1, 0}, 3);
  for (auto kind : {OperatorKind::Swap, OperatorKind::Shift, OperatorKind::Symmetry,
                    OperatorKind::Substitute}) {
    const int factor = kind == OperatorKind::Swap ? 3 : 1;
    for (const auto& v : sample_neighborhood(base, {kind, factor}, 2000, rng)) {
      ASSERT_NE(v, base) << to_string(kind);
    }
  }
}

// Support of each sampler equals its enumeration, and a larger factor gives a
// strictly larger support.
TEST(Support, GrowsWithFactor) {
  const Seq perm = test::iota_vector(6);
  const Seq values{0, 1, 2, 0, 1};
  Rng rng(7);
  const int draws = 200000;
  for (int ma : {2, 3}) {
    auto sampled = sampled_support(draws, [&] {
      Seq s = perm;
      ops::swap_in_place(s, ma, rng);
      return s;
    });
    EXPECT_EQ(sampled, swap_support(perm, ma)) << "ma=" << ma;
  }
  for (int mb : {1, 2}) {
    auto sampled = sampled_support(draws, [&] {
      Seq s = perm;
      ops::shift_in_place(s, mb, rng);
      return s;
    });
    EXPECT_EQ(sampled, shift_support(perm, mb)) << "mb=" << mb;
  }
  for (int mc : {0, 1}) {
    auto sampled = sampled_support(draws, [&] {
      Seq s = perm;
      ops::symmetry_in_place(s, mc, rng);
      return s;
    });
    EXPECT_EQ(sampled, symmetry_support(perm, mc)) << "mc=" << mc;
  }
  for (int md : {1, 2}) {
    auto sampled = sampled_support(draws, [&] {
      Seq s = values;
      ops::substitute_in_place(s, md, 3, rng);
      return s;
    });
    EXPECT_EQ(sampled, substitute_support(values, md, 3)) << "md=" << md;
  }

  auto strictly_grows = [](const std::set<Seq>& a, const std::set<Seq>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  EXPECT_TRUE(strictly_grows(swap_support(perm, 2), swap_support(perm, 3)));
  EXPECT_TRUE(strictly_grows(shift_support(perm, 1), shift_support(perm, 2)));
  EXPECT_TRUE(strictly_grows(symmetry_support(perm, 0), symmetry_support(perm, 1)));
  EXPECT_TRUE(strictly_grows(substitute_support(values, 1, 3), substitute_support(values, 2, 3)));
}

TEST(Support, ValueSwapOverRepeatedEntries) {
  const Seq values{0, 0, 1, 1, 2};
  Rng rng(8);
  auto sampled = sampled_support(100000, [&] {
    Seq s = values;
    ops::swap_in_place(s, 3, rng, Entries::Repeated);
    return s;
  });
  EXPECT_EQ(sampled, swap_support(values, 3));
}

}  // namespace
}  // namespace dsta
