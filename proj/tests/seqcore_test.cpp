#include <bitour/seqcore.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <vector>

namespace bitour {
namespace {

// Every sequence of the given length with elements in [0, max_elem].
std::vector<IntSeq> all_sequences(std::size_t length, Score max_elem) {
  std::vector<IntSeq> out{IntSeq{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<IntSeq> next;
    for (const auto& s : out) {
      for (Score v = 0; v <= max_elem; ++v) {
        next.push_back(s);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

// All index subsets of [0, n) with exactly c members.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t c) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != c) continue;
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) pick.push_back(i);
    }
    out.push_back(pick);
  }
  return out;
}

// Does some sequence of general trimmings (any positions at every step)
// carry s through the whole schedule?
bool general_schedule_exists(const IntSeq& s, const IntSeq& schedule, std::size_t step = 0) {
  if (step == schedule.size()) return true;
  const auto c = static_cast<std::size_t>(schedule[step]);
  for (const auto& pick : subsets_of_size(s.size(), c)) {
    if (!std::ranges::all_of(pick, [&](std::size_t p) { return s[p] > 0; })) continue;
    IntSeq next = s;
    for (std::size_t p : pick) --next[p];
    if (general_schedule_exists(next, schedule, step + 1)) return true;
  }
  return false;
}

TEST(BoundedSeq, RejectsElementsAboveBoundOrNegative) {
  EXPECT_THROW(BoundedSeq({1, 5}, 4), InvalidSequence);
  EXPECT_THROW(BoundedSeq({-1}, 4), InvalidSequence);
  EXPECT_THROW(BoundedSeq({}, -1), InvalidSequence);
  EXPECT_NO_THROW(BoundedSeq({}, 0));
  EXPECT_NO_THROW(BoundedSeq({4, 0}, 4));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(BoundedSeq({1, 2, 2, 2, 3}, 4)).elems(), (IntSeq{3, 2, 2, 2, 1}));
  EXPECT_EQ(conjugate(BoundedSeq({1, 2, 3, 5, 6}, 6)).elems(), (IntSeq{5, 4, 3, 1, 0}));
  EXPECT_EQ(conjugate(BoundedSeq({0, 0, 0}, 0)).elems(), (IntSeq{0, 0, 0}));
  EXPECT_EQ(conjugate(BoundedSeq({1}, 3)).bound(), 3);
}

TEST(Conjugate, InvolutionAndSum) {
  for (std::size_t len = 0; len <= 4; ++len) {
    for (const auto& elems : all_sequences(len, 3)) {
      const BoundedSeq s(elems, 3);
      const BoundedSeq c = conjugate(s);
      EXPECT_EQ(conjugate(c), s);
      EXPECT_EQ(c.sum(), static_cast<Score>(len) * 3 - s.sum());
    }
  }
}

TEST(PositiveCount, Examples) {
  EXPECT_EQ(positive_count(BoundedSeq({0, 2, 1, 5, 3, 2}, 6)), 5U);
  EXPECT_EQ(positive_count(BoundedSeq({0, 0, 0}, 1)), 0U);
  EXPECT_EQ(positive_count(BoundedSeq({5, 4, 3, 1, 0}, 6)), 4U);
}

TEST(Trim, GeneralTrimming) {
  const BoundedSeq a({0, 2, 1, 5, 3, 2}, 6);
  const std::vector<std::size_t> picks{1, 2, 3};
  EXPECT_EQ(trim(a, picks).elems(), (IntSeq{0, 1, 0, 4, 3, 2}));
  EXPECT_EQ(trim(a, {}), a);
  const std::vector<std::size_t> both{0, 1};
  EXPECT_EQ(trim(BoundedSeq({1, 1}, 1), both).elems(), (IntSeq{0, 0}));
}

TEST(Trim, RejectsZeroPositionAndDuplicates) {
  const BoundedSeq a({0, 2}, 2);
  const std::vector<std::size_t> zero{0};
  try {
    trim(a, zero);
    FAIL() << "expected PositionNotPositive";
  } catch (const PositionNotPositive& e) {
    EXPECT_EQ(e.index(), 0U);
  }
  const std::vector<std::size_t> twice{1, 1};
  EXPECT_THROW(trim(a, twice), std::invalid_argument);
  const std::vector<std::size_t> outside{2};
  EXPECT_THROW(trim(a, outside), std::out_of_range);
}

TEST(NormalTrim, Examples) {
  const BoundedSeq a({0, 2, 1, 5, 3, 2}, 6);
  const BoundedSeq a3 = normal_trim(a, 3);
  EXPECT_EQ(a3.elems(), (IntSeq{0, 1, 1, 4, 2, 2}));
  EXPECT_EQ(normal_trim(a3, 5).elems(), (IntSeq{0, 0, 0, 3, 1, 1}));
  EXPECT_EQ(normal_trim(a, 0), a);
}

TEST(NormalTrim, NotEnoughPositives) {
  try {
    normal_trim(BoundedSeq({5, 4, 3, 1, 0}, 6), 6);
    FAIL() << "expected NotEnoughPositives";
  } catch (const NotEnoughPositives& e) {
    EXPECT_EQ(e.requested(), 6);
    EXPECT_EQ(e.available(), 4U);
  }
}

TEST(NormalTrim, TiesTakeSmallestIndexFirst) {
  EXPECT_EQ(normal_trim(BoundedSeq({2, 3, 2, 2}, 3), 2).elems(), (IntSeq{1, 2, 2, 2}));
  EXPECT_EQ(normal_trim_positions(IntSeq{1, 1, 1}, 2), (std::vector<std::size_t>{0, 1}));
}

TEST(NormalTrim, SumDropsByAmountAndMaximisesPositives) {
  for (std::size_t len = 0; len <= 5; ++len) {
    for (const auto& elems : all_sequences(len, 3)) {
      const BoundedSeq s(elems, 3);
      const auto positives = positive_count(s);
      for (std::size_t c = 0; c <= positives; ++c) {
        const BoundedSeq normal = normal_trim(s, static_cast<Score>(c));
        ASSERT_EQ(normal.sum(), s.sum() - static_cast<Score>(c));
        for (const auto& pick : subsets_of_size(len, c)) {
          if (!std::ranges::all_of(pick, [&](std::size_t p) { return elems[p] > 0; })) continue;
          ASSERT_GE(positive_count(normal), positive_count(trim(s, pick)));
        }
      }
    }
  }
}

TEST(TrimBySequence, GoldenTraces) {
  const BoundedSeq b_bar({3, 2, 2, 2, 1}, 4);
  const IntSeq schedule{5, 3, 2};
  const auto out = trim_by_sequence(b_bar, schedule);
  ASSERT_TRUE(out.ok());
  ASSERT_EQ(out.trace.steps.size(), 3U);
  EXPECT_EQ(out.trace.steps[0].result.elems(), (IntSeq{2, 1, 1, 1, 0}));
  EXPECT_EQ(out.trace.steps[1].result.elems(), (IntSeq{1, 0, 0, 1, 0}));
  EXPECT_EQ(out.trace.steps[2].result.elems(), (IntSeq{0, 0, 0, 0, 0}));
  // The published derivation lists the same multisets in another order.
  EXPECT_EQ(sorted_copy(out.trace.steps[0].result.elems()), sorted_copy({0, 1, 1, 1, 2}));
  EXPECT_EQ(sorted_copy(out.trace.steps[1].result.elems()), sorted_copy({0, 1, 0, 0, 1}));
  EXPECT_EQ(normal_trim(BoundedSeq({1, 2, 2, 2, 3}, 4), 5).elems(), (IntSeq{0, 1, 1, 1, 2}));

  const IntSeq permuted{2, 0, 3, 5};
  const auto p = trim_by_sequence(b_bar, permuted);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p.trace.steps[0].result.elems(), (IntSeq{2, 1, 2, 2, 1}));
  EXPECT_EQ(p.trace.steps[1].result.elems(), (IntSeq{2, 1, 2, 2, 1}));
  EXPECT_EQ(p.trace.steps[2].result.elems(), (IntSeq{1, 1, 1, 1, 1}));
  EXPECT_TRUE(p.result().is_zero());

  const IntSeq a{1, 1, 2, 2, 3, 4};
  const auto q = trim_by_sequence(BoundedSeq({5, 4, 3, 1, 0}, 6), a);
  ASSERT_TRUE(q.ok());
  EXPECT_EQ(q.result().elems(), (IntSeq{0, 0, 0, 0, 0}));
}

TEST(TrimBySequence, FailureCarriesStepAndPartialTrace) {
  const IntSeq schedule{1, 2};
  const auto out = trim_by_sequence(BoundedSeq({1}, 1), IntSeq{2});
  ASSERT_FALSE(out.ok());
  EXPECT_EQ(*out.failure, (TrimFailure{1, 2, 1}));
  EXPECT_TRUE(out.trace.steps.empty());

  const auto later = trim_by_sequence(BoundedSeq({1, 1}, 1), schedule);
  ASSERT_FALSE(later.ok());
  EXPECT_EQ(later.failure->step, 2U);
  EXPECT_EQ(later.failure->available, 1U);
  ASSERT_EQ(later.trace.steps.size(), 1U);
  EXPECT_EQ(later.trace.final().elems(), (IntSeq{0, 1}));
}

TEST(TrimBySequence, ConsecutiveStepsDifferByAmount) {
  const auto out = trim_by_sequence(BoundedSeq({4, 3, 3, 2}, 4), IntSeq{2, 0, 3, 1});
  ASSERT_TRUE(out.ok());
  Score prev = out.trace.initial.sum();
  for (const auto& st : out.trace.steps) {
    EXPECT_EQ(prev - st.result.sum(), st.amount);
    prev = st.result.sum();
  }
}

TEST(TrimBySequence, NormalScheduleExistsWheneverSomeGeneralOneDoes) {
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const auto& elems : all_sequences(len, 2)) {
      for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& schedule : all_sequences(k, 3)) {
          if (!general_schedule_exists(elems, schedule)) continue;
          ASSERT_TRUE(trim_by_sequence(BoundedSeq(elems, 2), schedule).ok())
              << "normal schedule failed where a general one exists";
        }
      }
    }
  }
}

TEST(TrimBySequence, EqualSumsTrimToZero) {
  for (std::size_t m = 0; m <= 4; ++m) {
    for (const auto& a : all_sequences(m, 3)) {
      for (std::size_t n = 0; n <= 3; ++n) {
        for (const auto& b : all_sequences(n, 3)) {
          if (sum_of(a) != sum_of(b)) continue;
          const auto out = trim_by_sequence(BoundedSeq(a, 3), b);
          if (out.ok()) {
            ASSERT_TRUE(out.result().is_zero());
          }
        }
      }
    }
  }
}

TEST(TrimBySequence, SuccessIsInvariantUnderScheduleOrder) {
  for (std::size_t nb = 1; nb <= 4; ++nb) {
    for (const auto& b : all_sequences(nb, 3)) {
      const BoundedSeq s(b, 3);
      for (std::size_t na = 1; na <= 5; ++na) {
        for (auto a : all_sequences(na, static_cast<Score>(nb))) {
          if (!std::ranges::is_sorted(a) || sum_of(a) != s.sum()) continue;
          if (!trim_by_sequence(s, a).ok()) continue;
          do {
            ASSERT_TRUE(trim_by_sequence(s, a).ok());
            ASSERT_TRUE(trim_by_sequence(s, a).result().is_zero());
          } while (std::ranges::next_permutation(a).found);
        }
      }
    }
  }
}

TEST(TrimBySequence, EmptySequenceAndEmptySchedule) {
  EXPECT_TRUE(trim_by_sequence(BoundedSeq({}, 3), IntSeq{0, 0}).ok());
  EXPECT_FALSE(trim_by_sequence(BoundedSeq({}, 3), IntSeq{1}).ok());
  const BoundedSeq s({2, 1}, 2);
  EXPECT_EQ(trim_by_sequence(s, IntSeq{}).result(), s);
  EXPECT_THROW(trim_by_sequence(s, IntSeq{-1}), InvalidSequence);
}

TEST(ReplicateScale, Examples) {
  const BoundedSeq r = replicate_scale(BoundedSeq({1, 0}, 1), 2);
  EXPECT_EQ(r.elems(), (IntSeq{2, 0, 2, 0}));
  EXPECT_EQ(r.bound(), 2);
  const BoundedSeq s({3, 1, 2}, 4);
  EXPECT_EQ(replicate_scale(s, 1), s);
  EXPECT_THROW(replicate_scale(s, 0), std::invalid_argument);

  // (1,1)-feasible pair <1>,<0> replicated by 3 is (3,3)-feasible.
  const BoundedSeq a3 = replicate_scale(BoundedSeq({1}, 1), 3);
  const BoundedSeq b3 = replicate_scale(BoundedSeq({0}, 1), 3);
  EXPECT_EQ(a3.elems(), (IntSeq{3, 3, 3}));
  EXPECT_EQ(a3.bound(), 3);
  EXPECT_EQ(a3.sum() + b3.sum(), 9);
}

TEST(ReplicateScale, LengthBoundAndSum) {
  for (const auto& elems : all_sequences(3, 2)) {
    const BoundedSeq s(elems, 2);
    for (Score c = 1; c <= 3; ++c) {
      const BoundedSeq r = replicate_scale(s, c);
      EXPECT_EQ(r.size(), 3U * static_cast<std::size_t>(c));
      EXPECT_EQ(r.bound(), 2 * c);
      EXPECT_EQ(r.sum(), c * c * s.sum());
    }
  }
}

}  // namespace
}  // namespace bitour
