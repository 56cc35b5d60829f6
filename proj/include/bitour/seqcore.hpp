#pragma once

// Bounded integer sequences, conjugation and trimming.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitour {

using Score = std::int64_t;
using IntSeq = std::vector<Score>;

class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PositionNotPositive : public std::invalid_argument {
 public:
  explicit PositionNotPositive(std::size_t index)
      : std::invalid_argument("trim position " + std::to_string(index) +
                              " does not hold a positive element"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NotEnoughPositives : public std::domain_error {
 public:
  NotEnoughPositives(Score requested, std::size_t available)
      : std::domain_error("NotEnoughPositives(" + std::to_string(requested) + "," +
                          std::to_string(available) + ")"),
        requested_(requested),
        available_(available) {}

  Score requested() const noexcept { return requested_; }
  std::size_t available() const noexcept { return available_; }

 private:
  Score requested_;
  std::size_t available_;
};

inline void require_nonnegative(std::span<const Score> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 0) {
      throw InvalidSequence("element " + std::to_string(i) + " is negative (" +
                            std::to_string(elems[i]) + ")");
    }
  }
}

inline Score sum_of(std::span<const Score> elems) {
  return std::accumulate(elems.begin(), elems.end(), Score{0});
}

inline IntSeq sorted_copy(IntSeq s) {
  std::ranges::sort(s);
  return s;
}

/// An (m,n)-sequence: m elements, each in [0, n]. The bound travels with the
/// elements so that conjugation is well defined.
class BoundedSeq {
 public:
  BoundedSeq() = default;

  explicit BoundedSeq(IntSeq elems, Score bound) : elems_(std::move(elems)), bound_(bound) {
    if (bound_ < 0) {
      throw InvalidSequence("bound " + std::to_string(bound_) + " is negative");
    }
    require_nonnegative(elems_);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] > bound_) {
        throw InvalidSequence("element " + std::to_string(i) + " (" + std::to_string(elems_[i]) +
                              ") exceeds bound " + std::to_string(bound_));
      }
    }
  }

  const IntSeq& elems() const noexcept { return elems_; }
  Score bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Score operator[](std::size_t i) const { return elems_.at(i); }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  Score sum() const { return sum_of(elems_); }
  bool is_zero() const {
    return std::ranges::all_of(elems_, [](Score e) { return e == 0; });
  }

  friend bool operator==(const BoundedSeq&, const BoundedSeq&) = default;

 private:
  IntSeq elems_;
  Score bound_ = 0;
};

inline BoundedSeq conjugate(const BoundedSeq& s) {
  IntSeq out;
  out.reserve(s.size());
  for (Score e : s) out.push_back(s.bound() - e);
  return BoundedSeq(std::move(out), s.bound());
}

inline std::size_t positive_count(std::span<const Score> elems) {
  return static_cast<std::size_t>(std::ranges::count_if(elems, [](Score e) { return e > 0; }));
}

inline std::size_t positive_count(const BoundedSeq& s) { return positive_count(s.elems()); }

/// General c-trimming: subtract one from each selected position. Every
/// selected element must be positive and positions must be distinct.
inline BoundedSeq trim(const BoundedSeq& s, std::span<const std::size_t> positions) {
  IntSeq out = s.elems();
  std::vector<bool> seen(out.size(), false);
  for (std::size_t p : positions) {
    if (p >= out.size()) {
      throw std::out_of_range("trim position " + std::to_string(p) + " out of range");
    }
    if (seen[p]) {
      throw std::invalid_argument("trim position " + std::to_string(p) + " selected twice");
    }
    seen[p] = true;
    if (out[p] <= 0) throw PositionNotPositive(p);
    --out[p];
  }
  return BoundedSeq(std::move(out), s.bound());
}

/// Indices that a normal c-trimming decrements: the c largest positive
/// elements, equal values taken smallest index first. Returned ascending.
inline std::vector<std::size_t> normal_trim_positions(std::span<const Score> elems, Score c) {
  if (c < 0) throw std::invalid_argument("trim amount " + std::to_string(c) + " is negative");
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] > 0) candidates.push_back(i);
  }
  if (static_cast<std::size_t>(c) > candidates.size()) {
    throw NotEnoughPositives(c, candidates.size());
  }
  std::ranges::stable_sort(candidates,
                           [&](std::size_t l, std::size_t r) { return elems[l] > elems[r]; });
  candidates.resize(static_cast<std::size_t>(c));
  std::ranges::sort(candidates);
  return candidates;
}

inline BoundedSeq normal_trim(const BoundedSeq& s, Score c) {
  const auto picks = normal_trim_positions(s.elems(), c);
  IntSeq out = s.elems();
  for (std::size_t p : picks) --out[p];
  return BoundedSeq(std::move(out), s.bound());
}

struct TrimStep {
  Score amount = 0;
  BoundedSeq result;

  friend bool operator==(const TrimStep&, const TrimStep&) = default;
};

/// Every intermediate sequence of a trimming schedule, starting from the
/// untouched input. Zero positions are never dropped.
struct TrimTrace {
  BoundedSeq initial;
  std::vector<TrimStep> steps;

  const BoundedSeq& final() const { return steps.empty() ? initial : steps.back().result; }
  IntSeq schedule() const {
    IntSeq out;
    for (const auto& st : steps) out.push_back(st.amount);
    return out;
  }

  friend bool operator==(const TrimTrace&, const TrimTrace&) = default;
};

struct TrimFailure {
  std::size_t step = 0;  // 1-based index into the schedule
  Score requested = 0;
  std::size_t available = 0;

  friend bool operator==(const TrimFailure&, const TrimFailure&) = default;
};

struct TrimOutcome {
  TrimTrace trace;
  std::optional<TrimFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
  const BoundedSeq& result() const { return trace.final(); }
};

/// Successive normal trimmings by each schedule amount, in order. On failure
/// the trace holds the steps that did succeed.
inline TrimOutcome trim_by_sequence(const BoundedSeq& s, std::span<const Score> schedule) {
  require_nonnegative(schedule);
  TrimOutcome out{TrimTrace{s, {}}, std::nullopt};
  out.trace.steps.reserve(schedule.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const BoundedSeq& current = out.trace.final();
    try {
      out.trace.steps.push_back(TrimStep{schedule[i], normal_trim(current, schedule[i])});
    } catch (const NotEnoughPositives& e) {
      out.failure = TrimFailure{i + 1, e.requested(), e.available()};
      break;
    }
  }
  return out;
}

/// c copies of the sequence, every element multiplied by c. The bound
/// scales by c as well.
inline BoundedSeq replicate_scale(const BoundedSeq& s, Score c) {
  if (c < 1) throw std::invalid_argument("replication factor must be at least 1");
  IntSeq out;
  out.reserve(s.size() * static_cast<std::size_t>(c));
  for (Score copy = 0; copy < c; ++copy) {
    for (Score e : s) out.push_back(c * e);
  }
  return BoundedSeq(std::move(out), c * s.bound());
}

}  // namespace bitour
