#pragma once

#include <bitour/seqcore.hpp>

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bitour {

enum class Verdict { accept, reject };
enum class Criterion { moon, trimming, landau, avery };

inline std::string_view to_string(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

inline std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::moon: return "moon";
    case Criterion::trimming: return "trimming";
    case Criterion::landau: return "landau";
    case Criterion::avery: return "avery";
  }
  return "unknown";
}

// Witness kinds carried by a rejecting report.

/// Moon inequality sum_{i<=k} a_i + sum_{j<=l} b_j >= k*l failed, or the
/// equality at (m,n) failed.
struct InequalityWitness {
  std::size_t k = 0;
  std::size_t l = 0;
  Score lhs = 0;
  Score rhs = 0;
  friend bool operator==(const InequalityWitness&, const InequalityWitness&) = default;
};

/// Normal trimming of the conjugate by a_step could not find enough positives.
struct TrimStepWitness {
  std::size_t step = 0;
  Score requested = 0;
  std::size_t available = 0;
  friend bool operator==(const TrimStepWitness&, const TrimStepWitness&) = default;
};

/// Landau/Avery prefix condition failed at k.
struct PrefixWitness {
  std::size_t k = 0;
  Score sum = 0;
  Score required = 0;
  friend bool operator==(const PrefixWitness&, const PrefixWitness&) = default;
};

struct SumMismatchWitness {
  Score actual = 0;
  Score expected = 0;
  friend bool operator==(const SumMismatchWitness&, const SumMismatchWitness&) = default;
};

struct BoundMismatchWitness {
  Score a_bound = 0;
  Score b_bound = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  friend bool operator==(const BoundMismatchWitness&, const BoundMismatchWitness&) = default;
};

/// Input validation: element out of [0, bound]. side is 'a' or 'b' ('s' for
/// single-sequence checks).
struct OutOfBoundWitness {
  char side = 'a';
  std::size_t index = 0;
  Score value = 0;
  Score bound = 0;
  friend bool operator==(const OutOfBoundWitness&, const OutOfBoundWitness&) = default;
};

using Witness = std::variant<InequalityWitness, TrimStepWitness, PrefixWitness, SumMismatchWitness,
                             BoundMismatchWitness, OutOfBoundWitness>;

inline bool is_validation_failure(const Witness& w) {
  return std::holds_alternative<OutOfBoundWitness>(w) ||
         std::holds_alternative<BoundMismatchWitness>(w);
}

struct CheckReport {
  Verdict verdict = Verdict::reject;
  Criterion criterion = Criterion::moon;
  std::optional<Witness> witness;
  std::optional<TrimTrace> trace;

  bool accepted() const noexcept { return verdict == Verdict::accept; }
};

class FeasibilityError : public std::invalid_argument {
 public:
  explicit FeasibilityError(Witness w)
      : std::invalid_argument(describe(w)), witness_(std::move(w)) {}

  const Witness& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const Witness& w) {
    if (const auto* s = std::get_if<SumMismatchWitness>(&w)) {
      return "SumMismatch(" + std::to_string(s->actual) + "," + std::to_string(s->expected) + ")";
    }
    if (const auto* b = std::get_if<BoundMismatchWitness>(&w)) {
      return "BoundMismatch: A has bound " + std::to_string(b->a_bound) + " but B has " +
             std::to_string(b->n) + " elements; B has bound " + std::to_string(b->b_bound) +
             " but A has " + std::to_string(b->m) + " elements";
    }
    return "pair is not feasible";
  }

  Witness witness_;
};

/// An (m,n)-feasible pair: A is an (m,n)-sequence, B an (n,m)-sequence, and
/// the element sums total m*n.
class FeasiblePair {
 public:
  const BoundedSeq& a() const noexcept { return a_; }
  const BoundedSeq& b() const noexcept { return b_; }
  std::size_t m() const noexcept { return a_.size(); }
  std::size_t n() const noexcept { return b_.size(); }

 private:
  FeasiblePair(BoundedSeq a, BoundedSeq b) : a_(std::move(a)), b_(std::move(b)) {}
  friend FeasiblePair feasible(BoundedSeq a, BoundedSeq b);

  BoundedSeq a_;
  BoundedSeq b_;
};

inline FeasiblePair feasible(BoundedSeq a, BoundedSeq b) {
  const auto m = a.size();
  const auto n = b.size();
  if (a.bound() != static_cast<Score>(n) || b.bound() != static_cast<Score>(m)) {
    throw FeasibilityError(BoundMismatchWitness{a.bound(), b.bound(), m, n});
  }
  const Score total = a.sum() + b.sum();
  const Score expected = static_cast<Score>(m * n);
  if (total != expected) throw FeasibilityError(SumMismatchWitness{total, expected});
  return FeasiblePair(std::move(a), std::move(b));
}

namespace detail {

inline std::optional<OutOfBoundWitness> first_out_of_bound(std::span<const Score> s, Score bound,
                                                           char side) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] > bound) return OutOfBoundWitness{side, i, s[i], bound};
  }
  return std::nullopt;
}

inline CheckReport reject(Criterion c, Witness w) {
  return CheckReport{Verdict::reject, c, std::move(w), std::nullopt};
}

inline CheckReport accept(Criterion c) {
  return CheckReport{Verdict::accept, c, std::nullopt, std::nullopt};
}

}  // namespace detail

struct MoonRow {
  std::size_t k = 0;
  std::size_t l = 0;
  Score sum = 0;
  Score product = 0;
  friend bool operator==(const MoonRow&, const MoonRow&) = default;
};

/// The full (k, l) table of Moon's condition over the sorted inputs, k-major.
/// Elements are assumed already within bounds.
inline std::vector<MoonRow> moon_table(IntSeq a, IntSeq b) {
  std::ranges::sort(a);
  std::ranges::sort(b);
  std::vector<MoonRow> rows;
  rows.reserve(a.size() * b.size());
  Score prefix_a = 0;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    prefix_a += a[k - 1];
    Score prefix_b = 0;
    for (std::size_t l = 1; l <= b.size(); ++l) {
      prefix_b += b[l - 1];
      rows.push_back(MoonRow{k, l, prefix_a + prefix_b, static_cast<Score>(k * l)});
    }
  }
  return rows;
}

/// Moon's inequality characterization. Inputs are sorted internally; a
/// violation witness is the lexicographically smallest failing (k, l).
inline CheckReport moon_check(IntSeq a, IntSeq b) {
  const auto m = a.size();
  const auto n = b.size();
  if (auto w = detail::first_out_of_bound(a, static_cast<Score>(n), 'a')) {
    return detail::reject(Criterion::moon, *w);
  }
  if (auto w = detail::first_out_of_bound(b, static_cast<Score>(m), 'b')) {
    return detail::reject(Criterion::moon, *w);
  }
  // With m == 0 or n == 0 the other side is forced to zero by the bounds and
  // the only condition left is 0 == m*n, which holds.
  std::ranges::sort(a);
  std::ranges::sort(b);
  Score prefix_a = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    prefix_a += a[k - 1];
    Score prefix_b = 0;
    for (std::size_t l = 1; l <= n; ++l) {
      prefix_b += b[l - 1];
      const Score lhs = prefix_a + prefix_b;
      const auto rhs = static_cast<Score>(k * l);
      if (lhs < rhs || (k == m && l == n && lhs != rhs)) {
        return detail::reject(Criterion::moon, InequalityWitness{k, l, lhs, rhs});
      }
    }
  }
  return detail::accept(Criterion::moon);
}

/// Trimming characterization: the pair must be feasible and the conjugate of
/// B must trim to zero under the schedule A. Order of A and B is irrelevant.
inline CheckReport trim_check(const BoundedSeq& a, const BoundedSeq& b) {
  try {
    (void)feasible(a, b);
  } catch (const FeasibilityError& e) {
    return detail::reject(Criterion::trimming, e.witness());
  }
  auto outcome = trim_by_sequence(conjugate(b), a.elems());
  CheckReport report{Verdict::accept, Criterion::trimming, std::nullopt, std::move(outcome.trace)};
  if (outcome.failure) {
    report.verdict = Verdict::reject;
    report.witness =
        TrimStepWitness{outcome.failure->step, outcome.failure->requested, outcome.failure->available};
  }
  return report;
}

/// Same as above with the default bounds: each side is bounded by the
/// length of the other. Out-of-range elements are a validation rejection.
inline CheckReport trim_check(const IntSeq& a, const IntSeq& b) {
  if (auto w = detail::first_out_of_bound(a, static_cast<Score>(b.size()), 'a')) {
    return detail::reject(Criterion::trimming, *w);
  }
  if (auto w = detail::first_out_of_bound(b, static_cast<Score>(a.size()), 'b')) {
    return detail::reject(Criterion::trimming, *w);
  }
  return trim_check(BoundedSeq(a, static_cast<Score>(b.size())),
                    BoundedSeq(b, static_cast<Score>(a.size())));
}

namespace detail {

inline Score saturating_add(Score x, Score y) {
  Score r = 0;
  if (__builtin_add_overflow(x, y, &r)) return std::numeric_limits<Score>::max();
  return r;
}

// sum_{i<=k} s_i >= weight * C(k,2) for all k, with equality at k = n.
inline CheckReport prefix_check(IntSeq s, Score weight, Criterion c) {
  if (auto w = first_out_of_bound(s, std::numeric_limits<Score>::max(), 's')) {
    return reject(c, *w);
  }
  std::ranges::sort(s);
  const auto n = s.size();
  Score prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix = saturating_add(prefix, s[k - 1]);
    const auto required = weight * static_cast<Score>(k * (k - 1) / 2);
    if (prefix < required || (k == n && prefix != required)) {
      return reject(c, PrefixWitness{k, prefix, required});
    }
  }
  return accept(c);
}

}  // namespace detail

/// Landau: score sequences of tournaments of order n.
inline CheckReport landau_check(IntSeq s) {
  return detail::prefix_check(std::move(s), 1, Criterion::landau);
}

/// Avery: score sequences of digraphs of order n, with score
/// n - 1 + outdegree - indegree.
inline CheckReport avery_check(IntSeq s) {
  return detail::prefix_check(std::move(s), 2, Criterion::avery);
}

/// Trimming success flags (conj(A) trimmed by B, conj(B) trimmed by A) for a
/// feasible pair. The two always agree.
inline std::pair<bool, bool> corollary_symmetry(const BoundedSeq& a, const BoundedSeq& b) {
  (void)feasible(a, b);
  return {trim_by_sequence(conjugate(a), b.elems()).ok(),
          trim_by_sequence(conjugate(b), a.elems()).ok()};
}

}  // namespace bitour
