#pragma once

// Exhaustive ground truth: every orientation of K_{m,n}, every tournament,
// every digraph at desk scale.

#include <bitour/characterize.hpp>
#include <bitour/seqcore.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bitour {

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Sorted (x-side, y-side) score sequences.
using ScorePair = std::pair<IntSeq, IntSeq>;

struct CensusEntry {
  ScorePair pair;
  std::uint64_t realization_count = 0;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

inline constexpr std::size_t bitournament_budget_bits = 24;
inline constexpr std::size_t digraph_budget_bits = 20;

namespace detail {

using CensusMap = std::map<ScorePair, std::uint64_t>;

// Orientation codes in [lo, hi); bit (i*n + j) set means x_i -> y_j.
inline CensusMap census_range(std::size_t m, std::size_t n, std::uint64_t lo, std::uint64_t hi) {
  CensusMap counts;
  const std::uint64_t row_mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  IntSeq xs(m);
  IntSeq ys(n);
  for (std::uint64_t code = lo; code < hi; ++code) {
    std::ranges::fill(ys, static_cast<Score>(m));
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t row = (code >> (i * n)) & row_mask;
      xs[i] = std::popcount(row);
      for (std::size_t j = 0; j < n; ++j) ys[j] -= static_cast<Score>((row >> j) & 1U);
    }
    ++counts[ScorePair{sorted_copy(xs), sorted_copy(ys)}];
  }
  return counts;
}

inline void require_bits(std::size_t bits, std::size_t budget, const std::string& what) {
  if (bits > budget) {
    throw BudgetExceeded(what + " needs 2^" + std::to_string(bits) + " cases; budget is 2^" +
                         std::to_string(budget));
  }
}

}  // namespace detail

/// Census of sorted score pairs over all 2^{m*n} orientations. The code range
/// is split across `workers` independent tasks whose counts are summed.
inline std::vector<CensusEntry> enumerate_bitournaments(std::size_t m, std::size_t n,
                                                        unsigned workers = 1) {
  detail::require_bits(m * n, bitournament_budget_bits, "bitournament census");
  const std::uint64_t total = std::uint64_t{1} << (m * n);
  workers = std::max(1U, workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;

  std::vector<std::future<detail::CensusMap>> parts;
  for (std::uint64_t lo = 0; lo < total; lo += chunk) {
    const std::uint64_t hi = std::min(total, lo + chunk);
    parts.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                               detail::census_range, m, n, lo, hi));
  }
  detail::CensusMap merged;
  for (auto& part : parts) {
    for (const auto& [key, count] : part.get()) merged[key] += count;
  }

  std::vector<CensusEntry> out;
  out.reserve(merged.size());
  for (auto& [key, count] : merged) out.push_back(CensusEntry{key, count});
  return out;
}

/// Distinct sorted score sequences of tournaments of order n.
inline std::vector<IntSeq> enumerate_tournaments(std::size_t n) {
  const std::size_t edges = n < 2 ? 0 : n * (n - 1) / 2;
  detail::require_bits(edges, bitournament_budget_bits, "tournament enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::set<IntSeq> seen;
  IntSeq scores(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << edges); ++code) {
    std::ranges::fill(scores, 0);
    for (std::size_t e = 0; e < edges; ++e) {
      const auto [u, v] = pairs[e];
      ++scores[((code >> e) & 1U) != 0 ? u : v];
    }
    seen.insert(sorted_copy(scores));
  }
  return {seen.begin(), seen.end()};
}

/// Distinct sorted Avery score sequences (n - 1 + outdeg - indeg) over all
/// subsets of the n(n-1) ordered vertex pairs. With oriented_only, 2-cycles
/// are excluded and each unordered pair is absent or carries one arc.
inline std::vector<IntSeq> enumerate_digraphs(std::size_t n, bool oriented_only = false) {
  const std::size_t arcs = n < 2 ? 0 : n * (n - 1);
  detail::require_bits(arcs, digraph_budget_bits, "digraph enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> ordered;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) ordered.emplace_back(u, v);
    }
  }
  std::set<IntSeq> seen;
  IntSeq scores(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << arcs); ++code) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t e = 0; e < arcs; ++e) {
      if (((code >> e) & 1U) != 0) adj[ordered[e].first][ordered[e].second] = true;
    }
    bool two_cycle = false;
    std::ranges::fill(scores, static_cast<Score>(n) - 1);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!adj[u][v]) continue;
        two_cycle = two_cycle || adj[v][u];
        ++scores[u];
        --scores[v];
      }
    }
    if (oriented_only && two_cycle) continue;
    seen.insert(sorted_copy(scores));
  }
  return {seen.begin(), seen.end()};
}

/// All nondecreasing sequences of the given length with elements in [0, bound].
inline std::vector<IntSeq> nondecreasing_sequences(std::size_t length, Score bound) {
  std::vector<IntSeq> out;
  IntSeq cur;
  auto extend = [&](auto&& self, Score lo) -> void {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (Score v = lo; v <= bound; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

/// Every sorted pair (A, B) with A an (m,n)-sequence, B an (n,m)-sequence and
/// sum(A) + sum(B) = m*n.
inline std::vector<ScorePair> candidate_universe(std::size_t m, std::size_t n) {
  const auto as = nondecreasing_sequences(m, static_cast<Score>(n));
  const auto bs = nondecreasing_sequences(n, static_cast<Score>(m));
  std::map<Score, std::vector<const IntSeq*>> b_by_sum;
  for (const auto& b : bs) b_by_sum[sum_of(b)].push_back(&b);
  std::vector<ScorePair> out;
  const auto total = static_cast<Score>(m * n);
  for (const auto& a : as) {
    const auto it = b_by_sum.find(total - sum_of(a));
    if (it == b_by_sum.end()) continue;
    for (const IntSeq* b : it->second) out.emplace_back(a, *b);
  }
  std::ranges::sort(out);
  return out;
}

struct Discrepancy {
  ScorePair pair;
  bool realizable = false;
  bool moon = false;
  bool trimming = false;
  bool in_universe = false;
};

struct CrossValidation {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t candidates = 0;
  std::set<ScorePair> realizable;
  std::set<ScorePair> moon_accepted;
  std::set<ScorePair> trim_accepted;
  std::vector<Discrepancy> discrepancies;

  bool ok() const noexcept { return discrepancies.empty(); }
};

/// Three-way comparison of the enumerated realizable pairs with the pairs
/// accepted by moon_check and by trim_check. Any pair on which the three
/// disagree (or a realizable pair outside the candidate universe) is listed.
inline CrossValidation cross_validate(std::size_t m, std::size_t n, unsigned workers = 1) {
  CrossValidation cv;
  cv.m = m;
  cv.n = n;
  for (auto& entry : enumerate_bitournaments(m, n, workers)) cv.realizable.insert(entry.pair);

  const auto universe = candidate_universe(m, n);
  cv.candidates = universe.size();
  const std::set<ScorePair> in_universe(universe.begin(), universe.end());
  for (const auto& p : universe) {
    if (moon_check(p.first, p.second).accepted()) cv.moon_accepted.insert(p);
    if (trim_check(p.first, p.second).accepted()) cv.trim_accepted.insert(p);
  }

  std::set<ScorePair> all = in_universe;
  all.insert(cv.realizable.begin(), cv.realizable.end());
  for (const auto& p : all) {
    Discrepancy d{p, cv.realizable.contains(p), cv.moon_accepted.contains(p),
                  cv.trim_accepted.contains(p), in_universe.contains(p)};
    if (d.realizable != d.moon || d.moon != d.trimming || !d.in_universe) {
      cv.discrepancies.push_back(std::move(d));
    }
  }
  return cv;
}

namespace detail {

inline std::string join(const IntSeq& s, char sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out.push_back(sep);
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace detail

/// CSV with header x_scores,y_scores,count; each side semicolon-joined.
inline std::string census_csv(const std::vector<CensusEntry>& census) {
  std::ostringstream os;
  os << "x_scores,y_scores,count\n";
  for (const auto& e : census) {
    os << detail::join(e.pair.first, ';') << ',' << detail::join(e.pair.second, ';') << ','
       << e.realization_count << '\n';
  }
  return os.str();
}

}  // namespace bitour
