#pragma once

#include <bitour/characterize.hpp>
#include <bitour/seqcore.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bitour {

/// Orientation of K_{m,n}. Cell (i, j) true means the arc x_i -> y_j,
/// false means y_j -> x_i.
class Bitournament {
 public:
  static constexpr std::size_t max_cells = 1'000'000;

  Bitournament(std::size_t m, std::size_t n) : Bitournament(m, n, std::vector<bool>(cell_count(m, n))) {}

  Bitournament(std::size_t m, std::size_t n, std::vector<bool> cells)
      : m_(m), n_(n), cells_(std::move(cells)) {
    if (cells_.size() != cell_count(m, n)) {
      throw std::invalid_argument("bitournament needs " + std::to_string(m * n) + " cells, got " +
                                  std::to_string(cells_.size()));
    }
  }

  /// Bit (i*n + j) of code is cell (i, j).
  static Bitournament from_code(std::size_t m, std::size_t n, std::uint64_t code) {
    if (m * n > 64) throw std::invalid_argument("orientation code holds at most 64 cells");
    std::vector<bool> cells(m * n);
    for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = ((code >> c) & 1U) != 0;
    return Bitournament(m, n, std::move(cells));
  }

  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  bool x_to_y(std::size_t i, std::size_t j) const { return cells_.at(i * n_ + j); }

  /// m * n, rejecting sizes above max_cells.
  static std::size_t cell_count(std::size_t m, std::size_t n) {
    if (n != 0 && m > max_cells / n) {
      throw std::length_error("bitournament exceeds " + std::to_string(max_cells) + " cells");
    }
    return m * n;
  }

  friend bool operator==(const Bitournament&, const Bitournament&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<bool> cells_;
};

/// (x-scores, y-scores) in index order.
inline std::pair<IntSeq, IntSeq> scores_of(const Bitournament& t) {
  IntSeq xs(t.m(), 0);
  IntSeq ys(t.n(), static_cast<Score>(t.m()));
  for (std::size_t i = 0; i < t.m(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (t.x_to_y(i, j)) {
        ++xs[i];
        --ys[j];
      }
    }
  }
  return {std::move(xs), std::move(ys)};
}

struct RealizationStep {
  std::vector<std::size_t> targets;  // y indices receiving an arc from x_i
  BoundedSeq remaining;              // conjugate of B after this step
};

struct RealizationLog {
  BoundedSeq initial;  // conjugate of B before any step
  std::vector<RealizationStep> steps;
};

struct Realization {
  Bitournament tournament;
  RealizationLog log;
};

class NotRealizable : public std::runtime_error {
 public:
  explicit NotRealizable(CheckReport report)
      : std::runtime_error("pair is not the score sequence of a bitournament"),
        report_(std::move(report)) {}

  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
};

/// Greedy construction: x_i sends arcs to the a_i y-vertices with the largest
/// remaining indegree demand (smallest index among ties); every arc not drawn
/// that way points from y to x.
inline Realization realize(const FeasiblePair& pair) {
  const auto m = pair.m();
  const auto n = pair.n();
  std::vector<bool> cells(Bitournament::cell_count(m, n), false);

  RealizationLog log{conjugate(pair.b()), {}};
  log.steps.reserve(m);
  IntSeq demand = log.initial.elems();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> targets;
    try {
      targets = normal_trim_positions(demand, pair.a()[i]);
    } catch (const NotEnoughPositives&) {
      throw NotRealizable(trim_check(pair.a(), pair.b()));
    }
    for (std::size_t j : targets) {
      cells[i * n + j] = true;
      --demand[j];
    }
    log.steps.push_back(RealizationStep{std::move(targets), BoundedSeq(demand, pair.b().bound())});
  }
  // Feasibility plus a completed greedy pass always leaves zero demand.
  if (!log.steps.empty() && !log.steps.back().remaining.is_zero()) {
    throw std::logic_error("greedy realization left unmet indegree demand");
  }
  return Realization{Bitournament(m, n, std::move(cells)), std::move(log)};
}

/// Validates the pair with default bounds (each side bounded by the other's
/// length) before realizing it.
inline Realization realize(const IntSeq& a, const IntSeq& b) {
  const CheckReport report = trim_check(a, b);
  if (!report.accepted()) throw NotRealizable(report);
  return realize(feasible(BoundedSeq(a, static_cast<Score>(b.size())),
                          BoundedSeq(b, static_cast<Score>(a.size()))));
}

struct VertexLabels {
  std::vector<std::string> x;
  std::vector<std::string> y;
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

inline void dot_vertex(std::ostringstream& os, char side, std::size_t idx,
                       const std::vector<std::string>* labels) {
  os << "  " << side << idx + 1;
  if (labels != nullptr && idx < labels->size()) {
    os << " [label=\"" << dot_escape((*labels)[idx]) << "\"]";
  }
  os << ";\n";
}

}  // namespace detail

/// DOT digraph: vertex declarations x1..xm, y1..yn, then every x->y arc in
/// row-major order, then every y->x arc in row-major order.
inline std::string to_dot(const Bitournament& t, const std::optional<VertexLabels>& labels = {}) {
  std::ostringstream os;
  os << "digraph bitournament {\n";
  for (std::size_t i = 0; i < t.m(); ++i) detail::dot_vertex(os, 'x', i, labels ? &labels->x : nullptr);
  for (std::size_t j = 0; j < t.n(); ++j) detail::dot_vertex(os, 'y', j, labels ? &labels->y : nullptr);
  for (std::size_t i = 0; i < t.m(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (t.x_to_y(i, j)) os << "  x" << i + 1 << " -> y" << j + 1 << ";\n";
    }
  }
  for (std::size_t i = 0; i < t.m(); ++i) {
    for (std::size_t j = 0; j < t.n(); ++j) {
      if (!t.x_to_y(i, j)) os << "  y" << j + 1 << " -> x" << i + 1 << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace bitour
