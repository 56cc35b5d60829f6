#pragma once

// Subcommand bodies for the bitour tool. Each returns the process exit code
// and writes only to the streams it is given.

#include <bitour/characterize.hpp>
#include <bitour/io.hpp>
#include <bitour/oracle.hpp>
#include <bitour/realize.hpp>
#include <bitour/report_json.hpp>
#include <bitour/seqcore.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bitour::cli {

enum ExitCode : int { kSuccess = 0, kReject = 1, kInputError = 2, kInternalError = 3 };

enum class Format { text, json };

enum class CheckCriterion { moon, trim, both };

struct PairOptions {
  std::string input;
  std::optional<Score> bound_a;  // default: length of B
  std::optional<Score> bound_b;  // default: length of A
  Format format = Format::text;
  bool trace = false;
};

namespace detail {

inline BoundedSeq bounded_a(const InputPair& p, const PairOptions& o) {
  return BoundedSeq(p.a, o.bound_a.value_or(static_cast<Score>(p.b.size())));
}

inline BoundedSeq bounded_b(const InputPair& p, const PairOptions& o) {
  return BoundedSeq(p.b, o.bound_b.value_or(static_cast<Score>(p.a.size())));
}

// trim_check on the user's bounds; out-of-range elements become a validation
// rejection instead of an exception.
inline CheckReport run_trim_check(const InputPair& p, const PairOptions& o) {
  if (!o.bound_a && !o.bound_b) return trim_check(p.a, p.b);
  try {
    return trim_check(bounded_a(p, o), bounded_b(p, o));
  } catch (const InvalidSequence&) {
    const Score ba = o.bound_a.value_or(static_cast<Score>(p.b.size()));
    const Score bb = o.bound_b.value_or(static_cast<Score>(p.a.size()));
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      if (p.a[i] > ba) return CheckReport{Verdict::reject, Criterion::trimming, OutOfBoundWitness{'a', i, p.a[i], ba}, {}};
    }
    for (std::size_t j = 0; j < p.b.size(); ++j) {
      if (p.b[j] > bb) return CheckReport{Verdict::reject, Criterion::trimming, OutOfBoundWitness{'b', j, p.b[j], bb}, {}};
    }
    throw;
  }
}

inline bool validation_failed(const CheckReport& r) {
  return r.witness && is_validation_failure(*r.witness);
}

}  // namespace detail

inline int cmd_check(const PairOptions& opts, CheckCriterion criterion, std::ostream& out,
                     std::ostream& err) {
  InputPair input;
  try {
    input = parse_pair(opts.input);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  std::vector<CheckReport> reports;
  if (criterion != CheckCriterion::trim) reports.push_back(moon_check(input.a, input.b));
  if (criterion != CheckCriterion::moon) {
    try {
      reports.push_back(detail::run_trim_check(input, opts));
    } catch (const InvalidSequence& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }

  const bool moon_table_wanted = opts.trace && criterion != CheckCriterion::trim &&
                                 !detail::validation_failed(reports.front());
  if (opts.format == Format::json) {
    nlohmann::json j{{"a", input.a}, {"b", input.b}, {"reports", nlohmann::json::array()}};
    for (const auto& r : reports) {
      auto rj = to_json(r);
      if (!opts.trace) rj.erase("trace");
      j["reports"].push_back(rj);
    }
    if (moon_table_wanted) j["moon_table"] = to_json(moon_table(input.a, input.b));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << summary(r) << '\n';
      if (!opts.trace) continue;
      if (r.criterion == Criterion::moon && moon_table_wanted) {
        out << render_moon_table(moon_table(input.a, input.b));
      } else if (r.criterion == Criterion::trimming && r.trace) {
        out << render_trace(*r.trace, "Bbar");
      }
    }
  }

  if (std::ranges::any_of(reports, detail::validation_failed)) return kInputError;
  if (reports.size() == 2 && reports[0].accepted() != reports[1].accepted()) {
    err << "internal error: moon and trimming criteria disagree\n";
    return kInternalError;
  }
  return reports.front().accepted() ? kSuccess : kReject;
}

inline int cmd_realize(const PairOptions& opts, const std::optional<std::string>& dot_path,
                       std::ostream& out, std::ostream& err) {
  InputPair input;
  std::optional<Realization> result;
  try {
    input = parse_pair(opts.input);
    const CheckReport report = detail::run_trim_check(input, opts);
    if (detail::validation_failed(report)) {
      err << "error: " << summary(report) << '\n';
      return kInputError;
    }
    if (!report.accepted()) {
      out << summary(report) << '\n';
      return kReject;
    }
    result = realize(feasible(detail::bounded_a(input, opts), detail::bounded_b(input, opts)));
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const Bitournament& t = result->tournament;
  if (dot_path) {
    std::ofstream dot(*dot_path);
    if (!dot) {
      err << "error: cannot write " << *dot_path << '\n';
      return kInputError;
    }
    dot << to_dot(t);
  }

  if (opts.format == Format::json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < t.m(); ++i) {
      std::vector<int> row;
      for (std::size_t j = 0; j < t.n(); ++j) row.push_back(t.x_to_y(i, j) ? 1 : 0);
      rows.push_back(row);
    }
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : result->log.steps) {
      steps.push_back({{"targets", st.targets}, {"remaining", st.remaining.elems()}});
    }
    out << nlohmann::json{{"m", t.m()}, {"n", t.n()}, {"matrix", rows}, {"steps", steps}}.dump(2)
        << '\n';
    return kSuccess;
  }

  for (std::size_t i = 0; i < t.m(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < t.n(); ++j) row.push_back(t.x_to_y(i, j) ? '1' : '0');
    out << row << '\n';
  }
  if (opts.trace) {
    out << "Bbar = " << angle(result->log.initial.elems()) << '\n';
    for (std::size_t i = 0; i < result->log.steps.size(); ++i) {
      const auto& st = result->log.steps[i];
      out << 'x' << i + 1 << " ->";
      for (std::size_t j : st.targets) out << " y" << j + 1;
      out << "  remaining " << angle(st.remaining.elems()) << '\n';
    }
  }
  return kSuccess;
}

inline int cmd_trim(const std::string& sequence, const std::string& schedule,
                    std::optional<Score> bound, bool trace, std::ostream& out, std::ostream& err) {
  IntSeq elems;
  IntSeq amounts;
  try {
    elems = parse_list(sequence);
    amounts = parse_list(schedule);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const Score max_elem = elems.empty() ? 0 : *std::ranges::max_element(elems);
  std::optional<BoundedSeq> seq;
  try {
    seq.emplace(elems, bound.value_or(max_elem));
  } catch (const InvalidSequence& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const TrimOutcome outcome = trim_by_sequence(*seq, amounts);
  if (trace) out << render_trace(outcome.trace, "A");
  if (!outcome.ok()) {
    const auto& f = *outcome.failure;
    out << "step " << f.step << ": NotEnoughPositives(" << f.requested << "," << f.available
        << ")\n";
    return kReject;
  }
  out << format_seq(outcome.result().elems()) << '\n';
  return kSuccess;
}

inline int cmd_conjugate(const std::string& sequence, Score bound, std::ostream& out,
                         std::ostream& err) {
  try {
    out << format_seq(conjugate(BoundedSeq(parse_list(sequence), bound)).elems()) << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kSuccess;
}

inline int cmd_census(std::size_t m, std::size_t n, unsigned workers, std::ostream& out,
                      std::ostream& err) {
  try {
    out << census_csv(enumerate_bitournaments(m, n, workers));
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kSuccess;
}

inline int cmd_verify(std::size_t m, std::size_t n, unsigned workers, std::ostream& out,
                      std::ostream& err) {
  std::optional<CrossValidation> cv;
  try {
    cv = cross_validate(m, n, workers);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  out << "m=" << m << " n=" << n << " candidates=" << cv->candidates
      << " realizable=" << cv->realizable.size() << " moon=" << cv->moon_accepted.size()
      << " trimming=" << cv->trim_accepted.size() << '\n';
  for (const auto& d : cv->discrepancies) {
    out << "discrepancy " << angle(d.pair.first) << ' ' << angle(d.pair.second)
        << " realizable=" << d.realizable << " moon=" << d.moon << " trimming=" << d.trimming
        << " in_universe=" << d.in_universe << '\n';
  }
  out << (cv->ok() ? "OK" : "FAILED") << '\n';
  return cv->ok() ? kSuccess : kInternalError;
}

/// landau / avery single-sequence checks.
inline int cmd_sequence_check(const std::string& sequence, Criterion criterion, Format format,
                              std::ostream& out, std::ostream& err) {
  IntSeq s;
  try {
    s = parse_list(sequence);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  const CheckReport r = criterion == Criterion::avery ? avery_check(s) : landau_check(s);
  if (format == Format::json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << summary(r) << '\n';
  }
  return r.accepted() ? kSuccess : kReject;
}

}  // namespace bitour::cli
