#pragma once

// Text input grammar and human-readable rendering.
//
//   list := ws | ws int ws (',' ws int ws)*
//   pair := list '|' list
//
// Integers are unsigned decimal and must fit in 64-bit signed range.

#include <bitour/characterize.hpp>
#include <bitour/seqcore.hpp>

#include <cctype>
#include <charconv>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace bitour {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " at column " + std::to_string(column)), column_(column) {}

  /// 1-based column in the original input text.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

namespace detail {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Column offset lets error positions refer to the full input when parsing a
// slice of it.
inline IntSeq parse_list_at(std::string_view text, std::size_t offset) {
  IntSeq out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return out;
  while (true) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos]) && text[pos] != ',') ++pos;
    const std::string_view token = text.substr(start, pos - start);
    const std::size_t column = offset + start + 1;
    if (token.empty()) throw ParseError("missing integer", column);
    if (token.front() == '-') throw ParseError("negative value '" + std::string(token) + "'", column);
    Score value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError("value '" + std::string(token) + "' exceeds 64-bit range", column);
    }
    if (ec != std::errc{} || end != token.data() + token.size()) {
      throw ParseError("not a nonnegative integer: '" + std::string(token) + "'", column);
    }
    out.push_back(value);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw ParseError("expected ',' but found '" + std::string(1, text[pos]) + "'", offset + pos + 1);
    }
    ++pos;
  }
  return out;
}

}  // namespace detail

inline IntSeq parse_list(std::string_view text) { return detail::parse_list_at(text, 0); }

struct InputPair {
  IntSeq a;
  IntSeq b;
};

inline InputPair parse_pair(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|' separating the two sides", text.size() + 1);
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("more than one '|'", text.find('|', bar + 1) + 1);
  }
  // Parse into locals: some compilers leak the first member if the second
  // initializer throws inside a braced aggregate.
  IntSeq a = detail::parse_list_at(text.substr(0, bar), 0);
  IntSeq b = detail::parse_list_at(text.substr(bar + 1), bar + 1);
  return InputPair{std::move(a), std::move(b)};
}

inline std::string format_seq(const IntSeq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(s[i]);
  }
  return out;
}

inline std::string angle(const IntSeq& s) { return "<" + format_seq(s) + ">"; }

/// One line per sequence, labelled with the schedule applied so far:
///   Bbar = <5,4,3,1,0>
///   Bbar_<1> = <4,4,3,1,0>
/// Positions that reach zero stay in the rendering.
inline std::string render_trace(const TrimTrace& trace, std::string_view symbol) {
  std::ostringstream os;
  os << symbol << " = " << angle(trace.initial.elems()) << '\n';
  IntSeq applied;
  for (const auto& step : trace.steps) {
    applied.push_back(step.amount);
    os << symbol << '_' << angle(applied) << " = " << angle(step.result.elems()) << '\n';
  }
  return os.str();
}

inline std::string render_moon_table(const std::vector<MoonRow>& rows) {
  std::ostringstream os;
  os << "k\tl\tsum\tkl\n";
  for (const auto& r : rows) os << r.k << '\t' << r.l << '\t' << r.sum << '\t' << r.product << '\n';
  return os.str();
}

inline std::string describe(const Witness& w) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, InequalityWitness>) {
          return "(k,l)=(" + std::to_string(v.k) + "," + std::to_string(v.l) + "): sum " +
                 std::to_string(v.lhs) + (v.lhs < v.rhs ? " < " : " != ") + std::to_string(v.rhs);
        } else if constexpr (std::is_same_v<T, TrimStepWitness>) {
          return "step " + std::to_string(v.step) + ": NotEnoughPositives(" +
                 std::to_string(v.requested) + "," + std::to_string(v.available) + ")";
        } else if constexpr (std::is_same_v<T, PrefixWitness>) {
          return "k=" + std::to_string(v.k) + ": prefix sum " + std::to_string(v.sum) +
                 (v.sum < v.required ? " < " : " != ") + std::to_string(v.required);
        } else if constexpr (std::is_same_v<T, SumMismatchWitness>) {
          return "SumMismatch(" + std::to_string(v.actual) + "," + std::to_string(v.expected) + ")";
        } else if constexpr (std::is_same_v<T, BoundMismatchWitness>) {
          return "BoundMismatch(bound of A " + std::to_string(v.a_bound) + " vs n=" +
                 std::to_string(v.n) + ", bound of B " + std::to_string(v.b_bound) + " vs m=" +
                 std::to_string(v.m) + ")";
        } else {
          return std::string("OutOfBound(") + v.side + "[" + std::to_string(v.index + 1) +
                 "]=" + std::to_string(v.value) + " outside [0," + std::to_string(v.bound) + "])";
        }
      },
      w);
}

/// "<criterion>: accept" or "<criterion>: reject <witness>".
inline std::string summary(const CheckReport& r) {
  std::string out = std::string(to_string(r.criterion)) + ": " + std::string(to_string(r.verdict));
  if (r.witness) out += " " + describe(*r.witness);
  return out;
}

}  // namespace bitour
