#pragma once

// JSON form of check reports. Field names:
//   criterion, verdict, witness {kind, ...}, trace {initial, steps [{amount, result}]}

#include <bitour/characterize.hpp>
#include <bitour/seqcore.hpp>

#include <json.hpp>

#include <type_traits>
#include <variant>
#include <vector>

namespace bitour {

inline nlohmann::json to_json(const TrimTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : trace.steps) {
    steps.push_back({{"amount", st.amount}, {"result", st.result.elems()}});
  }
  return {{"initial", trace.initial.elems()}, {"bound", trace.initial.bound()}, {"steps", steps}};
}

inline nlohmann::json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, InequalityWitness>) {
          return {{"kind", "inequality"}, {"k", v.k}, {"l", v.l}, {"sum", v.lhs}, {"product", v.rhs}};
        } else if constexpr (std::is_same_v<T, TrimStepWitness>) {
          return {{"kind", "trim_step"},
                  {"step", v.step},
                  {"requested", v.requested},
                  {"available", v.available}};
        } else if constexpr (std::is_same_v<T, PrefixWitness>) {
          return {{"kind", "prefix"}, {"k", v.k}, {"sum", v.sum}, {"required", v.required}};
        } else if constexpr (std::is_same_v<T, SumMismatchWitness>) {
          return {{"kind", "sum_mismatch"}, {"actual", v.actual}, {"expected", v.expected}};
        } else if constexpr (std::is_same_v<T, BoundMismatchWitness>) {
          return {{"kind", "bound_mismatch"},
                  {"a_bound", v.a_bound},
                  {"b_bound", v.b_bound},
                  {"m", v.m},
                  {"n", v.n}};
        } else {
          return {{"kind", "out_of_bound"},
                  {"side", std::string(1, v.side)},
                  {"index", v.index},
                  {"value", v.value},
                  {"bound", v.bound}};
        }
      },
      w);
}

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j{{"criterion", to_string(r.criterion)},
                   {"verdict", to_string(r.verdict)},
                   {"witness", nullptr}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.trace) j["trace"] = to_json(*r.trace);
  return j;
}

inline nlohmann::json to_json(const std::vector<MoonRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) out.push_back({{"k", r.k}, {"l", r.l}, {"sum", r.sum}, {"product", r.product}});
  return out;
}

}  // namespace bitour
