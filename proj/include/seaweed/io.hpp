#pragma once

#include "seaweed/census.hpp"
#include "seaweed/core.hpp"
#include "seaweed/reduction.hpp"

#include <json.hpp>

#include <limits>
#include <string>

namespace seaweed {

using Json = nlohmann::ordered_json;

inline constexpr int json_schema = 1;

// Integers that fit in int64 become JSON numbers, larger ones strings.
template <Integer Int>
Json to_json_number(const Int& x) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      return Json(x.template convert_to<long long>());
    return Json(to_string(x));
  } else {
    return Json(static_cast<long long>(x));
  }
}

template <Integer Int>
Json to_json(const ReductionState<Int>& s) {
  Json blocks = Json::array();
  for (const auto& b : s.blocks) blocks.push_back(to_json_number(b));
  return Json{{"mode", mode_name(s.mode)}, {"n", to_json_number(s.n)},       {"t", to_json_number(s.t)},
              {"blocks", blocks},           {"alpha", to_json_number(s.alpha)}};
}

template <Integer Int>
Json to_json(const TraceStep<Int>& step, std::size_t k) {
  return Json{{"step", k},
              {"rule", rule_name(step.rule)},
              {"i", step.i},
              {"before", to_json(step.before)},
              {"after", to_json(step.after)}};
}

// One JSON object per line, then a summary line.
template <Integer Int>
std::string trace_json_lines(const ReductionTrace<Int>& trace) {
  std::string out;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) out += to_json(trace.steps[k], k + 1).dump() + "\n";
  Json summary{{"terminal", trace.terminal},
               {"state", to_json(trace.final_state)},
               {"value", to_json_number(trace.terminal_value)},
               {"index", to_json_number(trace.index)}};
  out += summary.dump() + "\n";
  return out;
}

inline Json spec_list(const std::vector<Spec64>& specs) {
  Json out = Json::array();
  for (const auto& s : specs) out.push_back(format_spec(s));
  return out;
}

inline Json to_json(const CensusReport& r) {
  Json rows = Json::array();
  Json fa = Json::object(), fd = Json::object(), pairs = Json::array();
  for (const auto& a : r.a_rows) {
    Json row{{"n", a.n}, {"FA_n", a.members.size()}, {"FD_2n", r.d_row(2 * a.n)->members.size()}};
    if (r.odd) row["FD_2n+1"] = r.d_row(2 * a.n + 1)->members.size();
    row["doubling_holds"] = r.d_row(2 * a.n)->members.size() == 2 * a.members.size();
    rows.push_back(row);
    fa[std::to_string(a.n)] = spec_list(a.members);
  }
  for (const auto& d : r.d_rows) fd[std::to_string(d.n)] = spec_list(d.members);
  for (const auto& p : r.pairs)
    pairs.push_back(Json{{"source", format_spec(p.source)},
                         {"full_top", format_spec(p.full_top)},
                         {"full_bottom", format_spec(p.full_bottom)}});
  return Json{{"schema", json_schema},
              {"kind", "census"},
              {"max_n", r.bound},
              {"odd", r.odd},
              {"rows", rows},
              {"F_A", fa},
              {"F_D", fd},
              {"pairing", pairs},
              {"reduction_confirmed", r.reduction_confirmed},
              {"bijection", r.bijection},
              {"issues", r.issues}};
}

}  // namespace seaweed
