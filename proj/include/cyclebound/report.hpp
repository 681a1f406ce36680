#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace cyclebound {

using Json = nlohmann::ordered_json;

enum class Verdict {
  kHeld,            // hypothesis and conclusion both hold
  kVacuous,         // hypothesis fails; conclusion not evaluated
  kCounterexample,  // hypothesis holds, conclusion fails (candidate)
  kUnknown,         // budget exhausted or exact search infeasible
};

std::string_view verdict_name(Verdict v);

// Verdict of one statement on one graph.
struct StatementReport {
  std::string g6;
  std::string statement;
  std::optional<bool> hypothesis;
  std::optional<bool> conclusion;
  std::optional<long> bound;
  std::optional<int> c;
  std::optional<long> slack;
  bool tight = false;
  Json witness;  // null when there is nothing to show
  Verdict status = Verdict::kUnknown;
  std::string note;
  // Fragment statements only: verdict of the "every endfragment" reading.
  std::optional<bool> hypothesis_universal;
};

// {g6, stmt, hyp, concl, bound, c, slack, tight, witness?, status, note?,
// hyp_universal?}
Json to_json(const StatementReport& report);
StatementReport report_from_json(const Json& j);

}  // namespace cyclebound
