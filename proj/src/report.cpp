#include "cyclebound/report.hpp"

#include <stdexcept>

namespace cyclebound {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kHeld: return "held";
    case Verdict::kVacuous: return "vacuous";
    case Verdict::kCounterexample: return "counterexample";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Verdict parse_verdict(const std::string& s) {
  if (s == "held") return Verdict::kHeld;
  if (s == "vacuous") return Verdict::kVacuous;
  if (s == "counterexample") return Verdict::kCounterexample;
  if (s == "unknown") return Verdict::kUnknown;
  throw std::invalid_argument("unknown status '" + s + "'");
}

}  // namespace

Json to_json(const StatementReport& r) {
  Json j;
  j["g6"] = r.g6;
  j["stmt"] = r.statement;
  j["hyp"] = optional_json(r.hypothesis);
  j["concl"] = optional_json(r.conclusion);
  j["bound"] = optional_json(r.bound);
  j["c"] = optional_json(r.c);
  j["slack"] = optional_json(r.slack);
  j["tight"] = r.tight;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  j["status"] = std::string(verdict_name(r.status));
  if (!r.note.empty()) j["note"] = r.note;
  if (r.hypothesis_universal) j["hyp_universal"] = *r.hypothesis_universal;
  return j;
}

StatementReport report_from_json(const Json& j) {
  StatementReport r;
  r.g6 = j.at("g6").get<std::string>();
  r.statement = j.at("stmt").get<std::string>();
  r.hypothesis = optional_from<bool>(j, "hyp");
  r.conclusion = optional_from<bool>(j, "concl");
  r.bound = optional_from<long>(j, "bound");
  r.c = optional_from<int>(j, "c");
  r.slack = optional_from<long>(j, "slack");
  r.tight = j.at("tight").get<bool>();
  if (j.contains("witness")) r.witness = j.at("witness");
  r.status = parse_verdict(j.at("status").get<std::string>());
  if (j.contains("note")) r.note = j.at("note").get<std::string>();
  r.hypothesis_universal = optional_from<bool>(j, "hyp_universal");
  return r;
}

}  // namespace cyclebound
