#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclebound/budget.hpp"
#include "cyclebound/fragments.hpp"
#include "cyclebound/graph.hpp"
#include "cyclebound/invariants.hpp"
#include "cyclebound/report.hpp"

namespace cyclebound {

enum class StatementId {
  kThmA, kThmB, kThmC, kThmD, kThmE, kThmF, kThmG,
  kThm1, kThm2, kThm3, kThm4, kThm5,
  kLem11, kLemB, kLemC,
  kL12, kL13, kL14, kL15,
};

inline constexpr std::array<StatementId, 19> kAllStatements = {
    StatementId::kThmA,  StatementId::kThmB, StatementId::kThmC, StatementId::kThmD,
    StatementId::kThmE,  StatementId::kThmF, StatementId::kThmG, StatementId::kThm1,
    StatementId::kThm2,  StatementId::kThm3, StatementId::kThm4, StatementId::kThm5,
    StatementId::kLem11, StatementId::kLemB, StatementId::kLemC, StatementId::kL12,
    StatementId::kL13,   StatementId::kL14,  StatementId::kL15};

std::string_view statement_name(StatementId id);
// Accepts the names above; throws std::invalid_argument otherwise.
StatementId parse_statement(std::string_view text);
// Comma-separated names, or "all".
std::vector<StatementId> parse_statement_list(std::string_view text);

// Which solvers a context uses. kSecondary swaps in the subset DP for the
// circumference and the exhaustive engines for alpha and kappa; it is used
// to re-examine counterexample candidates.
enum class SolverSet { kPrimary, kSecondary };

// Invariants of one graph computed on demand and shared between statements.
class GraphContext {
 public:
  GraphContext(const Graph& g, Budget& budget, SolverSet solvers = SolverSet::kPrimary);

  const Graph& graph() const { return g_; }
  Budget& budget() { return budget_; }
  SolverSet solvers() const { return solvers_; }
  const std::string& g6();
  int n() const { return g_.order(); }
  int delta();
  int kappa();
  int alpha();
  int c();
  // Empty in secondary mode.
  const CycleWitness& cycle();
  const FragmentCatalog& catalog();

 private:
  void solve_circumference();

  const Graph& g_;
  Budget& budget_;
  SolverSet solvers_;
  std::optional<std::string> g6_;
  std::optional<int> delta_;
  std::optional<int> kappa_;
  std::optional<int> alpha_;
  std::optional<int> c_;
  CycleWitness cycle_;
  std::unique_ptr<FragmentCatalog> catalog_;
};

// Hypothesis evaluated literally, conclusion only when it holds. Budget
// exhaustion, oversize searches and catalog overflow give status unknown.
StatementReport check_statement(GraphContext& ctx, StatementId id);
StatementReport check_statement(const Graph& g, StatementId id, Budget& budget = Budget::none());

// Re-derives a counterexample candidate with the secondary solvers. Returns
// the confirmed report, or the original downgraded to unknown with a note
// when the solvers disagree.
StatementReport confirm_candidate(const Graph& g, StatementId id, const StatementReport& candidate,
                                  Budget& budget = Budget::none());

struct TightnessResult {
  std::vector<StatementReport> tight;       // hypothesis holds, slack 0, c < n
  std::vector<StatementReport> candidates;  // confirmed counterexamples
  std::vector<StatementReport> unknown;
  long checked = 0;
};

class GraphStream;

// Runs one statement over a stream. budget_ms bounds each graph.
TightnessResult tightness_scan(GraphStream& stream, StatementId id,
                               std::optional<long> budget_ms = std::nullopt);

}  // namespace cyclebound
