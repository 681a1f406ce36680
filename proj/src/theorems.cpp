#include "cyclebound/theorems.hpp"

#include <algorithm>

#include "cyclebound/enumerate.hpp"
#include "cyclebound/graph6.hpp"
#include "cyclebound/path_systems.hpp"

namespace cyclebound {

namespace {

constexpr const char* kNames[] = {"ThmA", "ThmB", "ThmC", "ThmD", "ThmE", "ThmF", "ThmG",
                                  "Thm1", "Thm2", "Thm3", "Thm4", "Thm5", "Lem11", "LemB",
                                  "LemC", "L12",  "L13",  "L14",  "L15"};

Json set_json(VertexSet s) { return Json(to_list(s)); }

}  // namespace

std::string_view statement_name(StatementId id) { return kNames[static_cast<int>(id)]; }

StatementId parse_statement(std::string_view text) {
  for (StatementId id : kAllStatements) {
    if (text == statement_name(id)) return id;
  }
  throw std::invalid_argument("unknown statement '" + std::string(text) + "'");
}

std::vector<StatementId> parse_statement_list(std::string_view text) {
  if (text == "all") return {kAllStatements.begin(), kAllStatements.end()};
  std::vector<StatementId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(parse_statement(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

GraphContext::GraphContext(const Graph& g, Budget& budget, SolverSet solvers)
    : g_(g), budget_(budget), solvers_(solvers) {
  if (g.order() == 0) throw std::invalid_argument("statements need at least one vertex");
}

const std::string& GraphContext::g6() {
  if (!g6_) g6_ = write_graph6(g_);
  return *g6_;
}

int GraphContext::delta() {
  if (!delta_) delta_ = min_degree(g_);
  return *delta_;
}

int GraphContext::kappa() {
  if (!kappa_) {
    kappa_ = solvers_ == SolverSet::kPrimary ? connectivity(g_, budget_) : connectivity_exhaustive(g_, budget_);
  }
  return *kappa_;
}

int GraphContext::alpha() {
  if (!alpha_) {
    alpha_ = solvers_ == SolverSet::kPrimary ? independence_number(g_, budget_)
                                             : independence_number_exhaustive(g_, budget_);
  }
  return *alpha_;
}

void GraphContext::solve_circumference() {
  if (c_) return;
  if (solvers_ == SolverSet::kSecondary && g_.order() <= 20) {
    c_ = circumference_dp(g_, budget_);
    return;
  }
  auto result = circumference(g_, budget_);
  cycle_ = std::move(result.witness);
  c_ = result.length;
}

int GraphContext::c() {
  solve_circumference();
  return *c_;
}

const CycleWitness& GraphContext::cycle() {
  solve_circumference();
  return cycle_;
}

const FragmentCatalog& GraphContext::catalog() {
  if (!catalog_) catalog_ = std::make_unique<FragmentCatalog>(enumerate_fragments(g_, kDefaultCatalogLimit, budget_));
  return *catalog_;
}

namespace {

void vacuous(StatementReport& r, std::string note = "hypothesis not met") {
  r.hypothesis = false;
  r.status = Verdict::kVacuous;
  r.note = std::move(note);
}

Json cycle_json(GraphContext& ctx) {
  if (ctx.cycle().vertices.empty()) return Json();
  return Json{{"cycle", ctx.cycle().vertices}};
}

// Conclusion c >= bound.
void length_conclusion(GraphContext& ctx, StatementReport& r, long bound) {
  r.hypothesis = true;
  r.bound = bound;
  r.c = ctx.c();
  r.slack = *r.c - bound;
  r.conclusion = *r.slack >= 0;
  r.tight = *r.slack == 0 && *r.c < ctx.n();
  r.status = *r.conclusion ? Verdict::kHeld : Verdict::kCounterexample;
  r.witness = cycle_json(ctx);
}

// Conclusion c = n, counting one vertex and one edge as cycles.
void hamilton_conclusion(GraphContext& ctx, StatementReport& r) {
  length_conclusion(ctx, r, ctx.n());
  r.tight = false;
}

long four_delta_bound(GraphContext& ctx) { return std::min<long>(ctx.n(), 4L * ctx.delta() - 2L * ctx.kappa()); }

// Endfragment size conditions of the fragment theorems, as (A_up, A_down)
// predicates.
bool fragment_sizes(StatementId id, int up, int down, int d, int k) {
  switch (id) {
    case StatementId::kThm2: return up <= 3 * d - k - 4 && down <= 3 * d - 3 * k;
    case StatementId::kThm3: return up <= 3 * d - k - 4 && down >= 3 * d - 3 * k + 1 && up >= down;
    case StatementId::kThm4: return up >= 3 * d - k - 3 && down <= 3 * d - 3 * k;
    case StatementId::kThm5: return up >= 3 * d - k - 3 && down >= 3 * d - 3 * k + 1;
    default: return false;
  }
}

void fragment_theorem(GraphContext& ctx, StatementReport& r, StatementId id) {
  const int min_kappa = id == StatementId::kThm2 ? 3 : 4;
  if (ctx.kappa() < min_kappa || ctx.delta() < ctx.alpha()) return vacuous(r);
  const int d = ctx.delta();
  const int k = ctx.kappa();
  if (id == StatementId::kThm3 && std::max(1, 3 * d - 3 * k + 1) > 3 * d - k - 4) {
    r.hypothesis_universal = false;
    return vacuous(r, "size conditions jointly unsatisfiable for this delta and kappa");
  }
  const FragmentCatalog& cat = ctx.catalog();
  std::optional<Fragment> chosen;
  bool any = false;
  bool all = true;
  for (std::size_t i = 0; i < cat.fragments.size(); ++i) {
    if (!cat.endfragment[i]) continue;
    any = true;
    const Fragment& down = cat.fragments[i];
    const bool ok = fragment_sizes(id, count(down.complement), count(down.vertices), d, k);
    if (!chosen && ok) chosen = down;
    all = all && ok;
  }
  const bool every = any && all;
  r.hypothesis_universal = every;
  if (!chosen) return vacuous(r, "no endfragment meets the size conditions");
  length_conclusion(ctx, r, four_delta_bound(ctx));
  Json w = Json::object();
  w["A_down"] = set_json(chosen->vertices);
  w["S"] = set_json(chosen->cutset);
  w["A_up"] = set_json(chosen->complement);
  if (!ctx.cycle().vertices.empty()) w["cycle"] = ctx.cycle().vertices;
  r.witness = w;
}

void lemma_b(GraphContext& ctx, StatementReport& r) {
  const int d = ctx.delta();
  const int k = ctx.kappa();
  if (!(2 * d > 3 * k - 2)) return vacuous(r);
  r.hypothesis = true;
  const Graph& g = ctx.graph();
  const FragmentCatalog& cat = ctx.catalog();
  int checked = 0;
  for (std::size_t i = 0; i < cat.fragments.size(); ++i) {
    if (!cat.endfragment[i]) continue;
    ++checked;
    const Fragment& frag = cat.fragments[i];
    for (int v : to_list(frag.vertices)) {
      const Graph rest = g.induced(g.vertices() & ~bit(v));
      const int kv = ctx.solvers() == SolverSet::kPrimary ? connectivity(rest, ctx.budget())
                                                           : connectivity_exhaustive(rest, ctx.budget());
      if (kv == k - 1) {
        r.conclusion = false;
        r.status = Verdict::kCounterexample;
        r.witness = Json{{"A_down", to_list(frag.vertices)}, {"S", to_list(frag.cutset)}, {"v", v}};
        return;
      }
    }
  }
  r.conclusion = true;
  r.status = Verdict::kHeld;
  r.witness = Json{{"endfragments_checked", checked}};
}

void lemma_c(GraphContext& ctx, StatementReport& r) {
  const Graph& g = ctx.graph();
  const int n = ctx.n();
  if (n < 3 || ctx.c() != n) return vacuous(r, "not hamiltonian");
  // Largest r with at least r vertices of degree >= r.
  std::vector<int> degrees;
  for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  int rr = 0;
  while (rr < n && degrees[static_cast<std::size_t>(rr)] >= rr + 1) ++rr;
  r.hypothesis = true;
  r.bound = rr;
  int worst = n;
  Json pair;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int len = longest_path_between(g, u, v, ctx.budget()).value_or(-1);
      if (len < worst) {
        worst = len;
        pair = Json::array({u, v});
      }
    }
  }
  r.slack = static_cast<long>(worst) - rr;
  r.conclusion = worst >= rr;
  r.status = *r.conclusion ? Verdict::kHeld : Verdict::kCounterexample;
  r.witness = Json{{"r", rr}, {"min_longest_path", worst}, {"pair", pair}};
}

void structural(GraphContext& ctx, StatementReport& r, StructuralLemma which) {
  LemmaInputs in;
  in.delta = ctx.delta();
  in.kappa = ctx.kappa();
  in.alpha = ctx.alpha();
  if (structural_hypothesis(which, in.delta, in.kappa, in.alpha)) in.catalog = &ctx.catalog();
  r = check_structural_lemma(ctx.graph(), which, in, ctx.budget());
}

void evaluate(GraphContext& ctx, StatementReport& r, StatementId id) {
  const int n = ctx.n();
  switch (id) {
    case StatementId::kThmA:
      if (2 * ctx.delta() < n) return vacuous(r);
      return hamilton_conclusion(ctx, r);
    case StatementId::kThmB:
      if (ctx.kappa() < 2 || 3 * ctx.delta() < n + ctx.kappa()) return vacuous(r);
      return hamilton_conclusion(ctx, r);
    case StatementId::kThmC:
      if (ctx.kappa() < 2 || 3 * ctx.delta() < n + 2 || ctx.delta() < ctx.alpha()) return vacuous(r);
      return hamilton_conclusion(ctx, r);
    case StatementId::kThmD:
      if (ctx.kappa() < 3 || 4 * ctx.delta() < n + 2 * ctx.kappa() || ctx.delta() < ctx.alpha()) return vacuous(r);
      return hamilton_conclusion(ctx, r);
    case StatementId::kThmE:
      if (ctx.kappa() < 2) return vacuous(r);
      return length_conclusion(ctx, r, std::min(n, 2 * ctx.delta()));
    case StatementId::kThmF:
      if (ctx.kappa() < 3) return vacuous(r);
      return length_conclusion(ctx, r, std::min(n, 3 * ctx.delta() - ctx.kappa()));
    case StatementId::kThmG:
      if (ctx.kappa() < 3 || ctx.delta() < ctx.alpha()) return vacuous(r);
      return length_conclusion(ctx, r, std::min(n, 3 * ctx.delta() - 3));
    case StatementId::kThm1:
      if (ctx.kappa() < 4 || ctx.delta() < ctx.alpha()) return vacuous(r);
      return length_conclusion(ctx, r, four_delta_bound(ctx));
    case StatementId::kThm2:
    case StatementId::kThm3:
    case StatementId::kThm4:
    case StatementId::kThm5: return fragment_theorem(ctx, r, id);
    case StatementId::kLem11:
      if (ctx.kappa() < 3 || ctx.alpha() > ctx.delta() || 2 * ctx.delta() > 3 * ctx.kappa() - 2) return vacuous(r);
      return length_conclusion(ctx, r, four_delta_bound(ctx));
    case StatementId::kLemB: return lemma_b(ctx, r);
    case StatementId::kLemC: return lemma_c(ctx, r);
    case StatementId::kL12: return structural(ctx, r, StructuralLemma::kL12);
    case StatementId::kL13: return structural(ctx, r, StructuralLemma::kL13);
    case StatementId::kL14: return structural(ctx, r, StructuralLemma::kL14);
    case StatementId::kL15: return structural(ctx, r, StructuralLemma::kL15);
  }
}

}  // namespace

StatementReport check_statement(GraphContext& ctx, StatementId id) {
  StatementReport r;
  try {
    ctx.budget().tick();
    evaluate(ctx, r, id);
  } catch (const BudgetExceeded& e) {
    r = StatementReport{};
    r.status = Verdict::kUnknown;
    r.note = e.what();
  } catch (const SearchInfeasible& e) {
    r = StatementReport{};
    r.status = Verdict::kUnknown;
    r.note = e.what();
  } catch (const CatalogLimitExceeded& e) {
    r = StatementReport{};
    r.status = Verdict::kUnknown;
    r.note = e.what();
  }
  r.g6 = ctx.g6();
  r.statement = statement_name(id);
  return r;
}

StatementReport check_statement(const Graph& g, StatementId id, Budget& budget) {
  GraphContext ctx(g, budget);
  return check_statement(ctx, id);
}

StatementReport confirm_candidate(const Graph& g, StatementId id, const StatementReport& candidate,
                                  Budget& budget) {
  GraphContext second(g, budget, SolverSet::kSecondary);
  StatementReport again = check_statement(second, id);
  if (again.status == Verdict::kCounterexample) {
    again.witness = candidate.witness;
    return again;
  }
  StatementReport out = candidate;
  out.status = Verdict::kUnknown;
  out.note = std::string("secondary solvers disagree (") + std::string(verdict_name(again.status)) + ")";
  return out;
}

TightnessResult tightness_scan(GraphStream& stream, StatementId id, std::optional<long> budget_ms) {
  TightnessResult out;
  while (auto g = stream.next()) {
    Budget budget = Budget::from_millis(budget_ms);
    StatementReport r = check_statement(*g, id, budget);
    ++out.checked;
    if (r.status == Verdict::kCounterexample) {
      Budget again = Budget::from_millis(budget_ms);
      r = confirm_candidate(*g, id, r, again);
    }
    if (r.status == Verdict::kCounterexample) {
      out.candidates.push_back(std::move(r));
    } else if (r.status == Verdict::kUnknown) {
      out.unknown.push_back(std::move(r));
    } else if (r.tight) {
      out.tight.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace cyclebound
