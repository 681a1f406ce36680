#include "cyclebound/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cyclebound/families.hpp"
#include "cyclebound/fragments.hpp"
#include "cyclebound/graph6.hpp"
#include "cyclebound/path_systems.hpp"
#include "cyclebound/schemes.hpp"
#include "cyclebound/search.hpp"
#include "cyclebound/theorems.hpp"

namespace cyclebound {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Graph graph_from_text(const std::string& text, const std::string& source) {
  const std::string body = trim(text);
  if (body.empty()) throw UsageError("no graph in " + source);
  if (body.front() == '{') {
    try {
      return parse_graph6(Json::parse(body).at("g6").get<std::string>());
    } catch (const Json::exception& e) {
      throw UsageError("bad JSON graph in " + source + ": " + e.what());
    }
  }
  std::istringstream lines(body);
  std::string line;
  std::getline(lines, line);
  return parse_graph6(trim(line));
}

Json vertex_list(VertexSet s) { return Json(to_list(s)); }

Json fragment_json(const Fragment& f) {
  return Json{{"X", vertex_list(f.vertices)}, {"S", vertex_list(f.cutset)}, {"complement", vertex_list(f.complement)}};
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad class sizes '" + text + "'");
    }
  }
  return sizes;
}

int verdict_exit(Verdict v) {
  if (v == Verdict::kCounterexample) return 2;
  if (v == Verdict::kUnknown) return 3;
  return 0;
}

void print(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

StructuralLemma parse_lemma(const std::string& name) {
  for (auto which : {StructuralLemma::kL12, StructuralLemma::kL13, StructuralLemma::kL14, StructuralLemma::kL15}) {
    if (name == lemma_name(which)) return which;
  }
  throw UsageError("lemma must be one of L12, L13, L14, L15");
}

}  // namespace

Graph resolve_graph(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::stringstream buffer;
    buffer << in.rdbuf();
    return graph_from_text(buffer.str(), "stdin");
  }
  if (!spec.empty() && spec.front() == '@') {
    std::ifstream file(spec.substr(1));
    if (!file) throw UsageError("cannot read " + spec.substr(1));
    std::stringstream buffer;
    buffer << file.rdbuf();
    return graph_from_text(buffer.str(), spec.substr(1));
  }
  std::string family_error;
  try {
    return build(parse_family(spec));
  } catch (const FamilySpecError& e) {
    family_error = e.what();
  }
  try {
    return parse_graph6(spec);
  } catch (const Graph6Error& e) {
    throw UsageError("'" + spec + "' is neither a constructor (" + family_error + ") nor graph6 (" + e.what() + ")");
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact circumference, connectivity and fragment tools for small graphs", "cyclebound"};
  app.require_subcommand(1);
  std::optional<long> budget_ms;

  std::string spec;
  auto* inv = app.add_subcommand("invariants", "n, delta, kappa, alpha and circumference with a longest cycle");
  inv->add_option("graph", spec, "graph spec")->required();
  inv->add_option("--budget-ms", budget_ms, "time budget");

  std::size_t catalog_limit = kDefaultCatalogLimit;
  auto* frag = app.add_subcommand("fragments", "minimum cut-sets, fragments and endfragments");
  frag->add_option("graph", spec, "graph spec")->required();
  frag->add_option("--limit", catalog_limit, "catalog size limit");

  std::size_t fragment_index = 0;
  auto* paths = app.add_subcommand("paths", "extremal path systems of one fragment and the cycles they close");
  paths->add_option("graph", spec, "graph spec")->required();
  paths->add_option("--fragment", fragment_index, "index into the fragment catalog")->required();
  paths->add_option("--budget-ms", budget_ms, "time budget");

  std::string lemma;
  auto* lem = app.add_subcommand("lemma", "check L12, L13, L14 or L15 on every qualifying fragment");
  lem->add_option("lemma", lemma, "L12|L13|L14|L15")->required();
  lem->add_option("graph", spec, "graph spec")->required();
  lem->add_option("--budget-ms", budget_ms, "time budget");

  auto* scheme = app.add_subcommand("scheme", "scheme bounds and the minimal-host oracle");
  scheme->require_subcommand(1);
  std::string scheme_lemma, sizes_text, host_text;
  int r = 2;
  int cap = kDefaultHostCap;
  auto* sbound = scheme->add_subcommand("bound", "lower bound on the host order");
  sbound->add_option("lemma", scheme_lemma, "A|L1..L8")->required();
  sbound->add_option("sizes", sizes_text, "class sizes, comma separated")->required();
  sbound->add_option("r", r, "gap")->required();
  sbound->add_option("host", host_text, "cycle|path")->required();
  auto* soracle = scheme->add_subcommand("oracle", "smallest host carrying a nontrivial scheme");
  soracle->add_option("sizes", sizes_text, "class sizes, comma separated")->required();
  soracle->add_option("r", r, "gap")->required();
  soracle->add_option("host", host_text, "cycle|path")->required();
  soracle->add_option("--cap", cap, "largest host order tried");

  std::string statement;
  auto* verify = app.add_subcommand("verify", "evaluate one statement on one graph");
  verify->add_option("statement", statement, "statement id")->required();
  verify->add_option("graph", spec, "graph spec")->required();
  verify->add_option("--budget-ms", budget_ms, "time budget");

  std::string config_path, out_path, graph6_file, resume_path, random_text;
  std::optional<int> scan_n;
  bool connected = false, labelled = false, append = false, dump_config = false;
  int workers = 1;
  std::optional<std::uint64_t> limit;
  std::uint64_t seed = 0;
  auto* scan = app.add_subcommand("scan", "check statements over a stream of graphs, JSONL rows");
  scan->add_option("statement", statement, "statement id, comma list, or all");
  scan->add_option("--n", scan_n, "enumerate graphs of this order");
  scan->add_flag("--connected", connected, "connected graphs only");
  scan->add_flag("--labelled", labelled, "every labelled graph instead of one per isomorphism class");
  scan->add_option("--graph6-file", graph6_file, "read graphs from a graph6 file");
  scan->add_option("--random", random_text, "n,p,count random graphs (see --seed)");
  scan->add_option("--seed", seed, "seed for --random");
  scan->add_option("--config", config_path, "JSON scan configuration");
  scan->add_option("--out", out_path, "write rows here instead of stdout");
  scan->add_flag("--append", append, "append to --out");
  scan->add_option("--resume", resume_path, "JSON file holding a cursor or a previous summary");
  scan->add_option("--workers", workers, "worker threads");
  scan->add_option("--limit", limit, "graphs to process");
  scan->add_option("--budget-ms", budget_ms, "per-graph time budget");
  scan->add_flag("--dump-config", dump_config, "print the configuration and exit");

  std::string family;
  auto* construct = app.add_subcommand("construct", "build a graph from a constructor expression");
  construct->add_option("spec", family, "e.g. 5K_2+K_4, H(1,1,5,4), petersen, gnp(10,0.5,1)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    Budget budget = Budget::from_millis(budget_ms);
    if (*inv) {
      const Graph g = resolve_graph(spec, in);
      if (g.order() == 0) throw UsageError("graph has no vertices");
      Json j;
      j["g6"] = write_graph6(g);
      j["n"] = g.order();
      j["m"] = g.size();
      try {
        const InvariantBundle b = compute_invariants(g, budget);
        j["delta"] = b.delta;
        j["kappa"] = b.kappa;
        j["alpha"] = b.alpha;
        j["c"] = b.c;
        j["hamiltonian"] = b.hamiltonian;
        j["witness"] = b.witness.vertices;
      } catch (const BudgetExceeded& e) {
        j["status"] = "unknown";
        j["note"] = e.what();
        print(out, j);
        return 3;
      }
      print(out, j);
      return 0;
    }
    if (*frag) {
      const Graph g = resolve_graph(spec, in);
      const CutsetList cuts = minimum_cutsets(g);
      const FragmentCatalog cat = enumerate_fragments(g, catalog_limit);
      Json j;
      j["g6"] = write_graph6(g);
      j["kappa"] = cat.kappa;
      j["complete"] = cuts.complete;
      Json cj = Json::array();
      for (VertexSet t : cuts.cutsets) cj.push_back(vertex_list(t));
      j["cutsets"] = cj;
      Json fj = Json::array();
      for (std::size_t i = 0; i < cat.fragments.size(); ++i) {
        Json f = fragment_json(cat.fragments[i]);
        f["endfragment"] = static_cast<bool>(cat.endfragment[i]);
        fj.push_back(f);
      }
      j["fragments"] = fj;
      print(out, j);
      return 0;
    }
    if (*paths) {
      const Graph g = resolve_graph(spec, in);
      const FragmentCatalog cat = enumerate_fragments(g);
      if (fragment_index >= cat.fragments.size()) {
        throw UsageError("fragment index " + std::to_string(fragment_index) + " out of range (catalog has " +
                         std::to_string(cat.fragments.size()) + ")");
      }
      const Fragment& f = cat.fragments[fragment_index];
      Json j;
      j["g6"] = write_graph6(g);
      j["fragment"] = fragment_json(f);
      j["endfragment"] = static_cast<bool>(cat.endfragment[fragment_index]);
      try {
        const auto systems = all_max_path_systems(g, f, budget);
        j["max_systems"] = systems.size();
        const auto cc = combined_cycles(g, f, budget);
        const PathSystem& up = cc ? cc->up : systems.front();
        j["Q_up"] = up.paths;
        j["V_up"] = vertex_list(up.vertex_set());
        j["m"] = up.m();
        const UnitedPath united = unite(g, up);
        j["united"] = Json{{"vertices", united.vertices}, {"virtual", united.virtual_joint}};
        if (cc) {
          j["Q_down"] = cc->down.paths;
          j["V_down"] = vertex_list(cc->down.vertex_set);
          j["f"] = cc->down.f;
          j["z"] = cc->down.z ? Json(*cc->down.z) : Json();
          j["Q0"] = cc->down.q0 ? Json(*cc->down.q0) : Json();
          j["C_star"] = cc->c_star.vertices;
          j["C_star_star"] = cc->c_star_star.vertices;
        } else {
          j["Q_down"] = Json();
        }
      } catch (const SearchInfeasible& e) {
        j["status"] = "unknown";
        j["note"] = e.what();
        print(out, j);
        return 3;
      } catch (const BudgetExceeded& e) {
        j["status"] = "unknown";
        j["note"] = e.what();
        print(out, j);
        return 3;
      }
      print(out, j);
      return 0;
    }
    if (*lem) {
      const StructuralLemma which = parse_lemma(lemma);
      const Graph g = resolve_graph(spec, in);
      StatementReport report;
      try {
        report = check_structural_lemma(g, which, budget);
      } catch (const std::runtime_error& e) {
        if (dynamic_cast<const BudgetExceeded*>(&e) == nullptr && dynamic_cast<const SearchInfeasible*>(&e) == nullptr &&
            dynamic_cast<const CatalogLimitExceeded*>(&e) == nullptr) {
          throw;
        }
        report.g6 = write_graph6(g);
        report.statement = lemma_name(which);
        report.status = Verdict::kUnknown;
        report.note = e.what();
      }
      print(out, to_json(report));
      return verdict_exit(report.status);
    }
    if (*sbound) {
      BoundQuery q{parse_scheme_lemma(scheme_lemma), parse_sizes(sizes_text), r, parse_host(host_text)};
      Json j;
      j["lemma"] = std::string(scheme_lemma_name(q.lemma));
      j["sizes"] = q.sizes;
      j["r"] = q.r;
      j["host"] = std::string(host_name(q.host));
      j["bound"] = scheme_bound(q);
      print(out, j);
      return 0;
    }
    if (*soracle) {
      const auto sizes = parse_sizes(sizes_text);
      const HostKind host = parse_host(host_text);
      const auto found = min_host_bruteforce(sizes, r, host, cap);
      Json j;
      j["sizes"] = sizes;
      j["r"] = r;
      j["host"] = std::string(host_name(host));
      j["cap"] = cap;
      if (found) {
        j["min_host"] = found->length;
        j["placement"] = found->classes;
      } else {
        j["min_host"] = Json();
        j["note"] = "no placement within cap";
      }
      print(out, j);
      return 0;
    }
    if (*verify) {
      const StatementId id = parse_statement(statement);
      const Graph g = resolve_graph(spec, in);
      StatementReport report = check_statement(g, id, budget);
      if (report.status == Verdict::kCounterexample) {
        Budget again = Budget::from_millis(budget_ms);
        report = confirm_candidate(g, id, report, again);
      }
      print(out, to_json(report));
      return verdict_exit(report.status);
    }
    if (*scan) {
      ScanConfig cfg;
      if (!config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) throw UsageError("cannot read " + config_path);
        try {
          cfg = scan_config_from_json(Json::parse(file));
        } catch (const Json::exception& e) {
          throw UsageError(std::string("bad config: ") + e.what());
        }
      }
      const int sources = (scan_n ? 1 : 0) + (graph6_file.empty() ? 0 : 1) + (random_text.empty() ? 0 : 1);
      if (sources > 1) throw UsageError("choose one of --n, --graph6-file, --random");
      if (sources == 0 && config_path.empty()) throw UsageError("scan needs --n, --graph6-file, --random or --config");
      if (scan_n) {
        cfg.stream = StreamSpec{};
        cfg.stream.n = *scan_n;
        cfg.stream.connected = connected;
        cfg.stream.dedup = !labelled;
      } else if (!graph6_file.empty()) {
        cfg.stream = StreamSpec{};
        cfg.stream.kind = StreamSpec::Kind::kGraph6File;
        cfg.stream.path = graph6_file;
      } else if (!random_text.empty()) {
        std::stringstream ss(random_text);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ',')) {
          throw UsageError("--random takes n,p,count");
        }
        cfg.stream = StreamSpec{};
        cfg.stream.kind = StreamSpec::Kind::kRandom;
        try {
          cfg.stream.n = std::stoi(a);
          cfg.stream.p = std::stod(b);
          cfg.stream.count = std::stoull(c);
        } catch (const std::exception&) {
          throw UsageError("--random takes n,p,count");
        }
      }
      if (!statement.empty()) cfg.statements = parse_statement_list(statement);
      if (cfg.statements.empty()) throw UsageError("scan needs a statement");
      if (scan->count("--seed") > 0) cfg.seed = seed;
      if (scan->count("--workers") > 0) cfg.workers = workers;
      if (limit) cfg.limit = limit;
      if (budget_ms) cfg.budget_ms = budget_ms;
      if (!out_path.empty()) cfg.output = out_path;
      if (append) cfg.append = true;
      if (!resume_path.empty()) {
        std::ifstream file(resume_path);
        if (!file) throw UsageError("cannot read " + resume_path);
        Json j;
        try {
          j = Json::parse(file);
        } catch (const Json::exception& e) {
          throw UsageError(std::string("bad resume file: ") + e.what());
        }
        cfg.resume = scan_cursor_from_json(j.contains("cursor") ? j["cursor"] : j);
      }
      if (dump_config) {
        print(out, to_json(cfg));
        return 0;
      }
      const ScanOutcome outcome = run_scan(cfg, cfg.output.empty() ? &out : nullptr);
      print(cfg.output.empty() ? err : out, to_json(outcome));
      return exit_code(outcome);
    }
    if (*construct) {
      const FamilySpec fs = parse_family(family);
      const Graph g = build(fs);
      Json j;
      j["spec"] = describe(fs);
      j["n"] = g.order();
      j["m"] = g.size();
      j["g6"] = write_graph6(g);
      print(out, j);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const FamilySpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

}  // namespace cyclebound
