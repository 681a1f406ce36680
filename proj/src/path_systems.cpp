#include "cyclebound/path_systems.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cyclebound/graph6.hpp"

namespace cyclebound {

VertexSet PathSystem::vertex_set() const {
  VertexSet s = 0;
  for (const auto& p : paths) s |= from_list(p);
  return s;
}

int PathSystem::total() const {
  int t = 0;
  for (const auto& p : paths) t += static_cast<int>(p.size());
  return t;
}

UnitedPath unite(const Graph& g, const PathSystem& ps) {
  UnitedPath out;
  for (const auto& p : ps.paths) {
    if (!out.vertices.empty()) out.virtual_joint.push_back(!g.adjacent(out.vertices.back(), p.front()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i > 0) out.virtual_joint.push_back(false);
      out.vertices.push_back(p[i]);
    }
  }
  return out;
}

namespace {

void require_small(VertexSet side, const char* what) {
  if (count(side) > kMaxPathSystemVertices) {
    throw SearchInfeasible(std::string("exact search infeasible: ") + what + " has " +
                           std::to_string(count(side)) + " vertices (limit " +
                           std::to_string(kMaxPathSystemVertices) + ")");
  }
}

bool system_less(const PathSystem& a, const PathSystem& b) {
  if (a.m() != b.m()) return a.m() < b.m();
  const auto va = to_list(a.vertex_set());
  const auto vb = to_list(b.vertex_set());
  if (va != vb) return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
  return a.paths < b.paths;
}

// Enumerates every maximum-total path system. Paths are generated from their
// smaller terminal and in increasing order of that terminal, so each system
// appears exactly once.
class UpperSearch {
 public:
  UpperSearch(const Graph& g, VertexSet domain, VertexSet terminals, Budget& budget)
      : g_(g), domain_(domain), terminals_(terminals), budget_(budget) {}

  std::vector<PathSystem> run() {
    next_path(-1, 0, 0);
    return std::move(optimal_);
  }

 private:
  void record(int total) {
    if (total > best_) {
      best_ = total;
      optimal_.clear();
    }
    if (total == best_) {
      if (optimal_.size() >= kMaxOptimalSystems) {
        throw SearchInfeasible("exact search infeasible: too many maximum path systems");
      }
      optimal_.push_back(current_);
    }
  }

  void next_path(int min_start, VertexSet used, int total) {
    budget_.tick();
    record(total);
    const VertexSet free = domain_ & ~used;
    if (total + count(free) < best_ || count(free) < 2) return;
    for_each_vertex(terminals_ & free & ~low_mask(min_start + 1), [&](int u) {
      current_.paths.emplace_back(1, u);
      grow(u, u, used | bit(u), total);
      current_.paths.pop_back();
    });
  }

  void grow(int start, int x, VertexSet used, int total) {
    budget_.tick();
    const int len = static_cast<int>(current_.paths.back().size());
    if (total + len + count(domain_ & ~used) < best_) return;
    if (len >= 2 && contains(terminals_, x) && x > start) next_path(start, used, total + len);
    for_each_vertex(g_.neighbors(x) & domain_ & ~used, [&](int y) {
      current_.paths.back().push_back(y);
      grow(start, y, used | bit(y), total);
      current_.paths.back().pop_back();
    });
  }

  const Graph& g_;
  VertexSet domain_;
  VertexSet terminals_;
  Budget& budget_;
  int best_ = -1;
  PathSystem current_;
  std::vector<PathSystem> optimal_;
};

// Routes the closing paths of one cyclic arrangement, maximising the number
// of interior vertices.
class ClosingSearch {
 public:
  ClosingSearch(const Graph& g, VertexSet avail, std::vector<std::pair<int, int>> links,
                int min_interior, Budget& budget)
      : g_(g), avail_(avail), links_(std::move(links)), min_interior_(min_interior), budget_(budget) {}

  // Returns the best interior count found, or -1.
  int run(int to_beat) {
    best_ = to_beat;
    current_.assign(links_.size(), {});
    route(0, 0, 0);
    return found_ ? best_ : -1;
  }

  const std::vector<std::vector<int>>& best_paths() const { return best_paths_; }

 private:
  void route(std::size_t link, VertexSet used, int interior) {
    budget_.tick();
    if (link == links_.size()) {
      if (interior >= min_interior_ && interior > best_) {
        best_ = interior;
        best_paths_ = current_;
        found_ = true;
      }
      return;
    }
    if (interior + count(avail_ & ~used) <= best_) return;
    const auto [from, to] = links_[link];
    current_[link].assign(1, from);
    walk(link, from, to, used, interior);
  }

  void walk(std::size_t link, int x, int to, VertexSet used, int interior) {
    budget_.tick();
    auto& path = current_[link];
    if (g_.adjacent(x, to)) {
      path.push_back(to);
      route(link + 1, used, interior);
      path.pop_back();
    }
    if (interior + count(avail_ & ~used) <= best_) return;
    for_each_vertex(g_.neighbors(x) & avail_ & ~used, [&](int y) {
      path.push_back(y);
      walk(link, y, to, used | bit(y), interior + 1);
      path.pop_back();
    });
  }

  const Graph& g_;
  VertexSet avail_;
  std::vector<std::pair<int, int>> links_;
  int min_interior_;
  Budget& budget_;
  int best_ = -1;
  bool found_ = false;
  std::vector<std::vector<int>> current_;
  std::vector<std::vector<int>> best_paths_;
};

bool edgeless(const Graph& g, VertexSet s) {
  bool none = true;
  for_each_vertex(s, [&](int v) {
    if ((g.neighbors(v) & s) != 0) none = false;
  });
  return none;
}

Json set_json(VertexSet s) { return Json(to_list(s)); }

}  // namespace

std::vector<PathSystem> all_max_path_systems(const Graph& g, const Fragment& frag, Budget& budget) {
  const VertexSet domain = frag.vertices | frag.cutset;
  require_small(domain, "<A u S>");
  auto systems = UpperSearch(g, domain, frag.cutset, budget).run();
  std::sort(systems.begin(), systems.end(), system_less);
  return systems;
}

PathSystem max_path_system(const Graph& g, const Fragment& frag, Budget& budget) {
  return all_max_path_systems(g, frag, budget).front();
}

std::optional<ComplementSystem> complement_system(const Graph& g, const Fragment& frag,
                                                  const PathSystem& ps, Budget& budget) {
  const int m = ps.m();
  if (m == 0) return std::nullopt;
  const VertexSet up = ps.vertex_set();
  const VertexSet avail = (frag.complement | frag.cutset) & ~up;
  require_small(frag.complement | frag.cutset, "<A^ u S>");
  const int min_interior = std::max(0, 3 - count(up));

  std::vector<int> rest(static_cast<std::size_t>(m - 1));
  std::iota(rest.begin(), rest.end(), 1);
  int best = -1;
  std::optional<ComplementSystem> out;
  do {
    for (std::uint32_t flips = 0; flips < (1U << (m - 1)); ++flips) {
      std::vector<int> order{0};
      std::vector<bool> reversed{false};
      for (int i = 0; i < m - 1; ++i) {
        order.push_back(rest[static_cast<std::size_t>(i)]);
        reversed.push_back(((flips >> i) & 1U) != 0);
      }
      auto entry = [&](int i) {
        const auto& p = ps.paths[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        return reversed[static_cast<std::size_t>(i)] ? p.back() : p.front();
      };
      auto exit = [&](int i) {
        const auto& p = ps.paths[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        return reversed[static_cast<std::size_t>(i)] ? p.front() : p.back();
      };
      std::vector<std::pair<int, int>> links;
      for (int i = 0; i < m; ++i) links.emplace_back(exit(i), entry((i + 1) % m));
      ClosingSearch search(g, avail, links, min_interior, budget);
      const int interior = search.run(best);
      if (interior > best) {
        best = interior;
        ComplementSystem cs;
        cs.order = order;
        cs.reversed = reversed;
        cs.paths = search.best_paths();
        out = std::move(cs);
      }
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  if (!out) return std::nullopt;

  for (const auto& p : out->paths) out->vertex_set |= from_list(p);
  out->f = count(out->vertex_set & frag.cutset);
  const VertexSet spare = frag.cutset & ~up;
  if (out->f == 2 && spare != 0) {
    const int z = lowest(spare);
    const auto& first = ps.paths.front();
    out->z = z;
    const VertexSet within = frag.complement | bit(first.front()) | bit(first.back()) | bit(z);
    out->q0 = longest_path(g, first.front(), first.back(), within, bit(z), budget);
  }
  return out;
}

CycleWitness assemble_cycle(const PathSystem& ps, const ComplementSystem& down) {
  CycleWitness w;
  for (std::size_t i = 0; i < down.order.size(); ++i) {
    auto p = ps.paths[static_cast<std::size_t>(down.order[i])];
    if (down.reversed[i]) std::reverse(p.begin(), p.end());
    w.vertices.insert(w.vertices.end(), p.begin(), p.end());
    const auto& link = down.paths[i];
    if (link.size() > 2) w.vertices.insert(w.vertices.end(), link.begin() + 1, link.end() - 1);
  }
  return w;
}

std::optional<CombinedCycles> combined_cycles(const Graph& g, const Fragment& frag, Budget& budget) {
  const auto systems = all_max_path_systems(g, frag, budget);
  // The closing paths depend only on the covered set and the terminal pairs.
  std::set<std::pair<VertexSet, std::vector<std::pair<int, int>>>> tried;
  std::optional<CombinedCycles> best;
  for (const auto& ps : systems) {
    std::vector<std::pair<int, int>> ends;
    for (const auto& p : ps.paths) ends.emplace_back(p.front(), p.back());
    if (!tried.emplace(ps.vertex_set(), ends).second) continue;
    auto down = complement_system(g, frag, ps, budget);
    if (!down) continue;
    CycleWitness c_star = assemble_cycle(ps, *down);
    if (!best || c_star.length() > best->c_star.length()) {
      best = CombinedCycles{ps, std::move(*down), std::move(c_star), {}};
    }
  }
  if (!best) return std::nullopt;
  auto around = longest_cycle_containing(g, best->c_star.vertex_set(), g.vertices(), budget);
  best->c_star_star = around ? std::move(*around) : best->c_star;
  return best;
}

std::vector<std::vector<Edge>> independent_edge_sets(const Graph& g, VertexSet s) {
  std::vector<Edge> inside;
  for (auto [u, v] : g.edges()) {
    if (contains(s, u) && contains(s, v)) inside.emplace_back(u, v);
  }
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> current;
  auto rec = [&](auto&& self, std::size_t i, VertexSet used) -> void {
    if (i == inside.size()) {
      out.push_back(current);
      return;
    }
    self(self, i + 1, used);
    const auto [u, v] = inside[i];
    if ((used & (bit(u) | bit(v))) == 0) {
      current.push_back(inside[i]);
      self(self, i + 1, used | bit(u) | bit(v));
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::optional<CycleWitness> cycle_through_matching(const Graph& g, const Fragment& endfrag,
                                                   const std::vector<Edge>& matching, Budget& budget) {
  VertexSet touched = 0;
  for (auto [u, v] : matching) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v)) {
      throw std::invalid_argument("matching edge is not an edge of the graph");
    }
    if (!contains(endfrag.cutset, u) || !contains(endfrag.cutset, v)) {
      throw std::invalid_argument("matching edge is not inside the cut-set");
    }
    if ((touched & (bit(u) | bit(v))) != 0) throw std::invalid_argument("matching edges are not independent");
    touched |= bit(u) | bit(v);
  }
  if (matching.empty()) {
    if (endfrag.vertices == 0) return std::nullopt;
    return CycleWitness{{lowest(endfrag.vertices)}};
  }
  auto cycle = longest_cycle_through_edges(g, matching, endfrag.vertices | touched, true, budget);
  if (cycle) return cycle;
  if (matching.size() == 1) return CycleWitness{{matching[0].first, matching[0].second}};
  return std::nullopt;
}

const char* lemma_name(StructuralLemma which) {
  switch (which) {
    case StructuralLemma::kL12: return "L12";
    case StructuralLemma::kL13: return "L13";
    case StructuralLemma::kL14: return "L14";
    case StructuralLemma::kL15: return "L15";
  }
  return "L12";
}

bool structural_hypothesis(StructuralLemma which, int delta, int kappa, int alpha) {
  switch (which) {
    case StructuralLemma::kL12: return kappa >= 3 && delta >= alpha;
    case StructuralLemma::kL13: return kappa >= 4 && delta >= alpha;
    case StructuralLemma::kL14:
    case StructuralLemma::kL15: return kappa >= 3 && 2 * delta > 3 * kappa - 2;
  }
  return false;
}

StatementReport check_structural_lemma(const Graph& g, StructuralLemma which, const LemmaInputs& in,
                                       Budget& budget) {
  StatementReport r;
  r.g6 = write_graph6(g);
  r.statement = lemma_name(which);
  const int d = in.delta;
  const int k = in.kappa;
  if (!structural_hypothesis(which, d, k, in.alpha)) {
    r.hypothesis = false;
    r.status = Verdict::kVacuous;
    r.note = "hypothesis not met";
    return r;
  }

  int checked = 0;
  Json violation;
  auto fail = [&](const Fragment& up, Json detail) {
    if (!violation.is_null()) return;
    violation = Json::object();
    violation["A_up"] = set_json(up.vertices);
    violation["S"] = set_json(up.cutset);
    violation["A_down"] = set_json(up.complement);
    for (auto& [key, value] : detail.items()) violation[key] = value;
  };

  for (std::size_t i = 0; i < in.catalog->fragments.size(); ++i) {
    const Fragment& frag = in.catalog->fragments[i];
    const int size = count(frag.vertices);
    if (which == StructuralLemma::kL12 || which == StructuralLemma::kL13) {
      const bool applies = which == StructuralLemma::kL12 ? size <= 3 * d - k - 4 : size >= 3 * d - k - 3;
      if (!applies) continue;
      ++checked;
      for (const auto& ps : all_max_path_systems(g, frag, budget)) {
        const VertexSet up = ps.vertex_set();
        bool ok = is_subset(frag.vertices, up);
        if (which == StructuralLemma::kL13) ok = ok || count(up) >= 3 * d - 5;
        if (!ok) {
          Json detail;
          detail["Q_up"] = ps.paths;
          detail["V_up"] = set_json(up);
          fail(frag, detail);
          break;
        }
      }
      continue;
    }

    if (!in.catalog->endfragment[i]) continue;
    const bool applies = which == StructuralLemma::kL14 ? size <= 3 * d - 3 * k : size >= 3 * d - 3 * k + 1;
    if (!applies) continue;
    ++checked;
    const Fragment up = fragment_complement(g, frag);
    const auto sel = combined_cycles(g, up, budget);
    if (!sel) {
      fail(up, Json{{"reason", "no closing system"}});
      continue;
    }
    const VertexSet down = sel->down.vertex_set;
    const int f = sel->down.f;
    const bool rest_edgeless = edgeless(g, frag.vertices & ~down);
    bool ok = false;
    if (which == StructuralLemma::kL14) {
      ok = rest_edgeless;
    } else if (f == 2 && is_subset(frag.cutset, sel->up.vertex_set())) {
      ok = rest_edgeless || count(down) >= 2 * d - 2 * k + 3;
    } else if (f == 2) {
      const bool q0_edgeless = sel->down.q0 && edgeless(g, frag.vertices & ~from_list(*sel->down.q0));
      ok = q0_edgeless || count(down) >= 3 * d - 3 * k + 1;
    } else if (f >= 3) {
      ok = rest_edgeless || count(down) >= 3 * d - 3 * k + f - 1;
    }
    if (!ok) {
      Json detail;
      detail["Q_up"] = sel->up.paths;
      detail["Q_down"] = sel->down.paths;
      detail["V_down"] = set_json(down);
      detail["f"] = f;
      if (sel->down.q0) detail["Q0"] = *sel->down.q0;
      fail(up, detail);
    }
  }

  if (checked == 0) {
    r.hypothesis = false;
    r.status = Verdict::kVacuous;
    r.note = "no fragment meets the size condition";
    return r;
  }
  r.hypothesis = true;
  r.conclusion = violation.is_null();
  r.status = violation.is_null() ? Verdict::kHeld : Verdict::kCounterexample;
  r.witness = violation.is_null() ? Json{{"fragments_checked", checked}} : violation;
  return r;
}

StatementReport check_structural_lemma(const Graph& g, StructuralLemma which, Budget& budget) {
  LemmaInputs in;
  in.delta = min_degree(g);
  in.kappa = connectivity(g, budget);
  in.alpha = independence_number(g, budget);
  if (!structural_hypothesis(which, in.delta, in.kappa, in.alpha)) return check_structural_lemma(g, which, in, budget);
  const FragmentCatalog catalog = enumerate_fragments(g, kDefaultCatalogLimit, budget);
  in.catalog = &catalog;
  return check_structural_lemma(g, which, in, budget);
}

}  // namespace cyclebound
