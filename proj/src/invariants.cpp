#include "cyclebound/invariants.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace cyclebound {

bool is_valid_cycle(const Graph& g, const CycleWitness& w) {
  const auto& vs = w.vertices;
  if (vs.empty()) return false;
  for (int v : vs) {
    if (v < 0 || v >= g.order()) return false;
  }
  if (count(from_list(vs)) != static_cast<int>(vs.size())) return false;
  if (vs.size() == 1) return true;
  if (vs.size() == 2) return g.adjacent(vs[0], vs[1]);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("minimum degree of the empty graph");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != g.order() - 1) return false;
  }
  return true;
}

// Number of internally vertex-disjoint s-t paths, stopping once `limit` is
// reached. s and t must be non-adjacent.
int local_connectivity(const Graph& g, int s, int t, int limit, Budget& budget) {
  const int n = g.order();
  const int nodes = 2 * n;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (int v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = (v == s || v == t) ? kInf : 1;
  for (auto [u, v] : g.edges()) {
    at(2 * u + 1, 2 * v) = kInf;
    at(2 * v + 1, 2 * u) = kInf;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  std::vector<int> queue;
  while (flow < limit) {
    budget.tick();
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    queue.assign(1, source);
    for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(sink)] < 0; ++head) {
      const int a = queue[head];
      for (int b = 0; b < nodes; ++b) {
        if (parent[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
          parent[static_cast<std::size_t>(b)] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
      const int a = parent[static_cast<std::size_t>(b)];
      at(a, b) -= 1;
      at(b, a) += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int connectivity(const Graph& g, Budget& budget) {
  const int n = g.order();
  budget.tick();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  if (is_complete(g)) return n - 1;
  int best = n - 2;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, local_connectivity(g, s, t, best, budget));
    }
  }
  return best;
}

int connectivity_exhaustive(const Graph& g, Budget& budget) {
  const int n = g.order();
  if (n <= 1) return 0;
  const VertexSet all = g.vertices();
  for (int k = 0; k <= n - 2; ++k) {
    for (VertexSet cut = low_mask(k); cut != 0 || k == 0; cut = next_combination(cut, n)) {
      budget.tick();
      if (!g.connected_within(all & ~cut)) return k;
      if (k == 0) break;
    }
  }
  return n - 1;
}

// ---------------------------------------------------------------------------
// Independence number

namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, Budget& budget) : g_(g), budget_(budget) {}

  int run() {
    expand(g_.vertices(), 0);
    return best_;
  }

 private:
  void expand(VertexSet candidates, int size) {
    budget_.tick();
    if (size > best_) best_ = size;
    if (candidates == 0) return;
    // Greedy partition of the candidates into cliques of g; an independent
    // set takes at most one vertex per clique.
    std::array<int, kMaxVertices> order{};
    std::array<int, kMaxVertices> colour{};
    int filled = 0;
    int colours = 0;
    VertexSet uncoloured = candidates;
    while (uncoloured != 0) {
      ++colours;
      VertexSet open = uncoloured;
      while (open != 0) {
        const int v = lowest(open);
        open &= g_.neighbors(v);
        uncoloured &= ~bit(v);
        order[static_cast<std::size_t>(filled)] = v;
        colour[static_cast<std::size_t>(filled)] = colours;
        ++filled;
      }
    }
    for (int i = filled - 1; i >= 0; --i) {
      if (size + colour[static_cast<std::size_t>(i)] <= best_) return;
      const int v = order[static_cast<std::size_t>(i)];
      expand(candidates & ~g_.neighbors(v) & ~bit(v), size + 1);
      candidates &= ~bit(v);
    }
  }

  const Graph& g_;
  Budget& budget_;
  int best_ = 0;
};

int exhaustive_independent(const Graph& g, int v, VertexSet chosen, Budget& budget) {
  budget.tick();
  if (v == g.order()) return count(chosen);
  int best = exhaustive_independent(g, v + 1, chosen, budget);
  if ((g.neighbors(v) & chosen) == 0) {
    best = std::max(best, exhaustive_independent(g, v + 1, chosen | bit(v), budget));
  }
  return best;
}

}  // namespace

int independence_number(const Graph& g, Budget& budget) {
  return IndependentSetSearch(g, budget).run();
}

int independence_number_exhaustive(const Graph& g, Budget& budget) {
  if (g.order() > 24) throw std::length_error("exhaustive independence number needs n <= 24");
  return exhaustive_independent(g, 0, 0, budget);
}

// ---------------------------------------------------------------------------
// Cycles and paths

namespace {

// Strips vertices that cannot be interior to the remainder of a path: each
// needs two neighbours among the surviving vertices and the `anchors`.
VertexSet peel(const Graph& g, VertexSet avail, VertexSet anchors, VertexSet exempt) {
  bool changed = true;
  while (changed) {
    changed = false;
    VertexSet scan = avail & ~exempt;
    for_each_vertex(scan, [&](int w) {
      if (count(g.neighbors(w) & (avail | anchors)) < 2) {
        avail &= ~bit(w);
        changed = true;
      }
    });
  }
  return avail;
}

// Depth-first search for the longest cycle through a fixed start vertex with
// optional required vertices and required cycle neighbours.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, VertexSet required, std::vector<VertexSet> partners, Budget& budget)
      : g_(g), required_(required), partners_(std::move(partners)), budget_(budget) {
    if (partners_.empty()) partners_.assign(static_cast<std::size_t>(g.order()), 0);
  }

  void run_from(int s, VertexSet allowed) {
    start_ = s;
    allowed_ = allowed;
    path_.assign(1, s);
    extend(s, bit(s));
  }

  int best_length() const { return static_cast<int>(best_.size()); }
  const std::vector<int>& best() const { return best_; }

 private:
  VertexSet partners(int v) const { return partners_[static_cast<std::size_t>(v)]; }

  void extend(int x, VertexSet visited) {
    budget_.tick();
    const int k = static_cast<int>(path_.size());
    const int s = start_;
    const int prev = k >= 2 ? path_[static_cast<std::size_t>(k - 2)] : -1;
    const VertexSet prev_bit = prev >= 0 ? bit(prev) : 0;

    if (k >= 3 && g_.adjacent(x, s) && is_subset(partners(x), prev_bit | bit(s)) &&
        is_subset(partners(s), bit(path_[1]) | bit(x)) && is_subset(required_, visited) &&
        k > best_length()) {
      best_ = path_;
    }

    VertexSet candidates;
    if (k == 1) {
      candidates = partners(s) != 0 ? bit(lowest(partners(s))) : g_.neighbors(s) & allowed_;
    } else {
      const VertexSet unmet = partners(x) & ~prev_bit;
      if ((unmet & visited) != 0) return;  // only closing could satisfy it
      if (count(unmet) > 1) return;
      candidates = unmet != 0 ? unmet : g_.neighbors(x) & allowed_ & ~visited;
    }
    candidates &= allowed_ & ~visited;
    if (candidates == 0) return;

    const VertexSet anchors = bit(x) | bit(s);
    const VertexSet avail = peel(g_, allowed_ & ~visited, anchors, 0);
    const VertexSet comp = g_.reachable(x, avail | bit(x));
    if ((g_.neighbors(s) & comp & ~bit(x)) == 0) return;
    if (!is_subset(required_ & ~visited, comp)) return;
    if (k + count(comp & ~bit(x)) <= best_length()) return;
    candidates &= comp;

    // Fewest onward options first, so long cycles tend to appear early.
    std::array<std::pair<int, int>, kMaxVertices> ordered{};
    int m = 0;
    for_each_vertex(candidates, [&](int y) {
      ordered[static_cast<std::size_t>(m++)] = {count(g_.neighbors(y) & avail), y};
    });
    std::sort(ordered.begin(), ordered.begin() + m);
    for (int i = 0; i < m; ++i) {
      const int y = ordered[static_cast<std::size_t>(i)].second;
      const VertexSet done = partners(y) & visited & ~bit(x) & ~bit(s);
      if (done != 0) continue;
      path_.push_back(y);
      extend(y, visited | bit(y));
      path_.pop_back();
    }
  }

  const Graph& g_;
  VertexSet required_;
  std::vector<VertexSet> partners_;
  Budget& budget_;
  int start_ = 0;
  VertexSet allowed_ = 0;
  std::vector<int> path_;
  std::vector<int> best_;
};

class PathSearch {
 public:
  PathSearch(const Graph& g, int target, VertexSet within, VertexSet required, Budget& budget)
      : g_(g), target_(target), within_(within), required_(required), budget_(budget) {}

  void run_from(int u) {
    path_.assign(1, u);
    extend(u, bit(u));
  }

  const std::vector<int>& best() const { return best_; }

 private:
  void extend(int x, VertexSet visited) {
    budget_.tick();
    const int k = static_cast<int>(path_.size());
    if (x == target_) {
      if (is_subset(required_, visited) && k > static_cast<int>(best_.size())) best_ = path_;
      return;
    }
    const VertexSet avail = peel(g_, within_ & ~visited, bit(x), bit(target_));
    const VertexSet comp = g_.reachable(x, avail | bit(x));
    if (!contains(comp, target_)) return;
    if (!is_subset(required_ & ~visited, comp)) return;
    if (k + count(comp & ~bit(x)) <= static_cast<int>(best_.size())) return;
    for_each_vertex(g_.neighbors(x) & comp & ~bit(x), [&](int y) {
      path_.push_back(y);
      extend(y, visited | bit(y));
      path_.pop_back();
    });
  }

  const Graph& g_;
  int target_;
  VertexSet within_;
  VertexSet required_;
  Budget& budget_;
  std::vector<int> path_;
  std::vector<int> best_;
};

}  // namespace

Circumference circumference(const Graph& g, Budget& budget) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("circumference of the empty graph");
  budget.tick();
  CycleSearch search(g, 0, {}, budget);
  for (int s = 0; s < n; ++s) {
    const VertexSet allowed = g.vertices() & ~low_mask(s);
    if (count(allowed) <= search.best_length()) break;
    search.run_from(s, allowed);
  }
  if (search.best_length() >= 3) return {search.best_length(), CycleWitness{search.best()}};
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 0) return {2, CycleWitness{{v, lowest(g.neighbors(v))}}};
  }
  return {1, CycleWitness{{0}}};
}

int circumference_dp(const Graph& g, Budget& budget) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("circumference of the empty graph");
  if (n > 20) throw std::length_error("subset dynamic programme needs n <= 20");
  budget.tick();
  // ends[mask]: vertices v such that some path starting at the lowest vertex
  // of mask visits exactly mask and stops at v.
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint32_t> ends(masks, 0);
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
  int best = 0;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    budget.tick();
    const int first = std::countr_zero(mask);
    const int size = std::popcount(mask);
    if (size >= 3 && size > best && (e & static_cast<std::uint32_t>(g.neighbors(first))) != 0) best = size;
    for (std::uint32_t rest = e; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      std::uint32_t step = static_cast<std::uint32_t>(g.neighbors(v)) & ~static_cast<std::uint32_t>(mask);
      step &= ~((2U << first) - 1U);
      for (; step != 0; step &= step - 1) {
        const int w = std::countr_zero(step);
        ends[mask | (std::size_t{1} << w)] |= 1U << w;
      }
    }
  }
  if (best >= 3) return best;
  return g.size() > 0 ? 2 : 1;
}

bool is_hamiltonian(const Graph& g, Budget& budget) {
  if (g.order() < 3) return false;
  return circumference(g, budget).length == g.order();
}

InvariantBundle compute_invariants(const Graph& g, Budget& budget) {
  InvariantBundle b;
  b.n = g.order();
  b.delta = min_degree(g);
  b.kappa = connectivity(g, budget);
  b.alpha = independence_number(g, budget);
  auto circ = circumference(g, budget);
  b.c = circ.length;
  b.witness = std::move(circ.witness);
  b.hamiltonian = b.n >= 3 && b.c == b.n;
  return b;
}

std::optional<std::vector<int>> longest_path(const Graph& g, int u, int v, VertexSet within,
                                             VertexSet required, Budget& budget) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) throw std::out_of_range("path endpoint out of range");
  if (u == v) throw std::invalid_argument("path endpoints must differ");
  within |= bit(u) | bit(v);
  PathSearch search(g, v, within, required, budget);
  search.run_from(u);
  if (search.best().empty()) return std::nullopt;
  return search.best();
}

std::optional<int> longest_path_between(const Graph& g, int u, int v, Budget& budget) {
  auto path = longest_path(g, u, v, g.vertices(), 0, budget);
  if (!path) return std::nullopt;
  return static_cast<int>(path->size()) - 1;
}

std::optional<CycleWitness> longest_cycle_through_edges(const Graph& g,
                                                        const std::vector<Edge>& required_edges,
                                                        VertexSet within, bool require_independent,
                                                        Budget& budget) {
  std::vector<VertexSet> partners(static_cast<std::size_t>(g.order()), 0);
  VertexSet touched = 0;
  for (auto [a, b] : required_edges) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || !g.adjacent(a, b)) {
      throw std::invalid_argument("required edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " is not an edge of the graph");
    }
    if (require_independent && ((touched & (bit(a) | bit(b))) != 0)) {
      throw std::invalid_argument("required edges are not independent");
    }
    touched |= bit(a) | bit(b);
    partners[static_cast<std::size_t>(a)] |= bit(b);
    partners[static_cast<std::size_t>(b)] |= bit(a);
  }
  if (!is_subset(touched, within)) return std::nullopt;
  for (VertexSet p : partners) {
    if (count(p) > 2) return std::nullopt;
  }
  CycleSearch search(g, touched, partners, budget);
  if (touched == 0) {
    for (int s = 0; s < g.order(); ++s) {
      if (!contains(within, s)) continue;
      const VertexSet allowed = within & ~low_mask(s);
      if (count(allowed) <= search.best_length()) break;
      search.run_from(s, allowed);
    }
  } else {
    search.run_from(lowest(touched), within);
  }
  if (search.best_length() < 3) return std::nullopt;
  return CycleWitness{search.best()};
}

std::optional<CycleWitness> longest_cycle_containing(const Graph& g, VertexSet required,
                                                     VertexSet within, Budget& budget) {
  within &= g.vertices();
  if (!is_subset(required, within)) return std::nullopt;
  if (required == 0) return longest_cycle_through_edges(g, {}, within, true, budget);
  CycleSearch search(g, required, {}, budget);
  search.run_from(lowest(required), within);
  if (search.best_length() < 3) return std::nullopt;
  return CycleWitness{search.best()};
}

}  // namespace cyclebound
