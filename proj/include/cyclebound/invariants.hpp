#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclebound/budget.hpp"
#include "cyclebound/graph.hpp"

namespace cyclebound {

using Edge = std::pair<int, int>;

// Vertices in cyclic order. One vertex stands for a cycle of length 1 and two
// adjacent vertices for a cycle of length 2 (an edge), following the
// convention that lets acyclic graphs have a circumference.
struct CycleWitness {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const { return from_list(vertices); }
};

bool is_valid_cycle(const Graph& g, const CycleWitness& w);

struct Circumference {
  int length = 0;
  CycleWitness witness;
};

struct InvariantBundle {
  int n = 0;
  int delta = 0;
  int kappa = 0;
  int alpha = 0;
  int c = 0;
  bool hamiltonian = false;
  CycleWitness witness;
};

int min_degree(const Graph& g);

// Minimum number of vertices whose removal leaves a disconnected or trivial
// graph: n-1 for complete graphs, 0 for disconnected graphs and K_1.
// Computed as the least local connectivity over non-adjacent pairs using unit
// vertex-capacity augmenting paths.
int connectivity(const Graph& g, Budget& budget = Budget::none());
// Same value by scanning vertex subsets in increasing size.
int connectivity_exhaustive(const Graph& g, Budget& budget = Budget::none());

// Maximum clique of the complement, branch and bound with a greedy colouring
// bound.
int independence_number(const Graph& g, Budget& budget = Budget::none());
// Include/exclude recursion without bounds; n <= 24.
int independence_number_exhaustive(const Graph& g, Budget& budget = Budget::none());

// Longest cycle by depth-first search over simple paths with reachability and
// degree-peeling bounds. 1 for nonempty edgeless graphs, 2 for forests with an
// edge. Throws std::invalid_argument on the empty graph.
Circumference circumference(const Graph& g, Budget& budget = Budget::none());
// Held-Karp subset dynamic programme; independent of the search above.
// n <= 20.
int circumference_dp(const Graph& g, Budget& budget = Budget::none());

bool is_hamiltonian(const Graph& g, Budget& budget = Budget::none());

InvariantBundle compute_invariants(const Graph& g, Budget& budget = Budget::none());

// Longest simple u-v path (in edges). nullopt when v is unreachable from u.
std::optional<int> longest_path_between(const Graph& g, int u, int v,
                                        Budget& budget = Budget::none());

// Longest u-v path inside `within` that visits every vertex of `required`.
// Vertex list from u to v, or nullopt when no such path exists.
std::optional<std::vector<int>> longest_path(const Graph& g, int u, int v, VertexSet within,
                                             VertexSet required, Budget& budget = Budget::none());

// Longest cycle (at least 3 vertices) inside `within` that traverses every
// edge of `required_edges`. With require_independent the edges must be
// pairwise vertex-disjoint; otherwise any edge set whose vertices have at most
// two required neighbours is searched.
std::optional<CycleWitness> longest_cycle_through_edges(const Graph& g,
                                                        const std::vector<Edge>& required_edges,
                                                        VertexSet within, bool require_independent,
                                                        Budget& budget = Budget::none());
inline std::optional<CycleWitness> longest_cycle_through_edges(const Graph& g,
                                                               const std::vector<Edge>& required_edges,
                                                               Budget& budget = Budget::none()) {
  return longest_cycle_through_edges(g, required_edges, g.vertices(), true, budget);
}

// Longest cycle (at least 3 vertices) inside `within` containing every vertex
// of `required`.
std::optional<CycleWitness> longest_cycle_containing(const Graph& g, VertexSet required,
                                                     VertexSet within,
                                                     Budget& budget = Budget::none());

}  // namespace cyclebound
