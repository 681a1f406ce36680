#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclebound/budget.hpp"
#include "cyclebound/fragments.hpp"
#include "cyclebound/graph.hpp"
#include "cyclebound/invariants.hpp"
#include "cyclebound/report.hpp"

namespace cyclebound {

class SearchInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest |A u S| handed to the exact path-system searches.
constexpr int kMaxPathSystemVertices = 16;
constexpr std::size_t kMaxOptimalSystems = 200000;

// Vertex-disjoint paths inside <A u S>, each with at least two vertices and
// both terminals in S (interior vertices may lie in S too). Every path is
// stored from its smaller terminal to its larger one; paths are ordered by
// first terminal.
struct PathSystem {
  std::vector<std::vector<int>> paths;

  int m() const { return static_cast<int>(paths.size()); }
  VertexSet vertex_set() const;
  int total() const;  // sum of |V(Q_i)|
  bool operator==(const PathSystem&) const = default;
};

// The paths laid end to end; joints that are not edges of the graph are
// flagged as virtual.
struct UnitedPath {
  std::vector<int> vertices;
  std::vector<bool> virtual_joint;  // virtual_joint[i]: vertices[i]-vertices[i+1]
};

UnitedPath unite(const Graph& g, const PathSystem& ps);

// Paths inside <A^ u S> closing the system into one simple cycle.
struct ComplementSystem {
  // Cyclic arrangement of the upper paths: order[i] indexes PathSystem::paths,
  // reversed[i] says it is walked from its larger terminal.
  std::vector<int> order;
  std::vector<bool> reversed;
  // paths[i] runs from the exit of upper path order[i] to the entry of upper
  // path order[i+1 mod m].
  std::vector<std::vector<int>> paths;
  VertexSet vertex_set = 0;
  int f = 0;  // |V(down) n S|
  // Present when f = 2 and S - V(up) is nonempty: a longest path between the
  // terminals of the first upper path through z inside <A^ u {F, L, z}>.
  std::optional<int> z;
  std::optional<std::vector<int>> q0;
};

struct CombinedCycles {
  PathSystem up;
  ComplementSystem down;
  CycleWitness c_star;
  CycleWitness c_star_star;  // longest cycle whose vertex set contains C*
};

// Every path system attaining the maximum total for the fragment's side
// (A = frag.vertices, S = frag.cutset), sorted by the tie-break order: fewer
// paths, then lexicographically smaller sorted vertex set, then paths.
std::vector<PathSystem> all_max_path_systems(const Graph& g, const Fragment& frag,
                                             Budget& budget = Budget::none());
// First system of all_max_path_systems.
PathSystem max_path_system(const Graph& g, const Fragment& frag, Budget& budget = Budget::none());

// Maximum-size closing paths through the complement side, or nullopt when no
// arrangement closes the system into a simple cycle.
std::optional<ComplementSystem> complement_system(const Graph& g, const Fragment& frag,
                                                  const PathSystem& ps,
                                                  Budget& budget = Budget::none());

CycleWitness assemble_cycle(const PathSystem& ps, const ComplementSystem& down);

// Among all maximum systems, the one whose closed cycle C* is longest (ties
// by the system order), and C** for it.
std::optional<CombinedCycles> combined_cycles(const Graph& g, const Fragment& frag,
                                              Budget& budget = Budget::none());

// A cycle inside <A u V(L)> using every edge of L, where A = endfrag.vertices
// and L is a set of independent edges inside <endfrag.cutset>. Empty L yields
// a one-vertex cycle; a single edge with no longer cycle around it yields the
// edge itself as a 2-cycle.
std::optional<CycleWitness> cycle_through_matching(const Graph& g, const Fragment& endfrag,
                                                   const std::vector<Edge>& matching,
                                                   Budget& budget = Budget::none());

// All sets of pairwise independent edges inside <S>, including the empty set.
std::vector<std::vector<Edge>> independent_edge_sets(const Graph& g, VertexSet s);

enum class StructuralLemma { kL12, kL13, kL14, kL15 };

const char* lemma_name(StructuralLemma which);

struct LemmaInputs {
  int delta = 0;
  int kappa = 0;
  int alpha = 0;
  const FragmentCatalog* catalog = nullptr;
};

// Graph-level part of the lemma's hypothesis (connectivity and degree
// conditions, before any fragment size condition).
bool structural_hypothesis(StructuralLemma which, int delta, int kappa, int alpha);

// Evaluates the lemma on every fragment meeting its size condition.
// L12/L13 quantify over every maximum upper system; L14/L15 use the system
// selected for C*. inputs.catalog may be null when the graph-level
// hypothesis fails. Budget exhaustion and oversize searches propagate as
// exceptions.
StatementReport check_structural_lemma(const Graph& g, StructuralLemma which,
                                       const LemmaInputs& inputs, Budget& budget = Budget::none());
StatementReport check_structural_lemma(const Graph& g, StructuralLemma which,
                                       Budget& budget = Budget::none());

}  // namespace cyclebound
