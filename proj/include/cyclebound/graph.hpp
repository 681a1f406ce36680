#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclebound/bits.hpp"

namespace cyclebound {

// Simple undirected graph on vertices 0..n-1 (n <= 64) with one adjacency
// bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const;  // number of edges

  VertexSet vertices() const { return low_mask(n_); }
  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return count(neighbors(v)); }
  bool adjacent(int u, int v) const { return contains(neighbors(u), v); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // N(X): vertices outside X adjacent to some vertex of X.
  VertexSet neighborhood(VertexSet x) const;

  // Vertices of `within` reachable from `from` inside the subgraph induced by
  // `within` (from must be a member).
  VertexSet reachable(int from, VertexSet within) const;
  bool connected_within(VertexSet within) const;
  bool is_connected() const { return connected_within(vertices()); }
  std::vector<VertexSet> components(VertexSet within) const;

  // Subgraph induced by `keep`, relabelled in increasing vertex order.
  Graph induced(VertexSet keep) const;

  std::vector<std::pair<int, int>> edges() const;

  // Bit k of the mask is the pair (i, j), i < j, with k = j(j-1)/2 + i
  // (graph6 column order). Only defined for n <= 11.
  std::uint64_t edge_mask() const;
  static Graph from_edge_mask(int n, std::uint64_t mask);

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

inline constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

}  // namespace cyclebound
