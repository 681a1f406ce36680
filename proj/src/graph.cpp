#include "cyclebound/graph.hpp"

#include <string>

namespace cyclebound {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::length_error("graph order " + std::to_string(n) + " outside [0, 64]");
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::size() const {
  int total = 0;
  for (VertexSet row : rows_) total += count(row);
  return total / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[static_cast<std::size_t>(u)] |= bit(v);
  rows_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)] &= ~bit(v);
  rows_[static_cast<std::size_t>(v)] &= ~bit(u);
}

VertexSet Graph::neighborhood(VertexSet x) const {
  VertexSet out = 0;
  for_each_vertex(x, [&](int v) { out |= neighbors(v); });
  return out & ~x;
}

VertexSet Graph::reachable(int from, VertexSet within) const {
  VertexSet seen = bit(from);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::connected_within(VertexSet within) const {
  if (within == 0) return true;
  return reachable(lowest(within), within) == within;
}

std::vector<VertexSet> Graph::components(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (rest != 0) {
    const VertexSet comp = reachable(lowest(rest), within);
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for_each_vertex(keep, [&](int v) { label[static_cast<std::size_t>(v)] = next++; });
  Graph out(next);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(neighbors(u) & keep, [&](int v) {
      if (u < v) out.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
    });
  });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(neighbors(u) & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

std::uint64_t Graph::edge_mask() const {
  if (n_ > 11) throw std::length_error("edge mask needs n <= 11");
  std::uint64_t mask = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) {
      if (adjacent(i, j)) mask |= std::uint64_t{1} << pair_index(i, j);
    }
  }
  return mask;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  if (n > 11) throw std::length_error("edge mask needs n <= 11");
  Graph g(n);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((mask >> pair_index(i, j)) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace cyclebound
