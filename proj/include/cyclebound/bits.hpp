#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cyclebound {

// Vertex subsets of a graph with at most 64 vertices, one bit per vertex.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet low_mask(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

constexpr int count(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

// Calls f(v) for every member in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

inline std::vector<int> to_list(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count(s)));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet from_list(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

// Next subset with the same popcount (Gosper's hack). Returns 0 past the end
// of the universe of size n.
constexpr VertexSet next_combination(VertexSet s, int n) {
  const VertexSet c = s & (~s + 1);
  const VertexSet r = s + c;
  if (r == 0) return 0;
  const VertexSet next = (((r ^ s) >> 2) / c) | r;
  return (next & ~low_mask(n)) != 0 ? 0 : next;
}

}  // namespace cyclebound
