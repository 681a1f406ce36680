#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclebound/graph.hpp"

namespace cyclebound {

constexpr int kMaxDedupOrder = 8;
constexpr int kMaxLabeledOrder = 11;

// Isomorphism-invariant edge mask: vertices are split into cells by iterated
// degree refinement, cells are ordered by colour, and the result is the
// minimum edge mask over all labellings that keep every cell contiguous in
// that order. n <= 11.
std::uint64_t canonical_mask(const Graph& g);

// One canonical mask per isomorphism class on n vertices, ascending. Built by
// extending every class on n-1 vertices with a new vertex. n <= 8.
const std::vector<std::uint64_t>& isomorphism_classes(int n);

// Deterministic, seekable source of graphs. The cursor is the position of the
// next graph in the source's own numbering; it only moves forward through
// next() or explicitly through seek().
class GraphStream {
 public:
  // Labelled mode (dedup = false): every graph in increasing edge-mask order,
  // cursor = edge mask. Dedup mode: one representative per isomorphism class,
  // ascending canonical mask, cursor = index into that list.
  static GraphStream enumerate(int n, bool connected_only, bool dedup);
  static GraphStream graph6_file(const std::string& path);
  // Graph i is random_gnp(n, p, seed + i) for i < count.
  static GraphStream random(int n, double p, std::uint64_t seed, std::uint64_t count);

  std::optional<Graph> next();
  std::uint64_t cursor() const { return cursor_; }
  void seek(std::uint64_t cursor) { cursor_ = cursor; }
  // Identifies the source; resume refuses cursors from a different stream.
  const std::string& fingerprint() const { return fingerprint_; }

 private:
  enum class Kind { kLabeled, kList, kGraph6Lines, kRandom };

  Kind kind_ = Kind::kList;
  int n_ = 0;
  bool connected_only_ = false;
  double p_ = 0.0;
  std::uint64_t seed_ = 0;
  std::uint64_t end_ = 0;
  std::uint64_t cursor_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::string> lines_;
  std::string fingerprint_;
};

}  // namespace cyclebound
