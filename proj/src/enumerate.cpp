#include "cyclebound/enumerate.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "cyclebound/families.hpp"
#include "cyclebound/graph6.hpp"

namespace cyclebound {

namespace {

std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for_each_vertex(g.neighbors(v), [&](int u) { around.push_back(colour[static_cast<std::size_t>(u)]); });
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& sig : signature) rank.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[signature[static_cast<std::size_t>(v)]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

std::uint64_t mask_under(const Graph& g, const std::vector<int>& at) {
  std::uint64_t mask = 0;
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    const VertexSet row = g.neighbors(at[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i) {
      if (contains(row, at[static_cast<std::size_t>(i)])) mask |= std::uint64_t{1} << pair_index(i, j);
    }
  }
  return mask;
}

void search_cells(const Graph& g, std::vector<std::vector<int>>& cells, std::size_t depth,
                  std::vector<int>& at, std::uint64_t& best) {
  if (depth == cells.size()) {
    best = std::min(best, mask_under(g, at));
    return;
  }
  auto& cell = cells[depth];
  std::sort(cell.begin(), cell.end());
  const std::size_t base = at.size();
  do {
    at.resize(base);
    at.insert(at.end(), cell.begin(), cell.end());
    search_cells(g, cells, depth + 1, at, best);
  } while (std::next_permutation(cell.begin(), cell.end()));
  at.resize(base);
}

}  // namespace

std::uint64_t canonical_mask(const Graph& g) {
  if (g.order() > kMaxLabeledOrder) throw std::length_error("canonical form needs n <= 11");
  const auto colour = refine_colours(g);
  std::map<int, std::vector<int>> by_colour;
  for (int v = 0; v < g.order(); ++v) by_colour[colour[static_cast<std::size_t>(v)]].push_back(v);
  std::vector<std::vector<int>> cells;
  for (auto& [c, members] : by_colour) cells.push_back(members);
  std::vector<int> at;
  std::uint64_t best = ~std::uint64_t{0};
  search_cells(g, cells, 0, at, best);
  return g.order() < 2 ? 0 : best;
}

const std::vector<std::uint64_t>& isomorphism_classes(int n) {
  if (n < 0 || n > kMaxDedupOrder) {
    throw std::length_error("isomorphism-class enumeration is limited to n <= 8");
  }
  static std::mutex lock;
  static std::array<std::vector<std::uint64_t>, kMaxDedupOrder + 1> cache;
  static std::array<bool, kMaxDedupOrder + 1> ready{};
  std::lock_guard<std::mutex> guard(lock);
  if (!ready[0]) {
    cache[0] = {0};
    ready[0] = true;
  }
  for (int k = 1; k <= n; ++k) {
    if (ready[static_cast<std::size_t>(k)]) continue;
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t base : cache[static_cast<std::size_t>(k - 1)]) {
      const Graph smaller = Graph::from_edge_mask(k - 1, base);
      for (VertexSet nb = 0; nb < (VertexSet{1} << (k - 1)); ++nb) {
        Graph g(k);
        for (auto [u, v] : smaller.edges()) g.add_edge(u, v);
        for_each_vertex(nb, [&](int u) { g.add_edge(u, k - 1); });
        seen.insert(canonical_mask(g));
      }
    }
    std::vector<std::uint64_t> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    cache[static_cast<std::size_t>(k)] = std::move(sorted);
    ready[static_cast<std::size_t>(k)] = true;
  }
  return cache[static_cast<std::size_t>(n)];
}

GraphStream GraphStream::enumerate(int n, bool connected_only, bool dedup) {
  GraphStream s;
  s.n_ = n;
  s.connected_only_ = connected_only;
  std::ostringstream fp;
  fp << "enumerate:n=" << n << ":connected=" << connected_only << ":dedup=" << dedup;
  s.fingerprint_ = fp.str();
  if (dedup) {
    s.kind_ = Kind::kList;
    for (std::uint64_t mask : isomorphism_classes(n)) {
      if (!connected_only || Graph::from_edge_mask(n, mask).is_connected()) s.masks_.push_back(mask);
    }
    s.end_ = s.masks_.size();
  } else {
    if (n < 0 || n > kMaxLabeledOrder) throw std::length_error("labelled enumeration is limited to n <= 11");
    s.kind_ = Kind::kLabeled;
    s.end_ = std::uint64_t{1} << (n * (n - 1) / 2);
  }
  return s;
}

GraphStream GraphStream::graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file '" + path + "'");
  GraphStream s;
  s.kind_ = Kind::kGraph6Lines;
  std::string line;
  std::uint64_t hash = 1469598103934665603ULL;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (unsigned char c : line) hash = (hash ^ c) * 1099511628211ULL;
    hash = (hash ^ '\n') * 1099511628211ULL;
    s.lines_.push_back(line);
  }
  s.end_ = s.lines_.size();
  std::ostringstream fp;
  fp << "graph6_file:" << path << ":records=" << s.end_ << ":fnv1a=" << std::hex << hash;
  s.fingerprint_ = fp.str();
  return s;
}

GraphStream GraphStream::random(int n, double p, std::uint64_t seed, std::uint64_t count) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs 0 <= p <= 1");
  GraphStream s;
  s.kind_ = Kind::kRandom;
  s.n_ = n;
  s.p_ = p;
  s.seed_ = seed;
  s.end_ = count;
  std::ostringstream fp;
  fp.precision(17);
  fp << "random:n=" << n << ":p=" << p << ":seed=" << seed << ":count=" << count;
  s.fingerprint_ = fp.str();
  return s;
}

std::optional<Graph> GraphStream::next() {
  while (cursor_ < end_) {
    const std::uint64_t at = cursor_++;
    switch (kind_) {
      case Kind::kLabeled: {
        Graph g = Graph::from_edge_mask(n_, at);
        if (connected_only_ && !g.is_connected()) continue;
        return g;
      }
      case Kind::kList:
        return Graph::from_edge_mask(n_, masks_[at]);
      case Kind::kGraph6Lines:
        try {
          return parse_graph6(lines_[at]);
        } catch (const std::exception& e) {
          throw std::runtime_error("graph6 record " + std::to_string(at + 1) + ": " + e.what());
        }
      case Kind::kRandom:
        return random_gnp(n_, p_, seed_ + at);
    }
  }
  return std::nullopt;
}

}  // namespace cyclebound
