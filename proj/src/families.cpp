#include "cyclebound/families.hpp"

#include <charconv>
#include <cstdio>
#include <random>
#include <regex>
#include <string>

namespace cyclebound {

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph repeat(const Graph& g, int copies) {
  if (copies < 0) throw std::invalid_argument("negative copy count");
  Graph out;
  for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp needs 0 <= p <= 1");
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) g.add_edge(i, j);
    }
  }
  return g;
}

Graph clique_join(int m, int a, int k) {
  if (m < 1 || a < 1 || k < 1) throw std::invalid_argument("clique join needs m, a, k >= 1");
  return join(repeat(complete_graph(a), m), complete_graph(k));
}

std::string_view reading_name(LimitReading reading) {
  switch (reading) {
    case LimitReading::kDisjointClique: return "disjoint_clique";
    case LimitReading::kEnlargedCopy: return "enlarged_copy";
    case LimitReading::kJoinedToAll: return "joined_to_all";
  }
  return "disjoint_clique";
}

LimitReading parse_reading(std::string_view name) {
  if (name == "disjoint_clique" || name == "literal") return LimitReading::kDisjointClique;
  if (name == "enlarged_copy") return LimitReading::kEnlargedCopy;
  if (name == "joined_to_all") return LimitReading::kJoinedToAll;
  throw FamilySpecError("unknown H reading '" + std::string(name) + "'");
}

Graph limit_h(int a, int b, int t, int kappa, LimitReading reading) {
  if (a < 1 || b < 1 || t < 1 || kappa < 1) throw std::invalid_argument("H(a,b,t,k) needs all parameters >= 1");
  if (kappa > t) throw std::invalid_argument("H(a,b,t,k) needs k <= t");
  const Graph base = join(repeat(complete_graph(a), t), empty_graph(t));
  Graph g = disjoint_union(base, complete_graph(b));
  const int independent_start = t * a;
  const int clique_start = t * a + t;
  for (int x = clique_start; x < clique_start + b; ++x) {
    switch (reading) {
      case LimitReading::kDisjointClique:
        for (int s = 0; s < kappa; ++s) g.add_edge(x, independent_start + s);
        break;
      case LimitReading::kEnlargedCopy:
        for (int s = 0; s < kappa; ++s) g.add_edge(x, independent_start + s);
        for (int y = 0; y < a; ++y) g.add_edge(x, y);
        break;
      case LimitReading::kJoinedToAll:
        for (int s = 0; s < t; ++s) g.add_edge(x, independent_start + s);
        break;
    }
  }
  return g;
}

namespace {

int to_int(const std::string& s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw FamilySpecError("bad integer '" + s + "'");
  return value;
}

}  // namespace

FamilySpec parse_family(std::string_view text) {
  const std::string s(text);
  std::smatch m;
  static const std::regex h_re(R"(H\((\d+),(\d+),(\d+),(\d+)(?:,(\w+))?\))");
  static const std::regex join_re(R"((\d*)K_(\d+)\+K_(\d+))");
  static const std::regex named_re(R"(([KCPE])_(\d+))");
  static const std::regex call_re(R"((complete|cycle|path|empty)\((\d+)\))");
  static const std::regex gnp_re(R"(gnp\((\d+),([0-9.eE+-]+),(\d+)\))");
  if (std::regex_match(s, m, h_re)) {
    LimitHParams p{to_int(m[1]), to_int(m[2]), to_int(m[3]), to_int(m[4]), LimitReading::kDisjointClique};
    if (m[5].matched) p.reading = parse_reading(m[5].str());
    return p;
  }
  if (std::regex_match(s, m, join_re)) {
    const int copies = m[1].length() == 0 ? 1 : to_int(m[1]);
    return CliqueJoinParams{copies, to_int(m[2]), to_int(m[3])};
  }
  if (s == "petersen") return NamedParams{"petersen", 10};
  if (std::regex_match(s, m, named_re)) {
    static constexpr std::string_view names[] = {"complete", "cycle", "path", "empty"};
    const std::string_view letters = "KCPE";
    return NamedParams{std::string(names[letters.find(m[1].str()[0])]), to_int(m[2])};
  }
  if (std::regex_match(s, m, call_re)) return NamedParams{m[1].str(), to_int(m[2])};
  if (std::regex_match(s, m, gnp_re)) {
    double p = 0.0;
    try {
      std::size_t used = 0;
      p = std::stod(m[2].str(), &used);
      if (used != static_cast<std::size_t>(m[2].length())) throw FamilySpecError("bad probability");
    } catch (const std::logic_error&) {
      throw FamilySpecError("bad probability '" + m[2].str() + "'");
    }
    return GnpParams{to_int(m[1]), p, std::stoull(m[3].str())};
  }
  throw FamilySpecError("unrecognised graph constructor '" + s + "'");
}

Graph build(const FamilySpec& spec) {
  struct Visitor {
    Graph operator()(const LimitHParams& p) const { return limit_h(p.a, p.b, p.t, p.kappa, p.reading); }
    Graph operator()(const CliqueJoinParams& p) const { return clique_join(p.m, p.a, p.k); }
    Graph operator()(const NamedParams& p) const {
      if (p.name == "petersen") return petersen_graph();
      if (p.name == "complete") return complete_graph(p.n);
      if (p.name == "cycle") return cycle_graph(p.n);
      if (p.name == "path") return path_graph(p.n);
      if (p.name == "empty") return empty_graph(p.n);
      throw FamilySpecError("unknown named graph '" + p.name + "'");
    }
    Graph operator()(const GnpParams& p) const { return random_gnp(p.n, p.p, p.seed); }
  };
  return std::visit(Visitor{}, spec);
}

std::string describe(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const LimitHParams& p) const {
      return "H(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.t) + "," +
             std::to_string(p.kappa) + "," + std::string(reading_name(p.reading)) + ")";
    }
    std::string operator()(const CliqueJoinParams& p) const {
      return std::to_string(p.m) + "K_" + std::to_string(p.a) + "+K_" + std::to_string(p.k);
    }
    std::string operator()(const NamedParams& p) const {
      if (p.name == "petersen") return "petersen";
      return p.name + "(" + std::to_string(p.n) + ")";
    }
    std::string operator()(const GnpParams& p) const {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", p.p);
      return "gnp(" + std::to_string(p.n) + "," + buf + "," + std::to_string(p.seed) + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace cyclebound
