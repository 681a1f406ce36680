#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "cyclebound/graph.hpp"

namespace cyclebound {

// Every vertex of g adjacent to every vertex of h; h is relabelled after g.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
// `copies` disjoint copies of g.
Graph repeat(const Graph& g, int copies);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

// mt19937_64 seeded with `seed`; pairs (i, j), i < j, visited row-major and
// kept when (draw >> 11) * 2^-53 < p.
Graph random_gnp(int n, double p, std::uint64_t seed);

// join(m disjoint copies of K_a, K_k).
Graph clique_join(int m, int a, int k);

// Where the K_b of H(a,b,t,kappa) is placed. The defining sentence starts from
// join(tK_a, co-K_t) and attaches K_b to kappa vertices of the independent
// t-set without saying where K_b lives.
enum class LimitReading {
  kDisjointClique,  // fresh K_b, adjacent only to the kappa chosen vertices
  kEnlargedCopy,    // first K_a copy grown by b fresh vertices, which see only
                    // the kappa chosen vertices of the independent set
  kJoinedToAll,     // fresh K_b joined to the whole independent t-set
};

std::string_view reading_name(LimitReading reading);
LimitReading parse_reading(std::string_view name);

// Vertex layout: the t copies of K_a first, then the independent t-set (its
// first kappa vertices are the chosen ones), then the b vertices of K_b.
Graph limit_h(int a, int b, int t, int kappa, LimitReading reading = LimitReading::kDisjointClique);

struct LimitHParams {
  int a = 1, b = 1, t = 1, kappa = 1;
  LimitReading reading = LimitReading::kDisjointClique;
};
struct CliqueJoinParams {
  int m = 1, a = 1, k = 1;
};
struct NamedParams {
  std::string name;  // petersen | complete | cycle | path | empty
  int n = 0;
};
struct GnpParams {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

using FamilySpec = std::variant<LimitHParams, CliqueJoinParams, NamedParams, GnpParams>;

class FamilySpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Constructor DSL: "H(a,b,t,k)" or "H(a,b,t,k,reading)", "mK_a+K_k",
// "petersen", "K_n", "C_n", "P_n", "E_n", "gnp(n,p,seed)". Returns
// FamilySpecError on anything else.
FamilySpec parse_family(std::string_view text);
Graph build(const FamilySpec& spec);
// Canonical DSL spelling of a family.
std::string describe(const FamilySpec& spec);

}  // namespace cyclebound
