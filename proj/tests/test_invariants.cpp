#include <gtest/gtest.h>

#include <random>

#include "cyclebound/enumerate.hpp"
#include "cyclebound/families.hpp"
#include "cyclebound/graph6.hpp"
#include "cyclebound/invariants.hpp"
#include "oracles.hpp"

using namespace cyclebound;

namespace {

Graph from(const char* spec) { return build(parse_family(spec)); }

template <typename F>
void for_connected(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n) {
    auto s = GraphStream::enumerate(n, true, true);
    while (auto g = s.next()) f(*g);
  }
}

}  // namespace

TEST(Invariants, MinDegree) {
  EXPECT_EQ(min_degree(complete_graph(5)), 4);
  EXPECT_EQ(min_degree(petersen_graph()), 3);
  EXPECT_EQ(min_degree(path_graph(4)), 1);
  EXPECT_EQ(min_degree(from("4K_2+K_3")), 4);
  EXPECT_EQ(min_degree(from("5K_2+K_4")), 5);
}

TEST(Invariants, Connectivity) {
  EXPECT_EQ(connectivity(complete_graph(5)), 4);
  EXPECT_EQ(connectivity(petersen_graph()), 3);
  EXPECT_EQ(connectivity(from("4K_2+K_3")), 3);
  EXPECT_EQ(connectivity(cycle_graph(7)), 2);
  EXPECT_EQ(connectivity(path_graph(5)), 1);
  EXPECT_EQ(connectivity(empty_graph(3)), 0);
  EXPECT_EQ(connectivity(complete_graph(1)), 0);
}

TEST(Invariants, Independence) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(independence_number(complete_graph(n)), 1);
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(petersen_graph()), 4);
  EXPECT_EQ(independence_number(empty_graph(6)), 6);
  EXPECT_EQ(independence_number(from("4K_2+K_3")), 4);
}

TEST(Invariants, Circumference) {
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(circumference(cycle_graph(n)).length, n);
  EXPECT_EQ(circumference(path_graph(4)).length, 2);
  EXPECT_EQ(circumference(empty_graph(3)).length, 1);
  EXPECT_EQ(circumference(petersen_graph()).length, 9);
  EXPECT_EQ(circumference(from("5K_2+K_4")).length, 12);
  EXPECT_EQ(circumference(from("4K_2+K_3")).length, 9);
  EXPECT_THROW(circumference(Graph(0)), std::invalid_argument);
  EXPECT_EQ(circumference_dp(petersen_graph()), 9);
}

TEST(Invariants, Hamiltonian) {
  EXPECT_TRUE(is_hamiltonian(cycle_graph(6)));
  EXPECT_FALSE(is_hamiltonian(petersen_graph()));
  EXPECT_FALSE(is_hamiltonian(complete_graph(2)));
  EXPECT_TRUE(is_hamiltonian(complete_graph(3)));
}

TEST(Invariants, LongestPathBetween) {
  EXPECT_EQ(longest_path_between(cycle_graph(5), 0, 1), 4);
  EXPECT_EQ(longest_path_between(complete_graph(4), 0, 3), 3);
  const Graph p = petersen_graph();
  const auto [u, v] = p.edges().front();
  EXPECT_EQ(longest_path_between(p, u, v), 8);  // 9 would close a Hamiltonian cycle
  EXPECT_FALSE(longest_path_between(empty_graph(2), 0, 1));
}

TEST(Invariants, LongestPathRespectsRequiredAndWithin) {
  const Graph c6 = cycle_graph(6);
  const auto path = longest_path(c6, 0, 3, c6.vertices(), bit(1));
  ASSERT_TRUE(path);
  EXPECT_EQ(*path, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_FALSE(longest_path(c6, 0, 3, c6.vertices() & ~bit(2) & ~bit(4), 0));
}

TEST(Invariants, CycleThroughEdges) {
  const auto c5 = longest_cycle_through_edges(cycle_graph(5), {{0, 1}});
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->length(), 5);
  const Graph k4 = complete_graph(4);
  const auto pm = longest_cycle_through_edges(k4, {{0, 1}, {2, 3}});
  ASSERT_TRUE(pm);
  EXPECT_EQ(pm->length(), 4);
  EXPECT_TRUE(is_valid_cycle(k4, *pm));
  Graph star(4);
  for (int v = 1; v < 4; ++v) star.add_edge(0, v);
  EXPECT_FALSE(longest_cycle_through_edges(star, {{0, 1}}));
}

TEST(Invariants, CycleContaining) {
  const Graph p = petersen_graph();
  const auto c = longest_cycle_containing(p, bit(0) | bit(5), p.vertices());
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_valid_cycle(p, *c));
  EXPECT_TRUE(is_subset(bit(0) | bit(5), c->vertex_set()));
  EXPECT_EQ(c->length(), 9);
  EXPECT_FALSE(longest_cycle_containing(path_graph(3), bit(0), path_graph(3).vertices()));
}

TEST(Invariants, AgreeWithBruteForceOnConnectedGraphs) {
  for_connected(7, [](const Graph& g) {
    const InvariantBundle b = compute_invariants(g);
    ASSERT_EQ(b.kappa, oracle::kappa(g)) << write_graph6(g);
    ASSERT_EQ(b.alpha, oracle::alpha(g)) << write_graph6(g);
    ASSERT_EQ(b.c, oracle::circumference(g)) << write_graph6(g);
    ASSERT_EQ(connectivity_exhaustive(g), b.kappa);
    ASSERT_EQ(independence_number_exhaustive(g), b.alpha);
    ASSERT_EQ(circumference_dp(g), b.c);
    ASSERT_EQ(b.hamiltonian, b.n >= 3 && b.c == b.n);
  });
}

TEST(Invariants, LongestPathAgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = random_gnp(n, 0.5, rng());
    const int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) v = (v + 1) % n;
    ASSERT_EQ(longest_path_between(g, u, v), oracle::longest_path(g, u, v)) << write_graph6(g);
  }
}

TEST(Invariants, WitnessIsALongestCycle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_gnp(3 + static_cast<int>(rng() % 12), 0.4, rng());
    const Circumference c = circumference(g);
    ASSERT_EQ(c.witness.length(), c.length);
    ASSERT_TRUE(is_valid_cycle(g, c.witness)) << write_graph6(g);
  }
}

TEST(Invariants, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + static_cast<int>(rng() % 8);
    Graph g = random_gnp(n, 0.4, rng());
    const auto before = compute_invariants(g);
    const Graph complement_edges = [&] {
      Graph h(n);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!g.adjacent(a, b)) h.add_edge(a, b);
      return h;
    }();
    const auto missing = complement_edges.edges();
    if (missing.empty()) continue;
    const auto [a, b] = missing[rng() % missing.size()];
    g.add_edge(a, b);
    const auto after = compute_invariants(g);
    EXPECT_GE(after.delta, before.delta);
    EXPECT_GE(after.kappa, before.kappa);
    EXPECT_LE(after.alpha, before.alpha);
    EXPECT_GE(after.c, before.c);
  }
}

TEST(Invariants, ConnectivityAtMostMinDegree) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_gnp(2 + static_cast<int>(rng() % 14), 0.5, rng());
    EXPECT_LE(connectivity(g), min_degree(g));
  }
}

TEST(Invariants, TwoConnectedCycleBound) {
  // Every 2-connected graph has a cycle of length at least min(n, 2 delta).
  std::mt19937_64 rng(17);
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 200; ++i) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const Graph g = random_gnp(n, 0.55, rng());
    if (connectivity(g) < 2) continue;
    ++seen;
    EXPECT_GE(circumference(g).length, std::min(n, 2 * min_degree(g))) << write_graph6(g);
  }
  EXPECT_GT(seen, 50);
}

TEST(Invariants, ZeroBudgetThrows) {
  Budget b{std::chrono::milliseconds{0}};
  EXPECT_THROW(circumference(petersen_graph(), b), BudgetExceeded);
  Budget b2{std::chrono::milliseconds{0}};
  EXPECT_THROW(independence_number(petersen_graph(), b2), BudgetExceeded);
}

TEST(Invariants, LargerGraphsAgreeWithDp) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_gnp(10 + static_cast<int>(rng() % 4), 0.3 + 0.1 * (i % 5), rng());
    if (g.size() == 0) continue;
    EXPECT_EQ(circumference(g).length, circumference_dp(g)) << write_graph6(g);
  }
}
