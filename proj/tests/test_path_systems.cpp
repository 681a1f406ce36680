#include <gtest/gtest.h>

#include <random>

#include "cyclebound/enumerate.hpp"
#include "cyclebound/families.hpp"
#include "cyclebound/graph6.hpp"
#include "cyclebound/path_systems.hpp"
#include "oracles.hpp"

using namespace cyclebound;

namespace {

Fragment fragment_of(const Graph& g, VertexSet a) {
  Fragment f;
  f.vertices = a;
  f.cutset = g.neighborhood(a);
  f.complement = g.vertices() & ~a & ~f.cutset;
  return f;
}

bool valid_system(const Graph& g, const Fragment& f, const PathSystem& ps) {
  VertexSet used = 0;
  for (const auto& p : ps.paths) {
    if (p.size() < 2) return false;
    if (!contains(f.cutset, p.front()) || !contains(f.cutset, p.back())) return false;
    if (p.front() > p.back()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!contains(f.vertices | f.cutset, p[i]) || contains(used, p[i])) return false;
      used |= bit(p[i]);
      if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
    }
  }
  return true;
}

}  // namespace

TEST(PathSystems, FourCycleSingleVertexSide) {
  const Graph c4 = cycle_graph(4);
  const PathSystem ps = max_path_system(c4, fragment_of(c4, bit(1)));
  EXPECT_EQ(ps.total(), 3);
  EXPECT_EQ(ps.m(), 1);
  EXPECT_EQ(ps.paths.front(), (std::vector<int>{0, 1, 2}));
}

TEST(PathSystems, CliqueJoinThreeBlocks) {
  const Graph g = build(parse_family("4K_2+K_3"));
  const Fragment f = fragment_of(g, low_mask(6));
  const PathSystem ps = max_path_system(g, f);
  EXPECT_EQ(ps.m(), 1);
  EXPECT_EQ(ps.total(), 7);
  EXPECT_TRUE(valid_system(g, f, ps));
  for (const auto& other : all_max_path_systems(g, f)) {
    EXPECT_EQ(other.total(), 7);
    EXPECT_TRUE(valid_system(g, f, other));
  }
}

TEST(PathSystems, CombinedCyclesOnCliqueJoins) {
  const Graph g = build(parse_family("4K_2+K_3"));
  const auto cat = enumerate_fragments(g);
  const auto cc = combined_cycles(g, cat.fragments.front());
  ASSERT_TRUE(cc);
  EXPECT_EQ(cc->c_star.length(), 7);
  EXPECT_EQ(cc->c_star_star.length(), 9);

  const Graph h = build(parse_family("5K_2+K_4"));
  const auto cc2 = combined_cycles(h, enumerate_fragments(h).fragments.front());
  ASSERT_TRUE(cc2);
  EXPECT_EQ(cc2->c_star_star.length(), 12);
}

TEST(PathSystems, PetersenBoundedByCircumference) {
  const Graph p = petersen_graph();
  for (const auto& f : endfragments(p)) {
    const auto cc = combined_cycles(p, f);
    ASSERT_TRUE(cc);
    EXPECT_LE(cc->c_star_star.length(), 9);
  }
}

TEST(PathSystems, UniteFlagsVirtualJoints) {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {2, 3}});
  PathSystem ps;
  ps.paths = {{0, 1, 2}, {3, 4, 5}};
  UnitedPath u = unite(g, ps);
  EXPECT_EQ(u.vertices, (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(u.virtual_joint, (std::vector<bool>{false, false, false, false, false}));
  g.remove_edge(2, 3);
  u = unite(g, ps);
  EXPECT_TRUE(u.virtual_joint[2]);
}

TEST(PathSystems, MatchingCycle) {
  const Graph g = join(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(4));
  const Fragment f = fragment_of(g, low_mask(3));
  const auto sets = independent_edge_sets(g, f.cutset);
  // K_4 has 1 empty set, 6 single edges and 3 perfect matchings.
  EXPECT_EQ(sets.size(), 10u);
  const auto c = cycle_through_matching(g, f, {{6, 7}, {8, 9}});
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_valid_cycle(g, *c));
  EXPECT_TRUE(is_subset(c->vertex_set(), f.vertices | f.cutset));
  const auto single = cycle_through_matching(g, f, {});
  ASSERT_TRUE(single);
  EXPECT_EQ(single->length(), 1);
}

TEST(PathSystems, MatchingValidation) {
  const Graph g = join(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(4));
  const Fragment f = fragment_of(g, low_mask(3));
  EXPECT_THROW(cycle_through_matching(g, f, {{6, 7}, {7, 8}}), std::invalid_argument);
  EXPECT_THROW(cycle_through_matching(g, f, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(cycle_through_matching(g, f, {{0, 6}}), std::invalid_argument);
}

TEST(PathSystems, OversizeSideIsInfeasible) {
  const Graph g = clique_join(2, 17, 1);
  const Fragment f = fragment_of(g, low_mask(17));
  EXPECT_THROW(all_max_path_systems(g, f), SearchInfeasible);
}

TEST(PathSystems, MaximumAgreesWithBruteForce) {
  int checked = 0;
  for (int n = 4; n <= 8; ++n) {
    auto s = GraphStream::enumerate(n, true, true);
    while (auto g = s.next()) {
      const FragmentCatalog cat = enumerate_fragments(*g);
      for (const auto& f : cat.fragments) {
        if (count(f.vertices | f.cutset) > 10) continue;
        const PathSystem ps = max_path_system(*g, f);
        ASSERT_TRUE(valid_system(*g, f, ps)) << write_graph6(*g);
        ASSERT_EQ(ps.total(), oracle::max_path_system_total(*g, f.vertices | f.cutset, f.cutset))
            << write_graph6(*g) << " A=" << f.vertices;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(PathSystems, AllMaximaShareTheTotalAndAreSorted) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_gnp(5 + static_cast<int>(rng() % 5), 0.5, rng());
    if (!g.is_connected()) continue;
    for (const auto& f : enumerate_fragments(g).fragments) {
      const auto all = all_max_path_systems(g, f);
      ASSERT_FALSE(all.empty());
      for (const auto& ps : all) {
        ASSERT_EQ(ps.total(), all.front().total());
        ASSERT_GE(ps.m(), all.front().m());
        ASSERT_TRUE(valid_system(g, f, ps));
      }
    }
  }
}

TEST(PathSystems, CombinedCyclesAreValid) {
  std::mt19937_64 rng(23);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    const Graph g = random_gnp(5 + static_cast<int>(rng() % 5), 0.55, rng());
    if (!g.is_connected() || connectivity(g) < 2) continue;
    const int c = circumference(g).length;
    for (const auto& f : endfragments(g)) {
      const auto cc = combined_cycles(g, f);
      if (!cc) continue;
      ++seen;
      ASSERT_TRUE(is_valid_cycle(g, cc->c_star)) << write_graph6(g);
      ASSERT_TRUE(is_valid_cycle(g, cc->c_star_star)) << write_graph6(g);
      ASSERT_TRUE(is_subset(cc->c_star.vertex_set(), cc->c_star_star.vertex_set()));
      ASSERT_TRUE(is_subset(cc->up.vertex_set(), cc->c_star.vertex_set()));
      ASSERT_EQ(cc->c_star.length(), cc->up.total() + count(cc->down.vertex_set & ~cc->up.vertex_set()));
      ASSERT_LE(cc->c_star_star.length(), c);
    }
  }
  EXPECT_GT(seen, 20);
}
