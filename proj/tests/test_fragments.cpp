#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cyclebound/enumerate.hpp"
#include "cyclebound/families.hpp"
#include "cyclebound/graph6.hpp"
#include "cyclebound/fragments.hpp"
#include "cyclebound/invariants.hpp"
#include "oracles.hpp"

using namespace cyclebound;

TEST(Fragments, CycleFive) {
  const Graph c5 = cycle_graph(5);
  const FragmentCatalog cat = enumerate_fragments(c5);
  EXPECT_EQ(cat.kappa, 2);
  EXPECT_EQ(cat.fragments.size(), 10u);
  const auto ends = endfragments(cat);
  ASSERT_EQ(ends.size(), 5u);
  for (const auto& f : ends) EXPECT_EQ(count(f.vertices), 1);
  const CutsetList cuts = minimum_cutsets(c5);
  EXPECT_FALSE(cuts.complete);
  ASSERT_EQ(cuts.cutsets.size(), 5u);
  for (VertexSet t : cuts.cutsets) {
    const auto vs = to_list(t);
    EXPECT_FALSE(c5.adjacent(vs[0], vs[1]));
  }
}

TEST(Fragments, CycleFour) {
  const auto ends = endfragments(cycle_graph(4));
  ASSERT_EQ(ends.size(), 4u);
  for (const auto& f : ends) EXPECT_EQ(count(f.vertices), 1);
}

TEST(Fragments, CliqueJoinFragmentsAreSubUnions) {
  const Graph g = build(parse_family("4K_2+K_3"));
  const FragmentCatalog cat = enumerate_fragments(g);
  EXPECT_EQ(cat.kappa, 3);
  // Nonempty proper unions of the four K_2 blocks.
  EXPECT_EQ(cat.fragments.size(), 14u);
  for (const auto& f : cat.fragments) {
    EXPECT_EQ(f.cutset, bit(8) | bit(9) | bit(10));
    EXPECT_EQ(count(f.vertices) % 2, 0);
  }
  EXPECT_EQ(endfragments(cat).size(), 4u);
}

TEST(Fragments, CompleteGraphHasNone) {
  const Graph k = complete_graph(5);
  EXPECT_TRUE(minimum_cutsets(k).complete);
  EXPECT_TRUE(enumerate_fragments(k).fragments.empty());
  EXPECT_TRUE(endfragments(k).empty());
}

TEST(Fragments, ComplementIsInvolution) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_gnp(4 + static_cast<int>(rng() % 8), 0.45, rng());
    if (!g.is_connected()) continue;
    const FragmentCatalog cat = enumerate_fragments(g);
    for (const auto& f : cat.fragments) {
      const Fragment h = fragment_complement(g, f);
      ASSERT_TRUE(is_valid_fragment(g, h, cat.kappa));
      ASSERT_EQ(fragment_complement(g, h), f);
      ASSERT_EQ(h.vertices, f.complement);
    }
  }
}

TEST(Fragments, CatalogAgreesWithSubsetScan) {
  for (int n = 2; n <= 7; ++n) {
    auto s = GraphStream::enumerate(n, true, true);
    while (auto g = s.next()) {
      const FragmentCatalog cat = enumerate_fragments(*g);
      const int k = connectivity(*g);
      if (k == n - 1) {
        ASSERT_TRUE(cat.fragments.empty());
        continue;
      }
      const auto raw = oracle::fragments(*g, k);
      ASSERT_EQ(cat.fragments.size(), raw.size()) << write_graph6(*g);
      std::set<VertexSet> got, want, got_end;
      for (std::size_t i = 0; i < cat.fragments.size(); ++i) {
        const Fragment& f = cat.fragments[i];
        ASSERT_TRUE(is_valid_fragment(*g, f, k));
        got.insert(f.vertices);
        if (cat.endfragment[i]) got_end.insert(f.vertices);
      }
      for (const auto& r : raw) want.insert(r.x);
      ASSERT_EQ(got, want) << write_graph6(*g);
      ASSERT_EQ(got_end, oracle::endfragments(raw)) << write_graph6(*g);
    }
  }
}

TEST(Fragments, OrderedBySizeThenMask) {
  const FragmentCatalog cat = enumerate_fragments(petersen_graph());
  for (std::size_t i = 1; i < cat.fragments.size(); ++i) {
    const auto& a = cat.fragments[i - 1].vertices;
    const auto& b = cat.fragments[i].vertices;
    EXPECT_TRUE(count(a) < count(b) || (count(a) == count(b) && a < b));
  }
}

TEST(Fragments, CatalogLimit) {
  EXPECT_THROW(enumerate_fragments(build(parse_family("4K_2+K_3")), 3), CatalogLimitExceeded);
}

TEST(Fragments, EndfragmentVertexRemovalKeepsConnectivityWhenDegreeLarge) {
  // With 2 delta > 3 kappa - 2 deleting an endfragment vertex never lowers kappa.
  int seen = 0;
  for (int n = 4; n <= 8; ++n) {
    auto s = GraphStream::enumerate(n, true, true);
    while (auto g = s.next()) {
      const int k = connectivity(*g);
      if (k == n - 1 || k == 0 || 2 * min_degree(*g) <= 3 * k - 2) continue;
      for (const auto& f : endfragments(*g)) {
        for (int v : to_list(f.vertices)) {
          Graph h = *g;
          for (int w : to_list(h.neighbors(v))) h.remove_edge(v, w);
          const Graph without = h.induced(h.vertices() & ~bit(v));
          ASSERT_NE(connectivity(without), k - 1) << write_graph6(*g) << " v=" << v;
          ++seen;
        }
      }
    }
  }
  EXPECT_GT(seen, 0);
}
