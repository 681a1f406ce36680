#include <gtest/gtest.h>

#include <random>

#include "cyclebound/schemes.hpp"
#include "oracles.hpp"

using namespace cyclebound;

namespace {

long bound(const char* lemma, std::vector<int> sizes, int r) {
  const SchemeLemma l = parse_scheme_lemma(lemma);
  return scheme_bound({l, std::move(sizes), r, lemma_host(l)});
}

}  // namespace

TEST(Schemes, Distance) {
  EXPECT_EQ(host_distance(HostKind::kCycle, 6, 0, 5), 1);
  EXPECT_EQ(host_distance(HostKind::kPath, 6, 0, 5), 5);
  EXPECT_EQ(host_distance(HostKind::kCycle, 7, 1, 4), 3);
}

TEST(Schemes, Validity) {
  SchemeInstance inst{HostKind::kCycle, 6, {{0, 2}, {4}}, 2};
  EXPECT_TRUE(is_scheme(inst));
  EXPECT_TRUE(is_nontrivial(inst));
  inst.r = 3;
  EXPECT_FALSE(is_scheme(inst));  // 4 and 0 are 2 apart on the 6-cycle
  inst.host = HostKind::kPath;
  EXPECT_FALSE(is_scheme(inst));  // 2 and 4
  inst.classes = {{0, 1}, {4}};
  inst.r = 2;
  EXPECT_FALSE(is_scheme(inst));  // adjacent members of one class
  inst.classes = {{0}, {0}};
  EXPECT_TRUE(is_scheme(inst));   // shared positions carry no gap
  EXPECT_FALSE(is_nontrivial(inst));
  inst.classes = {{7}};
  EXPECT_THROW(is_scheme(inst), SchemeError);
  inst.classes = {{0}};
  inst.r = 1;
  EXPECT_THROW(is_scheme(inst), SchemeError);
  SchemeInstance bad{HostKind::kPath, 3, {{0, 1}}, 2};
  EXPECT_THROW(is_nontrivial(bad), SchemeError);
}

TEST(Schemes, SdrMatchesExhaustiveChoice) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 2000; ++i) {
    const int p = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(p));
    for (auto& s : sets) {
      const int k = static_cast<int>(rng() % 4);
      for (int j = 0; j < k; ++j) {
        const int x = static_cast<int>(rng() % 6);
        if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
      }
    }
    ASSERT_EQ(has_sdr(sets), oracle::sdr(sets));
  }
}

TEST(Schemes, Names) {
  for (SchemeLemma l : kAllSchemeLemmas) EXPECT_EQ(parse_scheme_lemma(scheme_lemma_name(l)), l);
  EXPECT_EQ(parse_scheme_lemma("LemA"), SchemeLemma::kA);
  EXPECT_THROW(parse_scheme_lemma("L9"), SchemeError);
  EXPECT_EQ(parse_host("cycle"), HostKind::kCycle);
  EXPECT_EQ(parse_host("path"), HostKind::kPath);
}

TEST(Schemes, BoundExamples) {
  EXPECT_EQ(bound("L4", {1, 3}, 4), 7);
  EXPECT_EQ(bound("A", {4, 4}, 4), 16);
  EXPECT_EQ(bound("A", {2, 2}, 2), 4);
  EXPECT_EQ(bound("L6", {1, 1, 3}, 2), 5);
  EXPECT_EQ(bound("L8", {1, 1, 1, 4}, 3), 10);
  EXPECT_EQ(bound("L3", {1, 1}, 3), 1);
}

TEST(Schemes, InadmissibleQueries) {
  EXPECT_NE(query_violation({SchemeLemma::kL6, {1, 1, 2}, 3, HostKind::kPath}), "");
  EXPECT_NE(query_violation({SchemeLemma::kA, {1, 1}, 3, HostKind::kPath}), "");
  EXPECT_NE(query_violation({SchemeLemma::kA, {1, 1, 1}, 3, HostKind::kCycle}), "");
  EXPECT_NE(query_violation({SchemeLemma::kL1, {2, 1, 1}, 3, HostKind::kCycle}), "");
  EXPECT_NE(query_violation({SchemeLemma::kA, {1, 0}, 3, HostKind::kCycle}), "");
  EXPECT_NE(query_violation({SchemeLemma::kA, {1, 1}, 1, HostKind::kCycle}), "");
  EXPECT_EQ(query_violation({SchemeLemma::kL6, {1, 1, 3}, 3, HostKind::kPath}), "");
  EXPECT_THROW(scheme_bound({SchemeLemma::kL6, {1, 1, 2}, 3, HostKind::kPath}), SchemeError);
}

TEST(Schemes, OracleExamples) {
  const auto cyc = min_host_bruteforce({1, 1}, 2, HostKind::kCycle);
  ASSERT_TRUE(cyc);
  EXPECT_EQ(cyc->length, 4);
  const auto path = min_host_bruteforce({1, 1}, 2, HostKind::kPath);
  ASSERT_TRUE(path);
  EXPECT_EQ(path->length, 3);
  EXPECT_FALSE(min_host_bruteforce({4, 4, 4}, 5, HostKind::kCycle, 8));
}

TEST(Schemes, OraclePlacementIsNontrivial) {
  for (HostKind h : {HostKind::kCycle, HostKind::kPath})
    for (int r = 2; r <= 4; ++r)
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          const auto inst = min_host_bruteforce({a, b}, r, h);
          ASSERT_TRUE(inst);
          EXPECT_TRUE(is_scheme(*inst));
          EXPECT_TRUE(is_nontrivial(*inst));
          EXPECT_EQ(inst->classes[0].size(), static_cast<std::size_t>(a));
          EXPECT_EQ(inst->classes[1].size(), static_cast<std::size_t>(b));
        }
}

TEST(Schemes, OracleAgreesWithSubsetAssignment) {
  for (bool cycle : {true, false})
    for (int r = 2; r <= 4; ++r)
      for (const std::vector<int>& sizes :
           std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2},
                                         {1, 1, 1, 1}, {1, 1, 1, 2}}) {
        const auto got = min_host_bruteforce(sizes, r, cycle ? HostKind::kCycle : HostKind::kPath, 10);
        const auto want = oracle::min_host(sizes, r, cycle, 10);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (got) ASSERT_EQ(got->length, *want) << cycle << " r=" << r << " sizes[0]=" << sizes[0];
      }
}

TEST(Schemes, BoundsNeverExceedMinimalHosts) {
  for (SchemeLemma l : kAllSchemeLemmas) {
    const int p = lemma_class_count(l);
    for (int r = 2; r <= 4; ++r) {
      std::vector<int> sizes(static_cast<std::size_t>(p), 1);
      for (int last = 1; last <= 4; ++last) {
        sizes.back() = last;
        const BoundQuery q{l, sizes, r, lemma_host(l)};
        if (!query_violation(q).empty()) continue;
        const auto inst = min_host_bruteforce(sizes, r, q.host, 12);
        if (inst) EXPECT_GE(inst->length, scheme_bound(q)) << scheme_lemma_name(l) << " r=" << r;
      }
    }
  }
}
