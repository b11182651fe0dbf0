#include "combrec/corpus.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "combrec/recognizer.h"
#include "oracle.h"

namespace combrec {
namespace {

const Graph kP4(4, {{0, 1}, {1, 2}, {2, 3}});

std::uint64_t Factorial(int n) { return n <= 1 ? 1 : n * Factorial(n - 1); }

TEST(GenerateComb, Examples) {
  CombParams p4;
  p4.x = {2};
  p4.m = {2};
  p4.a = {0};
  p4.y = {0, 0};
  const GeneratedComb g1 = GenerateComb(p4);
  EXPECT_EQ(CanonicalCode(g1.graph), CanonicalCode(kP4));
  EXPECT_TRUE(ValidateComb(g1.graph, g1.decomposition).empty());

  CombParams star;
  star.n = 1;
  star.a = {0, 3};
  star.x = {1, 0};
  star.m = {0};
  star.y = {0, 0};
  const GeneratedComb g2 = GenerateComb(star);
  EXPECT_EQ(CanonicalCode(g2.graph), CanonicalCode(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));

  CombParams empty;
  empty.a = {0};
  empty.x = {0};
  empty.m = {0};
  empty.y = {0, 0};
  EXPECT_EQ(GenerateComb(empty).graph, Graph(0));
}

TEST(GenerateComb, InvalidParams) {
  CombParams p;
  p.n = 1;
  p.a = {0, 0};
  p.x = {1, 0};
  p.m = {0};
  p.y = {0, 0};
  EXPECT_FALSE(CheckParams(p).empty());
  EXPECT_THROW(GenerateComb(p), std::invalid_argument);
  p.a = {0, 1};
  EXPECT_TRUE(CheckParams(p).empty());
  p.m = {2};
  p.x = {1, 0};  // |M_1| = 2 but |X_1| = 1
  EXPECT_FALSE(CheckParams(p).empty());
  p.m = {0};
  p.k0 = 2;
  EXPECT_FALSE(CheckParams(p).empty());
  p.k0 = 1;
  p.y = {0};
  EXPECT_FALSE(CheckParams(p).empty());
}

TEST(GenerateComb, SeedOnlyRelabels) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    CombParams p = RandomCombParams(rng, 9);
    const Graph base = GenerateComb(p).graph;
    p.seed += 17;
    const GeneratedComb other = GenerateComb(p);
    EXPECT_EQ(CanonicalCode(base), CanonicalCode(other.graph));
    EXPECT_TRUE(ValidateComb(other.graph, other.decomposition).empty());
  }
}

TEST(RandomCombParams, StaysWithinBudget) {
  std::mt19937_64 rng(2);
  int largest = 0;
  for (int i = 0; i < 500; ++i) {
    const CombParams p = RandomCombParams(rng, 200);
    ASSERT_TRUE(CheckParams(p).empty());
    const int v = GenerateComb(p).graph.vertex_count();
    ASSERT_LE(v, 200);
    largest = std::max(largest, v);
  }
  EXPECT_GE(largest, 150);
}

TEST(RandomGraph, Examples) {
  EXPECT_EQ(RandomGraph(5, 0.0, 3), Graph(5));
  EXPECT_EQ(RandomGraph(4, 1.0, 3), Complement(Graph(4)));
  EXPECT_EQ(RandomGraph(6, 0.5, 42), RandomGraph(6, 0.5, 42));
  EXPECT_THROW(RandomGraph(3, 1.5, 0), std::invalid_argument);
  EXPECT_THROW(RandomGraph(3, -0.1, 0), std::invalid_argument);
}

TEST(Canonicalize, Examples) {
  const CanonicalForm k3 = Canonicalize(Complement(Graph(3)));
  EXPECT_EQ(k3.code, std::string("\x03\xe0", 2));
  EXPECT_EQ(k3.automorphisms, 6u);
  EXPECT_EQ(Canonicalize(kP4).automorphisms, 2u);
  EXPECT_EQ(Canonicalize(PatternGraph(PatternKind::kC5)).automorphisms, 10u);
  EXPECT_EQ(Canonicalize(Graph(4)).automorphisms, 24u);
  EXPECT_EQ(CanonicalCode(kP4), CanonicalCode(Graph(4, {{2, 0}, {0, 3}, {3, 1}})));
  EXPECT_NE(CanonicalCode(kP4), CanonicalCode(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_THROW(Canonicalize(Graph(kMaxCanonicalOrder + 1)), std::invalid_argument);
}

TEST(Canonicalize, InvariantUnderRelabeling) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = RandomGraph(n, 0.5, rng());
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    const Graph h(n, edges);
    EXPECT_EQ(Canonicalize(g).code, Canonicalize(h).code);
    EXPECT_EQ(Canonicalize(g).automorphisms, Canonicalize(h).automorphisms);
  }
}

TEST(EnumerateGraphs, Counts) {
  const std::size_t known[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(GraphsUpToIso(n).size(), known[n]) << n;
  int labeled = 0;
  EnumerateGraphs(2, false, [&](const Graph&) { ++labeled; });
  EXPECT_EQ(labeled, 2);
  std::set<Graph, bool (*)(const Graph&, const Graph&)> seen(
      [](const Graph& a, const Graph& b) { return a.edges() < b.edges(); });
  EnumerateGraphs(4, false, [&](const Graph& g) { seen.insert(g); });
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_THROW(EnumerateGraphs(kMaxEnumerationOrder + 1, true, [](const Graph&) {}),
               std::invalid_argument);
}

// Orbit-stabilizer: the labeled graphs split into classes of size n!/|Aut|.
TEST(EnumerateGraphs, ClassSizesSumToLabeledCount) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t sum = 0;
    std::set<std::string> codes;
    for (const Graph& g : GraphsUpToIso(n)) {
      const CanonicalForm c = Canonicalize(g);
      sum += Factorial(n) / c.automorphisms;
      codes.insert(c.code);
    }
    EXPECT_EQ(sum, std::uint64_t{1} << (n * (n - 1) / 2)) << n;
    EXPECT_EQ(codes.size(), GraphsUpToIso(n).size());
  }
}

TEST(Census, RowsMatchOracle) {
  const auto rows = Census(6);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], (CensusRow{1, 1, 1, 1, 1}));
  EXPECT_EQ(rows[3], (CensusRow{4, 11, 9, 8, 9}));
  for (const CensusRow& r : rows) {
    CensusRow expect{r.n, 0, 0, 0, 0};
    for (const Graph& g : oracle::Classes(r.n)) {
      ++expect.total;
      expect.split += oracle::IsSplit(g);
      expect.threshold += oracle::IsThreshold(g);
      expect.comb += oracle::IsComb(g);
    }
    EXPECT_EQ(r, expect);
    EXPECT_LE(r.threshold, r.comb);
    EXPECT_LE(r.comb, r.split);
    EXPECT_LE(r.split, r.total);
  }
  EXPECT_EQ(CensusCsv({rows[0], rows[1]}), "n,total,split,threshold,comb\n1,1,1,1,1\n2,2,2,2,2\n");
  EXPECT_THROW(Census(8), std::invalid_argument);
}

TEST(BruteForceCombLabel, Examples) {
  const auto p4 = BruteForceCombLabel(kP4);
  ASSERT_TRUE(p4.has_value());
  EXPECT_TRUE(ValidateComb(kP4, *p4).empty());
  EXPECT_FALSE(BruteForceCombLabel(PatternGraph(PatternKind::kC4)).has_value());
  const Graph k3 = Complement(Graph(3));
  const auto k = BruteForceCombLabel(k3);
  ASSERT_TRUE(k.has_value());
  EXPECT_TRUE(k->StableSide().empty());
  EXPECT_TRUE(ValidateComb(k3, *k).empty());
  EXPECT_THROW(BruteForceCombLabel(Graph(7)), std::invalid_argument);
}

TEST(BruteForceCombLabel, ThreeWayAgreementUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : GraphsUpToIso(n)) {
      const bool brute = BruteForceCombLabel(g).has_value();
      EXPECT_EQ(brute, oracle::IsComb(g));
      EXPECT_EQ(brute, IsComb(g));
    }
  }
}

// The 3-sun is a comb only through a thick level.
TEST(BruteForceCombLabel, SunNeedsThickLevel) {
  const Graph sun(6, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}, {4, 0}, {4, 2}, {5, 0}, {5, 1}});
  EXPECT_TRUE(oracle::IsComb(sun));
  EXPECT_TRUE(BruteForceCombLabel(sun).has_value());
  EXPECT_FALSE(BruteForceCombLabel(sun, 6, false).has_value());
}

}  // namespace
}  // namespace combrec
