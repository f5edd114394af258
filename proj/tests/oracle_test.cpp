#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace unimd {
namespace {

TEST(VertexGenerator, Examples) {
  auto c6 = all_pairs_distances(cycle_graph(6));
  EXPECT_TRUE(is_vertex_generator(c6, {0, 1}).ok);
  auto bad = is_vertex_generator(c6, {0, 3});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.failing_pair, (std::pair<Vertex, Vertex>{1, 5}));
  for (const auto& [name, g] : fixtures()) {
    VertexSet all(g.order());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(is_vertex_generator(all_pairs_distances(g), all).ok) << name;
  }
}

TEST(EdgeGenerator, Examples) {
  Graph c5 = cycle_graph(5);
  EXPECT_TRUE(is_edge_generator(all_pairs_distances(c5), c5.edges(), {0, 1}).ok);
  Graph c4 = cycle_graph(4);
  EXPECT_TRUE(is_edge_generator(all_pairs_distances(c4), c4.edges(), {0, 1}).ok);
  Graph tw = fixture("TWINLEAF6");
  auto bad = is_edge_generator(all_pairs_distances(tw), tw.edges(), {6, 8});
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.failing_pair, (std::pair<Edge, Edge>{Edge(0, 1), Edge(0, 5)}));
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_dim(cycle_graph(7)).value, 2);
  EXPECT_EQ(brute_force_dim(corona(6)).value, 3);
  EXPECT_EQ(brute_force_edim(corona(6)).value, 2);
  EXPECT_EQ(brute_force_dim(fixture("TWINLEAF6")).value, 3);
  auto r = brute_force_dim(cycle_graph(7));
  EXPECT_EQ(r.witness_generator, (VertexSet{0, 1}));
  EXPECT_EQ(r.checked_subsets, 7u + 1u);  // all 7 singletons fail, then {0,1}
}

TEST(BruteForce, SizeCap) {
  EXPECT_THROW(brute_force_dim(corona(9)), SizeCapExceeded);
  EXPECT_NO_THROW(brute_force_dim(corona(9), {.size_cap = 18}));
}

TEST(BruteForce, WitnessIsMinimal) {
  for (const Graph& g : testing::small_corpus(7)) {
    auto dm = all_pairs_distances(g);
    auto r = brute_force_dim(g);
    EXPECT_TRUE(is_vertex_generator(dm, r.witness_generator).ok);
    EXPECT_EQ(static_cast<int>(r.witness_generator.size()), r.value);
    for_each_combination(g.order(), r.value - 1, [&](const std::vector<int>& c) {
      EXPECT_FALSE(is_vertex_generator(dm, VertexSet(c.begin(), c.end())).ok);
      return false;
    });
    auto e = brute_force_edim(g);
    EXPECT_TRUE(is_edge_generator(dm, g.edges(), e.witness_generator).ok);
    EXPECT_GE(r.value, 2);
    EXPECT_GE(e.value, 2);
  }
}

TEST(BruteForce, PrunedSearchAgreesWithFullSearch) {
  for (const Graph& g : testing::small_corpus(9)) {
    OracleOptions pruned{.prune = true};
    auto a = brute_force_dim(g), b = brute_force_dim(g, pruned);
    EXPECT_EQ(a.value, b.value);
    EXPECT_LE(b.checked_subsets, a.checked_subsets);
    EXPECT_EQ(brute_force_edim(g).value, brute_force_edim(g, pruned).value);
  }
}

// Generators found by brute force are biactive and branch-resolving.
TEST(BruteForce, MinimumGeneratorsAreBiactiveBranchResolving) {
  for (const Graph& g : testing::small_corpus(8)) {
    auto d = decompose(g);
    for (Metric metric : {Metric::Vertex, Metric::Edge}) {
      const int value = metric == Metric::Vertex ? brute_force_dim(g).value : brute_force_edim(g).value;
      for_each_combination(g.order(), value, [&](const std::vector<int>& c) {
        VertexSet s(c.begin(), c.end());
        bool gen = metric == Metric::Vertex ? is_vertex_generator(d.distances, s).ok
                                            : is_edge_generator(d.distances, g.edges(), s).ok;
        if (gen) {
          EXPECT_TRUE(is_biactive(d, s));
          EXPECT_TRUE(is_branch_resolving(d, s));
        }
        return false;
      });
    }
  }
}

TEST(OracleProperties, SupersetsOfGeneratorsAreGenerators) {
  std::mt19937_64 rng(11);
  for (const Graph& g : testing::small_corpus(8)) {
    auto dm = all_pairs_distances(g);
    VertexSet s = brute_force_dim(g).witness_generator;
    VertexSet t = brute_force_edim(g).witness_generator;
    for (int step = 0; step < 3; ++step) {
      s.push_back(static_cast<Vertex>(rng() % g.order()));
      t.push_back(static_cast<Vertex>(rng() % g.order()));
      EXPECT_TRUE(is_vertex_generator(dm, normalized(s)).ok);
      EXPECT_TRUE(is_edge_generator(dm, g.edges(), normalized(t)).ok);
    }
  }
}

TEST(Combinations, LexicographicOrder) {
  std::vector<std::vector<int>> seen;
  for_each_combination(4, 2, [&](const std::vector<int>& c) {
    seen.push_back(c);
    return false;
  });
  EXPECT_EQ(seen, (std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  int empty = 0;
  for_each_combination(3, 0, [&](const std::vector<int>&) { return ++empty, false; });
  EXPECT_EQ(empty, 1);
}

}  // namespace
}  // namespace unimd
