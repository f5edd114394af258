#include <gtest/gtest.h>

#include "support.hpp"

namespace unimd {
namespace {

LandmarkContext ctx_for(const Graph& g, VertexSet s) { return build_context(decompose(g), std::move(s)); }

std::vector<int> indices(const std::vector<ConfigHit>& hits) {
  std::vector<int> out;
  for (const auto& h : hits) out.push_back(h.index);
  return out;
}

TEST(DetectA, Examples) {
  EXPECT_TRUE(detect_A(ctx_for(fixture("TWINLEAF6"), {6, 8})));
  EXPECT_FALSE(detect_A(ctx_for(corona(6), {6, 8})));
  for (VertexSet s : {VertexSet{0, 1}, VertexSet{0, 2}, VertexSet{1, 3}})
    EXPECT_FALSE(detect_A(ctx_for(cycle_graph(5), s)));
}

TEST(DetectB, Examples) {
  auto b = detect_B(ctx_for(corona(6), {6, 2}));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->index, 2);
  EXPECT_EQ(b->thread->vertices, std::vector<Vertex>{8});
  EXPECT_FALSE(detect_B(ctx_for(corona(6), {6, 8})));
  auto c7 = ctx_for(corona(7), {7, 10});
  EXPECT_EQ(c7.k, 3);
  EXPECT_FALSE(detect_B(c7));
}

TEST(DetectC, Examples) {
  auto c = detect_C(ctx_for(corona(6), {6, 8}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->index, 1);
  EXPECT_EQ(*c->twice_j, 8);  // j = 4
  // Corona of C_10 with leaves at v_0 and v_4: the free leaves at v_1..v_3 all give C.
  EXPECT_EQ(indices(hits_C(ctx_for(corona(10), {10, 14}))), (std::vector<int>{1, 2, 3}));
  EXPECT_FALSE(detect_C(ctx_for(cycle_graph(6), {0, 2})));
}

TEST(DetectD, Examples) {
  auto ctx = ctx_for(fixture("PENT3"), {5, 6});
  auto d = detect_D(ctx);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->index, 2);
  EXPECT_EQ(d->thread->vertices, std::vector<Vertex>{7});
  EXPECT_FALSE(detect_D(ctx_for(corona(7), {7, 10})));
}

TEST(DetectE, Examples) {
  auto e = detect_E(ctx_for(corona(7), {7, 10}));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->index, 1);
  EXPECT_FALSE(detect_E(ctx_for(corona(6), {6, 8})));
  EXPECT_FALSE(detect_E(ctx_for(cycle_graph(7), {0, 3})));
}

TEST(DetectE, EvenCycleNeedsPartnerThread) {
  // C_8 with a length-3 thread at v_1 only; S = {v_0, v_2}: k = 2, j = 4 + 2 - 1 = 5 has no thread.
  Graph g = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n1 8\n8 9\n9 10");
  EXPECT_FALSE(detect_E(ctx_for(g, {0, 2})));
  // Adding a leaf at v_5 supplies the partner.
  Graph h = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n1 8\n8 9\n9 10\n5 11");
  auto e = detect_E(ctx_for(h, {0, 2}));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->index, 1);
  auto ctx = ctx_for(h, {0, 2});
  auto r = analyze_configurations(ctx);
  EXPECT_EQ(r.edge_witness, (std::pair<Edge, Edge>{Edge(9, 10), Edge(5, 11)}));
  EXPECT_TRUE(same_edge_vector(decompose(h).distances, {0, 2}, r.edge_witness->first, r.edge_witness->second));
}

TEST(VertexWitness, Examples) {
  {
    auto ctx = ctx_for(fixture("TWINLEAF6"), {6, 8});
    auto r = analyze_configurations(ctx);
    EXPECT_EQ(r.vertex_witness, (std::pair<Vertex, Vertex>{1, 5}));
    auto dm = all_pairs_distances(fixture("TWINLEAF6"));
    EXPECT_EQ(dm(1, 6), 2);
    EXPECT_EQ(dm(1, 8), 3);
    EXPECT_TRUE(same_vertex_vector(dm, {6, 8}, 1, 5));
  }
  {
    auto r = analyze_configurations(ctx_for(corona(6), {6, 2}));
    EXPECT_EQ(r.vertex_witness, (std::pair<Vertex, Vertex>{8, 3}));
  }
  {
    auto r = analyze_configurations(ctx_for(corona(6), {6, 8}));
    EXPECT_EQ(r.vertex_witness, (std::pair<Vertex, Vertex>{7, 4}));
    auto dm = all_pairs_distances(corona(6));
    EXPECT_EQ(dm(7, 6), 3);
    EXPECT_EQ(dm(4, 8), 3);
  }
  EXPECT_THROW(vertex_witness(ctx_for(corona(7), {7, 10}), ConfigurationReport{}), ConfigError);
}

TEST(VertexWitness, ConfigurationCAtAntipodalLandmarks) {
  // k = g/2 puts the C pair on the cycle itself.
  auto ctx = ctx_for(parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n1 6"), {0, 3});
  auto hits = hits_C(ctx);
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits.front().index, 1);
  ConfigurationReport only;
  only.C = hits.front();
  EXPECT_EQ(vertex_witness(ctx, only), (std::pair<Vertex, Vertex>{1, 5}));

  // At the active ends the pair collapses to the one from A.
  auto c4 = ctx_for(fixture("C4LL"), {0, 2});
  for (const auto& hit : hits_C(c4)) {
    only.C = hit;
    auto [x, y] = vertex_witness(c4, only);
    EXPECT_NE(x, y);
    EXPECT_TRUE(same_vertex_vector(decompose(fixture("C4LL")).distances, {0, 2}, x, y));
  }
}

TEST(EdgeWitness, Examples) {
  {
    auto r = analyze_configurations(ctx_for(fixture("TWINLEAF6"), {6, 8}));
    EXPECT_EQ(r.edge_witness, (std::pair<Edge, Edge>{Edge(0, 1), Edge(0, 5)}));
  }
  {
    auto r = analyze_configurations(ctx_for(corona(7), {7, 10}));
    ASSERT_FALSE(r.A);
    ASSERT_FALSE(r.D);
    EXPECT_EQ(r.edge_witness, (std::pair<Edge, Edge>{Edge(1, 8), Edge(5, 6)}));
    auto dm = all_pairs_distances(corona(7));
    EXPECT_EQ(vertex_edge_distance(dm, Edge(1, 8), 7), 2);
    EXPECT_EQ(vertex_edge_distance(dm, Edge(1, 8), 10), 3);
    EXPECT_EQ(vertex_edge_distance(dm, Edge(5, 6), 7), 2);
    EXPECT_EQ(vertex_edge_distance(dm, Edge(5, 6), 10), 3);
  }
  {
    auto r = analyze_configurations(ctx_for(fixture("PENT3"), {5, 6}));
    EXPECT_EQ(r.edge_witness, (std::pair<Edge, Edge>{Edge(2, 7), Edge(2, 3)}));
  }
  EXPECT_THROW(edge_witness(ctx_for(corona(6), {6, 8}), ConfigurationReport{}), ConfigError);
}

// Necessity: every detected configuration yields a pair that S does not distinguish.
// Sufficiency: no configuration means S is a generator.
TEST(ConfigurationProperties, SoundAndCompleteOnCorpus) {
  for (const Graph& g : testing::small_corpus(8)) {
    auto d = decompose(g);
    for (const VertexSet& s : testing::minimal_biactive_branch_resolving_sets(d)) {
      auto r = analyze_configurations(build_context(d, s));
      if (r.blocks_vertex()) {
        ASSERT_TRUE(r.vertex_witness);
        EXPECT_NE(r.vertex_witness->first, r.vertex_witness->second);
        EXPECT_TRUE(same_vertex_vector(d.distances, s, r.vertex_witness->first, r.vertex_witness->second));
      } else {
        EXPECT_TRUE(is_vertex_generator(d.distances, s).ok) << to_edge_list(g);
      }
      if (r.blocks_edge()) {
        ASSERT_TRUE(r.edge_witness);
        EXPECT_NE(r.edge_witness->first, r.edge_witness->second);
        EXPECT_GE(g.edge_index(r.edge_witness->first), 0);
        EXPECT_GE(g.edge_index(r.edge_witness->second), 0);
        EXPECT_TRUE(same_edge_vector(d.distances, s, r.edge_witness->first, r.edge_witness->second));
      } else {
        EXPECT_TRUE(is_edge_generator(d.distances, g.edges(), s).ok) << to_edge_list(g);
      }
    }
  }
}

TEST(ConfigurationProperties, Subsumption) {
  for (const Graph& g : testing::small_corpus(9)) {
    auto d = decompose(g);
    for (const VertexSet& s : testing::minimal_biactive_branch_resolving_sets(d)) {
      auto ctx = build_context(d, s);
      auto r = analyze_configurations(ctx);
      if (r.B) EXPECT_TRUE(r.D);
      for (const auto& c : hits_C(ctx)) {
        if (2 * ctx.k == ctx.g) EXPECT_TRUE(r.A);
        if ((c.index == 0 || c.index == ctx.k) && 2 * ctx.k <= ctx.g - 2) EXPECT_TRUE(r.B);
      }
    }
  }
}

}  // namespace
}  // namespace unimd
