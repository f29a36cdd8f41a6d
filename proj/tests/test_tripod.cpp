#include <gtest/gtest.h>

#include <random>

#include "p7c/error.hpp"
#include "p7c/oracle.hpp"
#include "p7c/tripod.hpp"
#include "support.hpp"

namespace p7c {
namespace {

// Triangle 0-1-2, vertex 3 seeing 1 and 2, pendant 4 on 0.
Graph grown_example() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}

TEST(GrowTripod, Basic) {
  auto k3 = grow_tripod(testing::complete(3), {0, 1, 2});
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->parts[0], (VertexSet{0}));
  EXPECT_EQ(k3->order, (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(grow_tripod(testing::complete(4), {0, 1, 2}));
  EXPECT_THROW(grow_tripod(testing::path(3), {0, 1, 2}), InvalidInput);

  auto t = grow_tripod(grown_example(), {0, 1, 2});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->parts[0], (VertexSet{0, 3}));
  EXPECT_EQ(t->part_of(3), 0);
  EXPECT_EQ(t->part_of(4), -1);
  EXPECT_TRUE(verify_tripod(grown_example(), *t));
  EXPECT_TRUE(is_maximal_tripod(grown_example(), *t));
  EXPECT_TRUE(is_stable_tripod(grown_example(), *t));
}

TEST(GrowTripod, PrismIsNormal) {
  Graph g = testing::prism();
  auto t = grow_tripod(g, {0, 1, 2});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->all(), (VertexSet{0, 1, 2}));
  EXPECT_FALSE(is_reducible(g, *t));
  EXPECT_TRUE(is_normal_tripod(g, *t));
}

TEST(Contraction, ReduciblePart) {
  Graph g = grown_example();
  Tripod t = *grow_tripod(g, {0, 1, 2});
  auto i = is_reducible(g, t);
  ASSERT_TRUE(i);
  EXPECT_EQ(*i, 1);
  EXPECT_THROW(contract_reducible(g, t, 0), ContractViolation);

  Contraction c = contract_reducible(g, t, 1);
  EXPECT_EQ(c.graph.order(), 3);
  EXPECT_EQ(c.step.apply(g), c.graph);
  EXPECT_TRUE(c.graph.adjacent(c.step.merged[0], c.step.merged[1]));
  auto small = oracle::brute_color(c.graph);
  ASSERT_TRUE(small);
  Coloring lifted = c.step.lift(g, *small);
  EXPECT_TRUE(testing::proper_on(g, lifted));
}

TEST(Normalize, Outcomes) {
  EXPECT_EQ(normalize(testing::complete(4)).kind, NormalizeResult::Kind::kNotThreeColorable);
  EXPECT_EQ(normalize(testing::cycle(5)).kind, NormalizeResult::Kind::kTriangleFree);
  NormalizeResult prism = normalize(testing::prism());
  ASSERT_EQ(prism.kind, NormalizeResult::Kind::kNormal);
  EXPECT_TRUE(prism.trace.steps.empty());
  EXPECT_TRUE(is_normal_tripod(prism.graph, prism.tripod));
  EXPECT_THROW(normalize(Graph(2)), InvalidInput);
}

// Every proper colouring gives each part one colour and the parts distinct
// colours.
bool parts_monochromatic(const Graph& g, const Tripod& t) {
  bool ok = true;
  oracle::for_each_coloring(g, [&](const Coloring& c) {
    std::array<int, 3> seen{};
    for (int i = 0; i < 3; ++i)
      for (int v : t.parts[i]) {
        if (seen[i] == 0) seen[i] = c[v];
        if (c[v] != seen[i]) ok = false;
      }
    if (seen[0] == seen[1] || seen[1] == seen[2] || seen[0] == seen[2]) ok = false;
    return ok;
  });
  return ok;
}

TEST(Normalize, PreservesColorabilityAndLifts) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph g = oracle::gen_instance(8 + static_cast<int>(seed % 5), 0.35, seed).graph;
    if (!is_connected(g)) continue;
    NormalizeResult nr = normalize(g);
    auto before = oracle::brute_color(g);
    EXPECT_EQ(nr.trace.replay(g), nr.graph);
    if (nr.kind == NormalizeResult::Kind::kNotThreeColorable) {
      EXPECT_FALSE(before) << "seed " << seed;
      continue;
    }
    EXPECT_TRUE(is_connected(nr.graph));
    EXPECT_FALSE(has_induced_path(nr.graph, 7));
    auto after = oracle::brute_color(nr.graph);
    ASSERT_EQ(before.has_value(), after.has_value()) << "seed " << seed;
    if (after) EXPECT_TRUE(testing::proper_on(g, nr.trace.lift(g, *after)));
    if (nr.kind == NormalizeResult::Kind::kNormal) {
      EXPECT_TRUE(verify_tripod(nr.graph, nr.tripod));
      EXPECT_TRUE(is_normal_tripod(nr.graph, nr.tripod));
      EXPECT_TRUE(parts_monochromatic(nr.graph, nr.tripod)) << "seed " << seed;
    }
  }
}

TEST(Tripod, GrownPartsAreMonochromatic) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 150; ++round) {
    Graph g = testing::random_graph(9, 0.4, rng);
    auto tri = find_triangle(g);
    if (!tri) continue;
    auto t = grow_tripod(g, *tri);
    if (!t) {
      EXPECT_FALSE(oracle::brute_color(g));
      continue;
    }
    EXPECT_TRUE(verify_tripod(g, *t));
    EXPECT_TRUE(is_maximal_tripod(g, *t));
    EXPECT_TRUE(parts_monochromatic(g, *t)) << "round " << round;
  }
}

TEST(ReductionTrace, ForwardMapsSurvivors) {
  Graph g = grown_example();
  Tripod t = *grow_tripod(g, {0, 1, 2});
  ReductionTrace trace;
  trace.steps.push_back(contract_reducible(g, t, 1).step);
  VertexSet mapped = trace.forward(VertexSet{4});
  EXPECT_EQ(mapped.size(), 1);
  EXPECT_EQ(mapped.first(), 0);
}

}  // namespace
}  // namespace p7c
