#include <gtest/gtest.h>

#include "hypercolor/gen.hpp"
#include "hypercolor/hypergraph.hpp"
#include "oracles.hpp"

namespace hypercolor {
namespace {

TEST(BuildHypergraph, MinimalEdge) {
  const auto h = build_hypergraph(2, {{0, 1}});
  EXPECT_EQ(h.vertex_count(), 2u);
  ASSERT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(h.edge(0), (Edge{0, 1}));
}

TEST(BuildHypergraph, DeduplicatesAsSets) {
  const auto h = build_hypergraph(3, {{0, 1}, {1, 0}});
  EXPECT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(h.duplicates_removed(), 1u);
}

TEST(BuildHypergraph, KeepsFirstOccurrenceOrder) {
  const auto h = build_hypergraph(4, {{2, 3}, {0, 1}, {3, 2}, {1, 2, 0}});
  ASSERT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.edge(0), (Edge{2, 3}));
  EXPECT_EQ(h.edge(1), (Edge{0, 1}));
  EXPECT_EQ(h.edge(2), (Edge{0, 1, 2}));
}

TEST(BuildHypergraph, RejectsSingletonEdge) {
  try {
    build_hypergraph(3, {{1}});
    FAIL() << "expected EdgeTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EdgeTooSmall);
  }
}

TEST(BuildHypergraph, RepeatedVertexDoesNotCountTwice) {
  try {
    build_hypergraph(3, {{1, 1}});
    FAIL() << "expected EdgeTooSmall";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EdgeTooSmall);
  }
}

TEST(BuildHypergraph, RejectsOutOfRangeVertex) {
  try {
    build_hypergraph(3, {{0, 3}});
    FAIL() << "expected VertexOutOfRange";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::VertexOutOfRange);
  }
}

TEST(BuildHypergraph, IsolatedVerticesAllowed) {
  const auto h = build_hypergraph(5, {{0, 1}});
  EXPECT_TRUE(h.incident_edges(4).empty());
}

TEST(OneIntersectionGraph, TriangleGivesK3) {
  const auto g = one_intersection_graph(build_hypergraph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(g, IntersectionGraph::from_pairs(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(OneIntersectionGraph, SharedPairIsNotAdjacent) {
  const auto g = one_intersection_graph(build_hypergraph(4, {{0, 1, 2}, {0, 1, 3}}));
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(OneIntersectionGraph, StarIsClique) {
  const auto g = one_intersection_graph(build_hypergraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(OneIntersectionGraph, DisjointEdgesNotAdjacent) {
  const auto g = one_intersection_graph(build_hypergraph(4, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(OneIntersectionGraph, MatchesPairwiseOracleOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Xoshiro256 rng(seed);
    const auto n = rng.between(3, 10);
    const auto m = rng.between(1, 14);
    const auto hi = std::min<std::uint64_t>(5, n);
    Hypergraph h;
    try {
      h = random_hypergraph(n, m, 2, hi, seed);
    } catch (const Error&) {
      continue;
    }
    const auto g = one_intersection_graph(h);
    EXPECT_EQ(g, IntersectionGraph::from_pairs(h.edge_count(), oracle::one_intersecting_pairs(oracle::edge_lists(h))))
        << "seed " << seed;
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
      EXPECT_FALSE(g.adjacent(i, i));
      for (auto j : g.neighbors(i)) EXPECT_TRUE(g.adjacent(j, i));
    }
  }
}

TEST(OneIntersectionGraph, EqualsLineGraphForGraphs) {
  Xoshiro256 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = rng.between(2, 8);
    const auto pairs = oracle::random_graph(n, 1, 2, rng);
    if (pairs.empty()) continue;
    std::vector<std::vector<Vertex>> raw;
    for (auto [a, b] : pairs) raw.push_back({a, b});
    const auto h = build_hypergraph(n, raw);
    EXPECT_EQ(one_intersection_graph(h), IntersectionGraph::from_pairs(pairs.size(), oracle::line_graph(pairs)));
  }
}

TEST(IsProper, ProperPair) {
  const auto h = build_hypergraph(2, {{0, 1}});
  const auto r = is_proper(h, VertexColoring::from_colors({0, 1}));
  EXPECT_TRUE(r.proper);
  EXPECT_TRUE(r.monochromatic.empty());
}

TEST(IsProper, MonochromaticPair) {
  const auto h = build_hypergraph(2, {{0, 1}});
  const auto r = is_proper(h, VertexColoring::from_colors({0, 0}));
  EXPECT_FALSE(r.proper);
  EXPECT_EQ(r.monochromatic, (std::vector<EdgeIndex>{0}));
}

TEST(IsProper, FanoWithOracleColoring) {
  // Witness returned by hypergraph_chromatic_number, frozen.
  const auto h = fano_plane();
  EXPECT_TRUE(is_proper(h, VertexColoring::from_colors({0, 0, 1, 0, 1, 2, 0})).proper);
  EXPECT_FALSE(is_proper(h, VertexColoring::from_colors({0, 0, 1, 0, 1, 1, 2})).proper);
}

TEST(IsProper, RejectsPartialColoring) {
  const auto h = build_hypergraph(3, {{0, 1}});
  EXPECT_THROW(is_proper(h, VertexColoring::from_colors({0, 1})), Error);
}

TEST(IsProper, AgreesWithNaiveScan) {
  Xoshiro256 rng(5);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto h = random_hypergraph(8, rng.between(1, 10), 2, 4, seed);
    std::vector<Color> colors(8);
    for (auto& c : colors) c = static_cast<Color>(rng.below(3));
    EXPECT_EQ(is_proper(h, VertexColoring::from_colors(colors)).proper,
              oracle::naive_proper(oracle::edge_lists(h), colors));
  }
}

TEST(VertexColoring, KIsOnePastMax) {
  EXPECT_EQ(VertexColoring::from_colors({0, 3, 1}).k, 4u);
  EXPECT_EQ(VertexColoring::from_colors({}).k, 0u);
  EXPECT_EQ(VertexColoring::from_colors({0, 3, 1}).distinct_colors(), 3u);
}

}  // namespace
}  // namespace hypercolor
