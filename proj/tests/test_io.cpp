#include <gtest/gtest.h>

#include <string>

#include "hypercolor/gen.hpp"
#include "hypercolor/io.hpp"

namespace hypercolor {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalInvariantViolation;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

TEST(ParseHypergraph, HeaderCommentsAndEdges) {
  const auto h = io::parse_hypergraph(
      "# a triangle plus an isolated vertex\n"
      "p hyper 4 3\n"
      "e 0 1\n"
      "\n"
      "e 2 0\n"
      "e 1 2\n");
  EXPECT_EQ(h.vertex_count(), 4u);
  ASSERT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.edge(1), (Edge{0, 2}));
}

TEST(ParseHypergraph, WithoutHeaderInfersN) {
  const auto h = io::parse_hypergraph("e 0 5 3\n");
  EXPECT_EQ(h.vertex_count(), 6u);
}

TEST(ParseHypergraph, SingletonEdgeCitesSizeRule) {
  const auto fn = [] { io::parse_hypergraph("p hyper 3 1\ne 1\n"); };
  EXPECT_EQ(kind_of(fn), ErrorKind::EdgeTooSmall);
  const auto msg = message_of(fn);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("at least 2"), std::string::npos) << msg;
}

TEST(ParseHypergraph, RejectsMalformedLines) {
  EXPECT_EQ(kind_of([] { io::parse_hypergraph("e 0 x\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_hypergraph("e 0 -1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_hypergraph("q 0 1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_hypergraph("p graph 3 1\ne 0 1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_hypergraph("e 0 1\np hyper 3 1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_hypergraph("p hyper 3 2\ne 0 1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_hypergraph("p hyper 3 1\ne 0 3\n"); }), ErrorKind::VertexOutOfRange);
}

TEST(ParseHypergraph, ErrorNamesTheLine) {
  const auto msg = message_of([] { io::parse_hypergraph("# c\ne 0 1\ne 1 two\n"); });
  EXPECT_EQ(msg.rfind("line 3:", 0), 0u) << msg;
}

TEST(ParseColoring, ReadsInOrder) {
  const auto c = io::parse_coloring("0 1\n1 0\n2 3\n");
  EXPECT_EQ(c.colors, (std::vector<Color>{1, 0, 3}));
  EXPECT_EQ(c.k, 4u);
}

TEST(ParseColoring, RejectsGapsAndGarbage) {
  EXPECT_EQ(kind_of([] { io::parse_coloring("0 1\n2 0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_coloring("0 1 2\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::parse_coloring("0 a\n"); }), ErrorKind::Parse);
  EXPECT_NE(message_of([] { io::parse_coloring("0 1\n1\n"); }).find("line 2"), std::string::npos);
}

TEST(RoundTrip, GeneratedHypergraphs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = random_hypergraph(12, 20, 2, 6, seed);
    EXPECT_EQ(io::parse_hypergraph(io::to_text(h)), h);
  }
  const auto isolated = build_hypergraph(9, {{0, 1}});
  EXPECT_EQ(io::parse_hypergraph(io::to_text(isolated)), isolated);
}

TEST(RoundTrip, Colorings) {
  Xoshiro256 rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<Color> colors(rng.between(0, 20));
    for (auto& c : colors) c = static_cast<Color>(rng.below(5));
    const auto c = VertexColoring::from_colors(colors);
    EXPECT_EQ(io::parse_coloring(io::to_text(c)), c);
  }
}

TEST(WriteHypergraph, ExactBytes) {
  EXPECT_EQ(io::to_text(complete_graph(3)), "p hyper 3 3\ne 0 1\ne 0 2\ne 1 2\n");
  EXPECT_EQ(io::to_text(VertexColoring::from_colors({1, 0})), "0 1\n1 0\n");
}

}  // namespace
}  // namespace hypercolor
