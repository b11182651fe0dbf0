#include "combrec/graph_io.h"

#include <gtest/gtest.h>

#include "combrec/corpus.h"

namespace combrec {
namespace {

const Graph kK3(3, {{0, 1}, {1, 2}, {0, 2}});
const Graph kP4(4, {{0, 1}, {1, 2}, {2, 3}});

TEST(Graph6, Examples) {
  EXPECT_EQ(ParseGraph6("Bw"), kK3);
  EXPECT_EQ(WriteGraph6(kP4), "Ch");
  EXPECT_EQ(ParseGraph6("A?"), Graph(2));
  EXPECT_EQ(ParseGraph6("?"), Graph(0));
  EXPECT_EQ(ParseGraph6("  Ch\r\n"), kP4);
  EXPECT_EQ(ParseGraph6(">>graph6<<Ch"), kP4);
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(ParseGraph6(""), ParseError);
  EXPECT_THROW(ParseGraph6("C"), ParseError);      // truncated payload
  EXPECT_THROW(ParseGraph6("Chh"), ParseError);    // trailing byte
  EXPECT_THROW(ParseGraph6("C h"), ParseError);    // space inside the token
  EXPECT_THROW(ParseGraph6("B\x7f"), ParseError);  // above 126
  EXPECT_THROW(ParseGraph6("~?"), ParseError);     // truncated size
}

TEST(Graph6, LongSizeForms) {
  const Graph g = RandomGraph(63, 0.3, 1);
  const std::string text = WriteGraph6(g);
  ASSERT_EQ(text.substr(0, 4), "~??~");
  EXPECT_EQ(ParseGraph6(text), g);
  // The same graph with the eight-byte size prefix.
  EXPECT_EQ(ParseGraph6("~~?????~" + text.substr(4)), g);
  EXPECT_EQ(WriteGraph6(RandomGraph(62, 0.3, 1)).front(), '}');
}

TEST(Graph6, RoundTripUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : GraphsUpToIso(n)) ASSERT_EQ(ParseGraph6(WriteGraph6(g)), g);
  }
  for (int n : {8, 61, 62, 63, 100, 200, 300}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Graph g = RandomGraph(n, 0.5, seed);
      ASSERT_EQ(ParseGraph6(WriteGraph6(g)), g) << n;
    }
  }
}

TEST(EdgeList, Examples) {
  EXPECT_EQ(ParseEdgeList("4 3\n0 1\n1 2\n2 3"), kP4);
  EXPECT_EQ(ParseEdgeList("3 0"), Graph(3));
  EXPECT_EQ(ParseEdgeList("# path\n\n4 3\n0 1 # first\n1 2\n\n2 3\n"), kP4);
  EXPECT_THROW(ParseEdgeList("2 1\n0 0"), ParseError);
}

TEST(EdgeList, Malformed) {
  EXPECT_THROW(ParseEdgeList(""), ParseError);
  EXPECT_THROW(ParseEdgeList("3 2\n0 1"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 1\n0 1\n1 2"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 1\n0 3"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 1\n0 x"), ParseError);
  EXPECT_THROW(ParseEdgeList("-1 0"), ParseError);
}

TEST(EdgeList, RoundTrip) {
  EXPECT_EQ(WriteEdgeList(kP4), "4 3\n0 1\n1 2\n2 3\n");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = RandomGraph(12, 0.4, seed);
    ASSERT_EQ(ParseEdgeList(WriteEdgeList(g)), g);
  }
}

}  // namespace
}  // namespace combrec
