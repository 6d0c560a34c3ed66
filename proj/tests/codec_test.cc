#include <gtest/gtest.h>

#include <set>

#include "nervekit/codec.h"
#include "nervekit/enumerate.h"
#include "nervekit/errors.h"
#include "support.h"

namespace nervekit {
namespace {

using testing_support::to_poset;

// Encodes every order on [m] through a brute-force compressed representation
// (odd left ends, even right ends, occupied values 1..k) and counts the
// distinct graphs on [m+1].
std::size_t oracle_image_count(int m) {
  std::vector<oracle::Segment> choices;
  for (int l = 1; l <= 2 * m; l += 2) {
    for (int r = l + 1; r <= 2 * m; r += 2) choices.push_back({l, r});
  }
  std::set<uint64_t> images;
  for (const auto& less : oracle::all_strict_orders(m)) {
    std::vector<oracle::Segment> current(m);
    bool found = false;
    std::function<void(int)> place = [&](int i) {
      if (found) return;
      if (i == m) {
        if (oracle::order_of(current) != less) return;
        std::set<int64_t> used;
        for (const auto& s : current) used.insert({s.left, s.right});
        if (*used.rbegin() != static_cast<int64_t>(used.size())) return;
        found = true;
        std::vector<oracle::Segment> j;
        for (const auto& s : current) j.push_back({s.left, s.right + 2});
        j.push_back({0, 1});
        images.insert(oracle::code_of(oracle::intersection_graph(j)));
        return;
      }
      for (const auto& s : choices) {
        current[i] = s;
        place(i + 1);
      }
    };
    place(0);
  }
  return images.size();
}

TEST(Encode, Examples) {
  const Graph chain = encode(Poset::from_relations(2, {{1, 2}}));
  EXPECT_EQ(chain, Graph::from_edges(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(encoding_intervals(canonical_compressed(Poset::from_relations(2, {{1, 2}}))),
            IntervalRep({{1, 4}, {3, 6}, {0, 1}}));
  EXPECT_EQ(encode(Poset(2)), Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(encode(Poset(1)), Graph::from_edges(2, {{1, 2}}));
  EXPECT_THROW(encode(Poset::from_relations(4, {{1, 2}, {3, 4}})), PreconditionError);
}

TEST(Encode, LastVertexSeesFirstLeftRun) {
  for_each_interval_order(4, [](const Poset& p) {
    const Graph g = encode(p);
    ASSERT_EQ(g.neighbors(5), canonical_compressed(p).a[0]);
  });
}

TEST(Decode, Examples) {
  const auto path = decode(Graph::from_edges(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(path.a, (std::vector<Face>{Face::of({1}), Face::of({2})}));
  EXPECT_EQ(path.b, (std::vector<Face>{Face::of({1}), Face::of({2})}));
  const auto k3 = decode(Graph::from_edges(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(k3.a[0], Face::of({1, 2}));
  EXPECT_EQ(k3.b[0], Face::of({1, 2}));
  const auto edge = decode(Graph::from_edges(2, {{1, 2}}));
  EXPECT_EQ(edge.a, std::vector<Face>{Face::of({1})});
  EXPECT_EQ(edge.b, std::vector<Face>{Face::of({1})});
}

TEST(Decode, RejectsGraphsOutsideTheImage) {
  EXPECT_THROW(decode(Graph(1)), NotCodecImage);
  EXPECT_THROW(decode(Graph(3)), NotCodecImage);
  // Vertex 3 adjacent to nothing: no left run to start from.
  EXPECT_THROW(decode(Graph::from_edges(3, {{1, 2}})), NotCodecImage);
  // A 4-cycle is not an interval graph, so no interval order encodes to it.
  EXPECT_THROW(decode(Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}})),
               NotCodecImage);
}

TEST(Decode, ReturnsAPreimageOnEveryImage) {
  for (int m = 1; m <= 5; ++m) {
    for_each_interval_order(m, [](const Poset& p) {
      const Graph g = encode(p);
      ASSERT_TRUE(is_interval_graph(g));
      const CompressedRep back = decode(g);
      ASSERT_NO_THROW(validate(back));
      ASSERT_EQ(encode(interval_order(back.to_intervals())), g);
    });
  }
}

// Two different orders on [3] with the same encoding: the decoder cannot
// separate the last two right-endpoint runs when no left run follows them.
TEST(Roundtrip, CollisionAtFourVertices) {
  const Poset first = Poset::from_relations(3, {{1, 2}});
  const Poset second = Poset::from_relations(3, {{1, 2}, {3, 2}});
  ASSERT_NE(first, second);
  EXPECT_EQ(encoding_intervals(canonical_compressed(first)),
            IntervalRep({{1, 4}, {3, 6}, {1, 6}, {0, 1}}));
  EXPECT_EQ(encoding_intervals(canonical_compressed(second)),
            IntervalRep({{1, 4}, {3, 6}, {1, 4}, {0, 1}}));
  EXPECT_EQ(encode(first), encode(second));
  EXPECT_EQ(encode(first), Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}}));
}

TEST(Roundtrip, SmallSizesAreExact) {
  const RoundtripReport two = roundtrip_check(2);
  EXPECT_EQ(to_csv(two), "2,1,1,0");
  const RoundtripReport three = roundtrip_check(3);
  EXPECT_EQ(to_csv(three), "3,3,3,0");
}

TEST(Roundtrip, ImageCountsMatchBruteForce) {
  for (int n = 2; n <= 5; ++n) {
    const RoundtripReport r = roundtrip_check(n);
    EXPECT_EQ(r.images, oracle_image_count(n - 1)) << "n=" << n;
    // Each collision class has exactly one member that decodes back to itself.
    EXPECT_EQ(r.orders - r.failures, r.images) << "n=" << n;
  }
  EXPECT_EQ(oracle_image_count(3), 13u);
  EXPECT_EQ(oracle_image_count(4), 99u);
}

TEST(Roundtrip, WorkerCountDoesNotChangeResult) {
  const std::string one = to_csv(roundtrip_check(6, 1));
  EXPECT_EQ(to_csv(roundtrip_check(6, 3)), one);
  EXPECT_EQ(one, "6,3451,1261,2190");
}

TEST(Roundtrip, Limits) {
  EXPECT_THROW(roundtrip_check(1), LimitError);
  EXPECT_THROW(roundtrip_check(9), LimitError);
}

TEST(Relabel, FibresAreSmall) {
  for (int n = 2; n <= 5; ++n) {
    const RelabelReport r = relabel_experiment(n);
    const RoundtripReport base = roundtrip_check(n);
    EXPECT_EQ(r.pairs, base.orders * static_cast<uint64_t>(n));
    EXPECT_LE(r.images, r.pairs);
    EXPECT_GE(r.images, base.images);
    EXPECT_GE(r.max_fiber, 1u);
  }
}

}  // namespace
}  // namespace nervekit
