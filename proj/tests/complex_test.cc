#include <gtest/gtest.h>

#include <random>

#include "nervekit/complex.h"
#include "nervekit/errors.h"
#include "nervekit/graph.h"
#include "support.h"

namespace nervekit {
namespace {

using testing_support::complex_of;
using testing_support::faces_of;
using testing_support::to_matrix;
using testing_support::to_sets;

TEST(Face, CanonicalOrderIsSizeThenBits) {
  EXPECT_LT(Face::of({3}), Face::of({1, 2}));
  EXPECT_LT(Face::of({1, 2}), Face::of({1, 3}));
  EXPECT_LT(Face(), Face::of({1}));
  EXPECT_EQ(Face::of({5, 2, 2}).vertices(), (std::vector<Vertex>{2, 5}));
  EXPECT_EQ(to_string(Face::of({1, 2, 5})), "1 2 5");
  EXPECT_EQ(to_string(Face()), "");
}

TEST(Face, RejectsLabelsOutsideRange) {
  EXPECT_THROW(Face::of({0}), InputError);
  EXPECT_THROW(Face::of({33}), InputError);
  EXPECT_EQ(Face::of({32}).max_vertex(), 32);
}

TEST(Graph, CodeRoundTrip) {
  for (uint64_t code = 0; code < 64; ++code) {
    const Graph g = Graph::from_code(4, code);
    EXPECT_EQ(g.code(), code);
    EXPECT_EQ(oracle::code_of(to_matrix(g)), code);
  }
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph::from_edges(3, {{1, 4}}), InputError);
}

TEST(Graph, ChordalityMatchesInducedCycleOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (uint64_t code = 0; code < (uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      const Graph g = Graph::from_code(n, code);
      ASSERT_EQ(is_chordal(g), oracle::chordal(oracle::graph_from_code(n, code)))
          << "n=" << n << " code=" << code;
    }
  }
}

TEST(FromFacets, DownwardClosure) {
  const auto k = complex_of(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(to_sets(k), (oracle::FaceSet{{}, {1}, {2}, {3}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(SimplicialComplex::from_facets(3, {}).is_void());
  EXPECT_EQ(SimplicialComplex::from_facets(3, {}).num_faces(), 0u);
  EXPECT_EQ(complex_of(3, {{1, 2, 3}}).num_faces(), 8u);
  EXPECT_THROW(complex_of(3, {{1, 4}}), InputError);
}

TEST(FromFacets, VoidDiffersFromEmptyFace) {
  const auto void_k = SimplicialComplex::void_complex(2);
  const auto empty_face = complex_of(2, {{}});
  EXPECT_NE(void_k, empty_face);
  EXPECT_EQ(empty_face.num_faces(), 1u);
  EXPECT_EQ(void_k.dim(), -2);
  EXPECT_EQ(empty_face.dim(), -1);
  EXPECT_TRUE(void_k.is_fully_collapsed());
  EXPECT_TRUE(empty_face.is_fully_collapsed());
}

TEST(FromFaces, RejectsNonClosedInput) {
  EXPECT_THROW(faces_of(3, {{}, {1}, {1, 2}}), InputError);
  EXPECT_THROW(faces_of(3, {{1}}), InputError);
  EXPECT_NO_THROW(faces_of(3, {{}, {1}, {2}, {1, 2}}));
}

TEST(Link, Examples) {
  const auto simplex = complex_of(3, {{1, 2, 3}});
  EXPECT_EQ(to_sets(link(simplex, 3)), to_sets(complex_of(3, {{1, 2}})));
  const auto path = complex_of(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(to_sets(link(path, 2)), (oracle::FaceSet{{}, {1}, {3}}));
  EXPECT_THROW(link(path, 4), InputError);
  EXPECT_THROW(link(complex_of(4, {{1, 2}}), 3), InputError);
}

TEST(Cone, Examples) {
  const auto two_points = complex_of(2, {{1}, {2}});
  const auto c = cone(two_points, 3);
  EXPECT_EQ(to_sets(c), to_sets(complex_of(3, {{1, 3}, {2, 3}})));
  EXPECT_EQ(to_sets(cone(complex_of(0, {{}}), 1)), (oracle::FaceSet{{}, {1}}));
  EXPECT_EQ(cone(complex_of(2, {{1, 2}}), 3), complex_of(3, {{1, 2, 3}}));
  EXPECT_THROW(cone(two_points, 2), InputError);
  EXPECT_THROW(cone(SimplicialComplex::void_complex(2), 3), InputError);
}

TEST(CliqueComplex, Examples) {
  EXPECT_EQ(clique_complex(Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}})),
            complex_of(3, {{1, 2, 3}}));
  EXPECT_EQ(clique_complex(Graph::from_edges(3, {{1, 2}, {2, 3}})),
            complex_of(3, {{1, 2}, {2, 3}}));
  const auto c4 = clique_complex(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  EXPECT_EQ(c4.dim(), 1);
  EXPECT_EQ(c4.facets().size(), 4u);
}

TEST(CliqueComplex, MatchesBruteForceCliques) {
  for (int n = 0; n <= 5; ++n) {
    for (uint64_t code = 0; code < (uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      const auto k = clique_complex(Graph::from_code(n, code));
      ASSERT_EQ(to_sets(k), oracle::cliques(oracle::graph_from_code(n, code)));
    }
  }
}

TEST(Skeleton, Examples) {
  const auto simplex = complex_of(3, {{1, 2, 3}});
  EXPECT_EQ(skeleton(simplex, 1), complex_of(3, {{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(skeleton(simplex, 0), complex_of(3, {{1}, {2}, {3}}));
  EXPECT_EQ(skeleton(simplex, simplex.dim()), simplex);
  EXPECT_THROW(skeleton(simplex, -1), InputError);
}

TEST(HellyCompletion, Examples) {
  const auto c3 = complex_of(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(helly_completion(c3, 1), complex_of(3, {{1, 2, 3}}));
  const auto c4 = complex_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_EQ(helly_completion(c4, 1), c4);
  // 2-skeleton of the 3-simplex minus the triangle {1,2,3}.
  const auto missing = complex_of(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2}, {1, 3}, {2, 3}});
  const auto done = helly_completion(missing, 2);
  EXPECT_EQ(done, missing);
  EXPECT_EQ(to_sets(done), oracle::helly_closure(4, to_sets(missing), 2));
  EXPECT_THROW(helly_completion(complex_of(3, {{1, 2, 3}}), 1), InputError);
}

TEST(HellyCompletion, CliqueComplexIsOneCompletionOfGraph) {
  for (int n = 0; n <= 7; ++n) {
    for (uint64_t code = 0; code < (uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      const Graph g = Graph::from_code(n, code);
      ASSERT_EQ(clique_complex(g), helly_completion(skeleton(clique_complex(g), 1), 1));
    }
  }
}

// Random complexes: closure of a few random facets.
SimplicialComplex random_complex(std::mt19937& rng, int n) {
  std::uniform_int_distribution<uint32_t> mask(0, (uint32_t{1} << n) - 1);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<Face> facets;
  for (int i = count(rng); i > 0; --i) facets.push_back(Face(mask(rng)));
  return SimplicialComplex::from_facets(n, facets);
}

TEST(Properties, SkeletonCompletionAndAdjunction) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 5;
    const auto k = random_complex(rng, n);
    EXPECT_NO_THROW(validate(k));
    EXPECT_TRUE(oracle::downward_closed(to_sets(k)));
    for (int d = 0; d <= 3; ++d) {
      const auto s = skeleton(k, d);
      const auto h = helly_completion(s, d);
      EXPECT_EQ(skeleton(h, d), s);
      EXPECT_EQ(helly_completion(skeleton(h, d), d), h);
      EXPECT_EQ(to_sets(h), oracle::helly_closure(n, to_sets(s), d));
    }
    const int w = n + 1;
    EXPECT_EQ(link(cone(k, w), w), k.with_ground_size(w));
  }
}

TEST(Properties, GraphOfCliqueComplex) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const uint64_t code = rng() & ((uint64_t{1} << (n * (n - 1) / 2)) - 1);
    const Graph g = Graph::from_code(n, code);
    EXPECT_EQ(graph_of(clique_complex(g)), g);
  }
}

}  // namespace
}  // namespace nervekit
