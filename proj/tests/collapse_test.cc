#include <gtest/gtest.h>

#include <random>

#include "nervekit/collapse.h"
#include "nervekit/enumerate.h"
#include "nervekit/errors.h"
#include "nervekit/graph.h"
#include "nervekit/replay.h"
#include "support.h"

namespace nervekit {
namespace {

using testing_support::complex_of;
using testing_support::to_sets;

const SimplicialComplex kC3 = complex_of(3, {{1, 2}, {2, 3}, {1, 3}});

bool has_step(const std::vector<CollapseStep>& steps, Face sigma, Face facet) {
  for (const auto& s : steps) {
    if (s.free_face == sigma && s.facet == facet) return true;
  }
  return false;
}

TEST(FreeFaces, Examples) {
  const auto edge = complex_of(2, {{1, 2}});
  const auto steps = free_faces(edge, 1);
  const Face f12 = Face::of({1, 2});
  EXPECT_TRUE(has_step(steps, Face::of({1}), f12));
  EXPECT_TRUE(has_step(steps, Face::of({2}), f12));
  EXPECT_TRUE(has_step(steps, Face(), f12));
  EXPECT_EQ(steps.size(), 3u);

  EXPECT_TRUE(free_faces(kC3, 1).empty());
  const auto edges = free_faces(kC3, 2);
  ASSERT_EQ(edges.size(), 3u);
  for (const auto& s : edges) {
    EXPECT_EQ(s.free_face, s.facet);
    EXPECT_EQ(s.free_face.size(), 2);
  }
}

TEST(FreeFaces, SortedCanonically) {
  const auto k = complex_of(4, {{1, 2, 3}, {3, 4}});
  const auto steps = free_faces(k, 3);
  for (std::size_t i = 1; i < steps.size(); ++i) {
    EXPECT_LT(steps[i - 1].free_face, steps[i].free_face);
  }
}

TEST(CollapseStep, Examples) {
  const auto edge = complex_of(2, {{1, 2}});
  EXPECT_EQ(to_sets(collapse_step(edge, Face::of({1}), 1)), (oracle::FaceSet{{}, {2}}));
  const auto path = complex_of(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(collapse_step(path, Face::of({1}), 1), complex_of(3, {{2, 3}}));
  EXPECT_TRUE(collapse_step(complex_of(3, {{1, 2, 3}}), Face(), 1).is_void());
}

TEST(CollapseStep, Preconditions) {
  EXPECT_THROW(collapse_step(kC3, Face::of({1}), 1), PreconditionError);
  EXPECT_THROW(collapse_step(complex_of(2, {{1, 2}}), Face::of({1, 2}), 1), PreconditionError);
  EXPECT_THROW(collapse_step(complex_of(2, {{1}, {2}}), Face(), 1), PreconditionError);
  EXPECT_THROW(collapse_step(complex_of(2, {{1}}), Face::of({2}), 1), PreconditionError);
}

TEST(IsDCollapsible, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const auto simplex = SimplicialComplex::simplex(n, Face::full(n));
    for (int d = 1; d <= 3; ++d) {
      const auto cert = is_d_collapsible(simplex, d);
      ASSERT_TRUE(cert);
      EXPECT_TRUE(replay(simplex, *cert, d).ok);
    }
  }
  EXPECT_FALSE(is_d_collapsible(kC3, 1));
  const auto cert = is_d_collapsible(kC3, 2);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(replay(kC3, *cert, 2).ok);
  EXPECT_EQ(cert->steps.front().free_face.size(), 2);
}

TEST(IsDCollapsible, TrivialComplexes) {
  EXPECT_TRUE(is_d_collapsible(SimplicialComplex::void_complex(3), 0));
  const auto empty_face = complex_of(3, {{}});
  const auto cert = is_d_collapsible(empty_face, 0);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(cert->steps.empty());
  // Two points need a vertex collapse, which d = 0 does not allow.
  EXPECT_FALSE(is_d_collapsible(complex_of(2, {{1}, {2}}), 0));
  EXPECT_TRUE(is_d_collapsible(complex_of(2, {{1}, {2}}), 1));
}

TEST(Replay, RejectsBadCertificates) {
  const auto path = complex_of(3, {{1, 2}, {2, 3}});
  CollapseCertificate wrong_facet{1, {{Face::of({1}), Face::of({2, 3})}}};
  const auto r = replay(path, wrong_facet, 1);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failed_step, 0);

  CollapseCertificate too_big{1, {{Face::of({1, 2}), Face::of({1, 2})}}};
  EXPECT_FALSE(replay(path, too_big, 1).ok);
  CollapseCertificate edge_whole{2,
                                 {{Face::of({1, 2}), Face::of({1, 2})},
                                  {Face::of({1}), Face::of({1})},
                                  {Face::of({2}), Face::of({2})}}};
  const auto unbounded = replay(complex_of(2, {{1, 2}}), edge_whole, -1);
  EXPECT_TRUE(unbounded.ok);
  EXPECT_EQ(unbounded.min_d, 2);
  EXPECT_FALSE(replay(complex_of(2, {{1, 2}}), edge_whole, 1).ok);

  CollapseCertificate incomplete{1, {{Face::of({1}), Face::of({1, 2})}}};
  EXPECT_FALSE(replay(path, incomplete, 1).ok);

  CollapseCertificate good{1,
                           {{Face::of({1}), Face::of({1, 2})},
                            {Face::of({2}), Face::of({2, 3})},
                            {Face(), Face::of({3})}}};
  const auto ok = replay(path, good, 1);
  EXPECT_TRUE(ok.ok);
  EXPECT_EQ(ok.min_d, 1);
}

TEST(Searcher, AgreesWithExhaustiveOracle) {
  CollapseSearcher searcher;
  for (int n = 0; n <= 4; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for_each_complex(n, [&](const SimplicialComplex& k) {
        const auto cert = searcher.find(k, d);
        ASSERT_EQ(cert.has_value(), oracle::collapsible(to_sets(k), d));
        if (cert) {
          ASSERT_TRUE(replay(k, *cert, d).ok);
        }
      });
    }
  }
}

TEST(Searcher, MonotoneInD) {
  CollapseSearcher searcher;
  for_each_complex(4, [&](const SimplicialComplex& k) {
    for (int d = 0; d < 4; ++d) {
      if (is_d_collapsible(k, d)) {
        ASSERT_TRUE(searcher.find(k, d + 1));
      }
    }
  });
}

TEST(Searcher, SmallMemoStillExact) {
  CollapseSearcher tiny(4);
  CollapseSearcher big;
  for_each_complex(4, [&](const SimplicialComplex& k) {
    ASSERT_EQ(tiny.find(k, 2).has_value(), big.find(k, 2).has_value());
  });
  EXPECT_LE(tiny.memo_size(), 4u);
}

TEST(ChordalEquivalence, CliqueComplexCollapsesIffChordal) {
  CollapseSearcher searcher;
  for (int n = 1; n <= 6; ++n) {
    for (uint64_t code = 0; code < (uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      const Graph g = Graph::from_code(n, code);
      ASSERT_EQ(searcher.find(clique_complex(g), 1).has_value(),
                oracle::chordal(oracle::graph_from_code(n, code)))
          << "n=" << n << " code=" << code;
    }
  }
}

TEST(ConeCollapse, SingleApexOverTwoPoints) {
  const auto points = complex_of(2, {{1}, {2}});
  // Two points are not 0-collapsible, so the link needs d = 1 and the cone d = 2.
  ASSERT_FALSE(is_d_collapsible(points, 0));
  const auto link_cert = is_d_collapsible(points, 1);
  ASSERT_TRUE(link_cert);
  const Face v = Face::full(2);
  const auto k = split_complex(3, v, {points}, {3});
  EXPECT_EQ(k, complex_of(3, {{1, 2}, {1, 3}, {2, 3}}));
  const auto cert = cone_collapse_certificate(v, {{3, points, *link_cert}}, 2);
  EXPECT_TRUE(replay(k, cert, 2).ok);
}

TEST(ConeCollapse, ZeroLevelLinkGivesOneCollapse) {
  // A single point is 0-collapsible (collapse the empty face).
  const auto point = complex_of(2, {{1}});
  const auto link_cert = is_d_collapsible(point, 0);
  ASSERT_TRUE(link_cert);
  const Face v = Face::full(2);
  const auto k = split_complex(3, v, {point}, {3});
  const auto cert = cone_collapse_certificate(v, {{3, point, *link_cert}}, 1);
  EXPECT_TRUE(replay(k, cert, 1).ok);
}

TEST(ConeCollapse, NoApexes) {
  const Face v = Face::full(3);
  const auto cert = cone_collapse_certificate(v, {}, 2);
  const auto k = split_complex(3, v, {}, {});
  EXPECT_EQ(k, complex_of(3, {{1, 2, 3}}));
  ASSERT_EQ(cert.steps.size(), 1u);
  EXPECT_EQ(cert.steps[0].free_face, Face());
  EXPECT_TRUE(replay(k, cert, 2).ok);
}

TEST(ConeCollapse, TwoApexesOverFullSimplex) {
  const Face v = Face::full(3);
  const auto simplex = SimplicialComplex::simplex(3, v);
  const auto link_cert = is_d_collapsible(simplex, 1);
  ASSERT_TRUE(link_cert);
  const auto k = split_complex(5, v, {simplex, simplex}, {4, 5});
  EXPECT_EQ(k, complex_of(5, {{1, 2, 3, 4}, {1, 2, 3, 5}}));
  const auto cert =
      cone_collapse_certificate(v, {{4, simplex, *link_cert}, {5, simplex, *link_cert}}, 2);
  EXPECT_TRUE(replay(k, cert, 2).ok);
}

TEST(ConeCollapse, RejectsInvalidInputCertificate) {
  const auto points = complex_of(2, {{1}, {2}});
  CollapseCertificate bogus{0, {}};
  EXPECT_THROW(cone_collapse_certificate(Face::full(2), {{3, points, bogus}}, 1),
               PreconditionError);
}

TEST(ConeCollapse, RandomChordalLinks) {
  std::mt19937 rng(99);
  CollapseSearcher searcher;
  for (int trial = 0; trial < 60; ++trial) {
    const int v_size = 2 + trial % 3;
    const int w_size = 1 + trial % 3;
    std::vector<SimplicialComplex> links;
    std::vector<ApexCollapse> apexes;
    std::vector<Vertex> labels;
    while (static_cast<int>(links.size()) < w_size) {
      const Graph g = Graph::from_code(v_size, rng() % (uint64_t{1} << (v_size * (v_size - 1) / 2)));
      if (!is_chordal(g)) continue;
      const auto link_k = clique_complex(g);
      const auto cert = searcher.find(link_k, 1);
      ASSERT_TRUE(cert);
      const Vertex w = v_size + static_cast<int>(links.size()) + 1;
      links.push_back(link_k);
      labels.push_back(w);
      apexes.push_back({w, link_k, *cert});
    }
    const Face v = Face::full(v_size);
    const auto k = split_complex(v_size + w_size, v, links, labels);
    const auto cert = cone_collapse_certificate(v, apexes, 2);
    EXPECT_TRUE(replay(k, cert, 2).ok) << replay(k, cert, 2).message;
  }
}

}  // namespace
}  // namespace nervekit
