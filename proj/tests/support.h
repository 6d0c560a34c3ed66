#pragma once

// Conversions between library values and the plain containers used by oracles.

#include <initializer_list>
#include <vector>

#include "nervekit/complex.h"
#include "nervekit/graph.h"
#include "nervekit/poset.h"
#include "oracles.h"

namespace testing_support {

inline oracle::FaceSet to_sets(const nervekit::SimplicialComplex& k) {
  oracle::FaceSet out;
  for (nervekit::Face f : k.faces()) out.insert(f.vertices());
  return out;
}

inline oracle::Matrix to_matrix(const nervekit::Graph& g) {
  oracle::Matrix adj = oracle::empty_matrix(g.n());
  for (auto [u, v] : g.edges()) adj[u - 1][v - 1] = adj[v - 1][u - 1] = true;
  return adj;
}

inline nervekit::Graph to_graph(const oracle::Matrix& adj) {
  std::vector<std::pair<nervekit::Vertex, nervekit::Vertex>> edges;
  const int n = static_cast<int>(adj.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adj[i][j]) edges.emplace_back(i + 1, j + 1);
    }
  }
  return nervekit::Graph::from_edges(n, edges);
}

inline oracle::Matrix to_matrix(const nervekit::Poset& p) {
  oracle::Matrix less = oracle::empty_matrix(p.n());
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = 1; j <= p.n(); ++j) less[i - 1][j - 1] = p.less(i, j);
  }
  return less;
}

inline nervekit::Poset to_poset(const oracle::Matrix& less) {
  std::vector<std::pair<nervekit::Vertex, nervekit::Vertex>> rel;
  const int n = static_cast<int>(less.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (less[i][j]) rel.emplace_back(i + 1, j + 1);
    }
  }
  return nervekit::Poset::from_relations(n, rel);
}

inline nervekit::SimplicialComplex complex_of(
    int n, std::initializer_list<std::initializer_list<nervekit::Vertex>> facets) {
  std::vector<nervekit::Face> fs;
  for (auto f : facets) fs.push_back(nervekit::Face::of(f));
  return nervekit::SimplicialComplex::from_facets(n, fs);
}

inline nervekit::SimplicialComplex faces_of(
    int n, std::initializer_list<std::initializer_list<nervekit::Vertex>> faces) {
  std::vector<nervekit::Face> fs;
  for (auto f : faces) fs.push_back(nervekit::Face::of(f));
  return nervekit::SimplicialComplex::from_faces(n, fs);
}

}  // namespace testing_support
