#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nervekit/face.h"

namespace nervekit {

// Simple undirected graph on [n] with adjacency rows as vertex bitmasks.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Edges are indexed lexicographically: (1,2), (1,3), ..., (n-1,n); bit k of
  // `code` selects edge k. Requires n <= 11.
  static Graph from_code(int n, uint64_t code);
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int n() const { return n_; }
  Face vertices() const { return Face::full(n_); }
  Face neighbors(Vertex v) const { return adj_[v - 1]; }
  Face closed_neighbors(Vertex v) const { return adj_[v - 1].with(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u - 1].contains(v); }
  int num_edges() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  uint64_t code() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  // Subgraph induced on `keep`, labels preserved (other rows emptied).
  Graph induced(Face keep) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Face> adj_;
};

// Maximum cardinality search; the reverse of the visit order is a perfect
// elimination ordering exactly when the graph is chordal.
std::vector<Vertex> mcs_order(const Graph& g);

// A perfect elimination ordering if one exists.
std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g);

bool is_chordal(const Graph& g);

// Maximal cliques of a chordal graph from a perfect elimination ordering.
std::vector<Face> chordal_maximal_cliques(const Graph& g, const std::vector<Vertex>& peo);

}  // namespace nervekit
