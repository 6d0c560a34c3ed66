#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nervekit/face.h"
#include "nervekit/graph.h"

namespace nervekit {

// A downward-closed family of faces on the ground set [n], stored explicitly
// and sorted in canonical face order. The void complex has no faces at all and
// is distinct from {∅}.
class SimplicialComplex {
 public:
  // The void complex on an empty ground set.
  SimplicialComplex() = default;

  // Downward closure of `facets`. An empty list yields the void complex.
  static SimplicialComplex from_facets(int n, std::span<const Face> facets);
  // Takes an explicit face list; throws InputError unless it is downward closed.
  static SimplicialComplex from_faces(int n, std::vector<Face> faces);
  static SimplicialComplex void_complex(int n);
  // 2^S as a complex on [n].
  static SimplicialComplex simplex(int n, Face s);

  int n() const { return n_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t num_faces() const { return faces_.size(); }
  bool is_void() const { return faces_.empty(); }
  // True for the void complex and for {∅}.
  bool is_fully_collapsed() const { return faces_.size() <= 1; }

  bool contains(Face f) const;
  // Union of all faces; v is a vertex iff {v} is a face.
  Face vertex_set() const;
  // -1 for {∅}; -2 for the void complex.
  int dim() const;
  // Inclusion-maximal faces in canonical order.
  std::vector<Face> facets() const;

  // Same faces over a different ground set; throws if a face does not fit.
  SimplicialComplex with_ground_size(int n) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  SimplicialComplex(int n, std::vector<Face> sorted_faces)
      : n_(n), faces_(std::move(sorted_faces)) {}

  int n_ = 0;
  std::vector<Face> faces_;
};

// Throws InputError if `k` is not downward closed or has faces outside [n].
void validate(const SimplicialComplex& k);

// {σ ∖ {v} : v ∈ σ ∈ K}; keeps the ground set size.
SimplicialComplex link(const SimplicialComplex& k, Vertex v);

// K ∗ w. The ground set grows to include w if needed.
SimplicialComplex cone(const SimplicialComplex& k, Vertex w);

SimplicialComplex clique_complex(const Graph& g);

// Faces with at most d+1 vertices.
SimplicialComplex skeleton(const SimplicialComplex& k, int d);

// Largest complex with d-skeleton S in which every larger σ is a face exactly
// when all of its (d+1)-subsets are.
SimplicialComplex helly_completion(const SimplicialComplex& s, int d);

// The 1-skeleton as a graph on [n].
Graph graph_of(const SimplicialComplex& k);

}  // namespace nervekit
