#pragma once

#include <utility>
#include <vector>

#include "nervekit/face.h"
#include "nervekit/graph.h"

namespace nervekit {

// Strict partial order on [n]. Row i holds the elements strictly above i.
class Poset {
 public:
  Poset() = default;
  // The antichain on [n].
  explicit Poset(int n);

  // Transitive closure of the given relations; throws InputError on a cycle.
  static Poset from_relations(int n, const std::vector<std::pair<Vertex, Vertex>>& less);
  // Takes up-sets as given; throws InputError unless they form a strict order.
  static Poset from_up_sets(int n, std::vector<Face> up);

  int n() const { return n_; }
  bool less(Vertex a, Vertex b) const { return up_[a - 1].contains(b); }
  bool comparable(Vertex a, Vertex b) const { return less(a, b) || less(b, a); }
  Face successors(Vertex v) const { return up_[v - 1]; }
  Face predecessors(Vertex v) const;
  const std::vector<Face>& up_sets() const { return up_; }

  // Covering pairs a < b with nothing strictly between, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> cover_relations() const;
  Graph incomparability_graph() const;

  bool operator==(const Poset&) const = default;

 private:
  int n_ = 0;
  std::vector<Face> up_;
};

// True when the relation has no loops, no cycles and is transitively closed.
bool is_strict_order(int n, const std::vector<Face>& up);

}  // namespace nervekit
