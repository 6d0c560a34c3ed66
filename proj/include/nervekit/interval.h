#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nervekit/face.h"
#include "nervekit/graph.h"
#include "nervekit/poset.h"

namespace nervekit {

// Closed interval [left, right] with integer endpoints.
struct Interval {
  int64_t left = 0;
  int64_t right = 0;
  bool operator==(const Interval&) const = default;
};

// Interval i represents vertex i+1.
class IntervalRep {
 public:
  IntervalRep() = default;
  // Throws InputError if some left > right.
  explicit IntervalRep(std::vector<Interval> intervals);

  int size() const { return static_cast<int>(intervals_.size()); }
  const Interval& operator[](Vertex v) const { return intervals_[v - 1]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  bool operator==(const IntervalRep&) const = default;

 private:
  std::vector<Interval> intervals_;
};

// Compressed representation: element v has left endpoint 2i-1 when v ∈ A_i and
// right endpoint 2i when v ∈ B_i. Both lists have one slot per element; unused
// trailing slots are empty.
struct CompressedRep {
  std::vector<Face> a;
  std::vector<Face> b;

  int size() const { return static_cast<int>(a.size()); }
  int left(Vertex v) const;
  int right(Vertex v) const;
  IntervalRep to_intervals() const;

  bool operator==(const CompressedRep&) const = default;
};

// Throws InputError describing the first violated structural condition:
// partition of [m] by both lists, L(v) <= R(v) - 1, and occupied slots forming
// a prefix 1, 2, 3, ... of the coordinates.
void validate(const CompressedRep& rep);

// i ~ j iff the closed intervals meet.
Graph interval_graph(const IntervalRep& rep);

// i < j iff interval i ends strictly before interval j starts.
Poset interval_order(const IntervalRep& rep);

// Decides interval-graph membership from a consecutive arrangement of maximal
// cliques. The witness uses clique indices as coordinates. Requires n <= 12.
std::optional<IntervalRep> is_interval_graph(const Graph& g);

// No induced 2+2.
bool is_interval_order(const Poset& p);

// Merges runs of same-type endpoints (left endpoints sort before right
// endpoints at equal coordinates) and renumbers the runs 1, 2, 3, ...
CompressedRep compress(const IntervalRep& rep);

// Magnitude intervals: L(v) ranks the predecessor set of v, R(v) ranks the
// successor set in reverse. Sets are ranked by (size, bitmask), which is the
// inclusion order whenever the sets form a chain. Empty when some L(v) > R(v).
// Applies to any poset; it reproduces the poset exactly when the poset is an
// interval order.
std::optional<IntervalRep> magnitude_intervals(const Poset& p);

// compress(magnitude_intervals(p)); throws PreconditionError unless p is an
// interval order.
CompressedRep canonical_compressed(const Poset& p);

}  // namespace nervekit
