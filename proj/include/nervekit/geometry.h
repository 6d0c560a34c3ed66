#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nervekit/complex.h"
#include "nervekit/exact_lp.h"
#include "nervekit/interval.h"

namespace nervekit {

using Point = std::vector<Rational>;

// Convex hull of a nonempty finite point set in R^d.
class VPolytope {
 public:
  VPolytope(int dim, std::vector<Point> points);

  int dim() const { return dim_; }
  const std::vector<Point>& points() const { return points_; }

  bool operator==(const VPolytope&) const = default;

 private:
  int dim_;
  std::vector<Point> points_;
};

// A tuple of convex sets in R^d; set i stands for vertex i+1.
struct Representation {
  int dim = 0;
  std::vector<VPolytope> sets;
  // Labels used by the text format; defaults to "1", "2", ...
  std::vector<std::string> names;

  int size() const { return static_cast<int>(sets.size()); }
  bool operator==(const Representation&) const = default;
};

// Throws InputError on mixed dimensions or a name count mismatch.
void validate(const Representation& rep);

Representation from_intervals(const IntervalRep& rep);

// A point common to all hulls, if any.
std::optional<Point> common_point(std::span<const VPolytope> sets);
bool intersect_nonempty(std::span<const VPolytope> sets);

// Faces σ with |σ| <= up_to_dim + 1, each decided by its own exact LP.
// Requires n <= 16.
SimplicialComplex nerve(const Representation& rep, int up_to_dim);

// nerve(rep, d) completed by the Helly rule, d the ambient dimension.
SimplicialComplex full_nerve(const Representation& rep);

// A 1-representation on [m] where std::nullopt marks a vertex with no set.
using LineRep = std::vector<std::optional<Interval>>;

// Planar realization of 2^V ∪ ⋃_w (Δ_w ∗ w), where Δ_w is the nerve of the
// w-th line representation. V = {1..v_size}; the apexes follow in order.
// Each apex owns the middle third of an edge of a rational polygon inscribed
// in the unit circle; C_v is the hull of an interior point and the pieces of
// v on those edges.
Representation split_representation(int v_size, const std::vector<LineRep>& reps);

// Range of the first coordinate over the common intersection; empty if the
// sets do not meet.
std::optional<std::pair<Rational, Rational>> projected_interval(std::span<const VPolytope> sets);

// For a planar representation: every triple τ is a nerve face exactly when the
// projections of its three pairwise intersections share a point. Throws
// InputError unless dim == 2; requires n <= 8.
bool projection_check(const Representation& rep);

}  // namespace nervekit
