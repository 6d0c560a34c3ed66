#include "nervekit/geometry.h"

#include <algorithm>
#include <string>

#include "nervekit/errors.h"

namespace nervekit {

VPolytope::VPolytope(int dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
  if (dim < 1) throw InputError("ambient dimension must be positive");
  if (points_.empty()) throw InputError("a polytope needs at least one point");
  for (const Point& p : points_) {
    if (static_cast<int>(p.size()) != dim) {
      throw InputError("point of dimension " + std::to_string(p.size()) + " in R^" +
                       std::to_string(dim));
    }
  }
}

void validate(const Representation& rep) {
  if (rep.sets.size() > kMaxVertices) throw InputError("more than 32 sets");
  for (const VPolytope& s : rep.sets) {
    if (s.dim() != rep.dim) throw InputError("sets live in different dimensions");
  }
  if (!rep.names.empty() && rep.names.size() != rep.sets.size()) {
    throw InputError("one name per set required");
  }
}

Representation from_intervals(const IntervalRep& rep) {
  Representation out;
  out.dim = 1;
  for (const Interval& iv : rep.intervals()) {
    out.sets.emplace_back(1, std::vector<Point>{{Rational(iv.left)}, {Rational(iv.right)}});
  }
  return out;
}

namespace {

struct System {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  int columns = 0;
};

// λ blocks, one per set: each block sums to 1 and all blocks produce the same
// point of R^d.
System intersection_system(std::span<const VPolytope> sets) {
  if (sets.empty()) throw InputError("need at least one set");
  const int d = sets[0].dim();
  System sys;
  std::vector<int> offset;
  for (const VPolytope& s : sets) {
    if (s.dim() != d) throw InputError("dimension mismatch between sets");
    offset.push_back(sys.columns);
    sys.columns += static_cast<int>(s.points().size());
  }
  for (std::size_t k = 0; k < sets.size(); ++k) {
    std::vector<Rational> row(sys.columns);
    for (std::size_t j = 0; j < sets[k].points().size(); ++j) row[offset[k] + j] = 1;
    sys.a.push_back(std::move(row));
    sys.b.emplace_back(1);
  }
  for (std::size_t k = 1; k < sets.size(); ++k) {
    for (int t = 0; t < d; ++t) {
      std::vector<Rational> row(sys.columns);
      for (std::size_t j = 0; j < sets[0].points().size(); ++j) {
        row[offset[0] + j] += sets[0].points()[j][t];
      }
      for (std::size_t j = 0; j < sets[k].points().size(); ++j) {
        row[offset[k] + j] -= sets[k].points()[j][t];
      }
      sys.a.push_back(std::move(row));
      sys.b.emplace_back(0);
    }
  }
  return sys;
}

Point point_from(const VPolytope& first, const std::vector<Rational>& x) {
  Point p(first.dim());
  for (std::size_t j = 0; j < first.points().size(); ++j) {
    for (int t = 0; t < first.dim(); ++t) p[t] += x[j] * first.points()[j][t];
  }
  return p;
}

std::vector<VPolytope> select(const Representation& rep, Face sigma) {
  std::vector<VPolytope> out;
  sigma.for_each([&](Vertex v) { out.push_back(rep.sets[v - 1]); });
  return out;
}

}  // namespace

std::optional<Point> common_point(std::span<const VPolytope> sets) {
  const System sys = intersection_system(sets);
  const LpResult r = solve_lp(sys.a, sys.b, {});
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  return point_from(sets[0], r.x);
}

bool intersect_nonempty(std::span<const VPolytope> sets) {
  const System sys = intersection_system(sets);
  return solve_lp(sys.a, sys.b, {}).status == LpStatus::kOptimal;
}

SimplicialComplex nerve(const Representation& rep, int up_to_dim) {
  validate(rep);
  const int n = rep.size();
  if (n > 16) throw LimitError("nerve computation is limited to 16 sets");
  if (up_to_dim < 0) throw InputError("nerve dimension must be non-negative");
  std::vector<Face> faces{Face()};
  std::vector<Face> layer;
  for (Vertex v = 1; v <= n; ++v) layer.push_back(Face::singleton(v));
  faces.insert(faces.end(), layer.begin(), layer.end());
  const int max_size = std::min(up_to_dim + 1, n);
  for (int size = 2; size <= max_size && !layer.empty(); ++size) {
    std::vector<Face> next;
    for (Face f : layer) {
      for (Vertex v = f.max_vertex() + 1; v <= n; ++v) {
        const Face g = f.with(v);
        // Every codimension-one subface must already be in the nerve.
        bool candidate = true;
        g.for_each([&](Vertex u) {
          if (candidate && !std::binary_search(layer.begin(), layer.end(), g.without(u))) {
            candidate = false;
          }
        });
        if (candidate && intersect_nonempty(select(rep, g))) next.push_back(g);
      }
    }
    std::sort(next.begin(), next.end());
    faces.insert(faces.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return SimplicialComplex::from_faces(n, std::move(faces));
}

SimplicialComplex full_nerve(const Representation& rep) {
  return helly_completion(nerve(rep, rep.dim), rep.dim);
}

Representation split_representation(int v_size, const std::vector<LineRep>& reps) {
  if (reps.empty()) throw InputError("split construction needs at least one apex");
  if (v_size < 0 || v_size + static_cast<int>(reps.size()) > 16) {
    throw InputError("split construction supports at most 16 vertices");
  }
  for (const LineRep& r : reps) {
    if (static_cast<int>(r.size()) != v_size) {
      throw InputError("each line representation needs one entry per base vertex");
    }
  }
  const int w_size = static_cast<int>(reps.size());
  const int corners = std::max(w_size, 3);

  // Corners on the unit circle from t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)); an
  // increasing sequence of t keeps them in angular order.
  std::vector<Point> corner;
  for (int k = 0; k < corners; ++k) {
    const Rational t = make_rational(2 * (2 * k - (corners - 1)), corners);
    const Rational denom = 1 + t * t;
    corner.push_back({(1 - t * t) / denom, 2 * t / denom});
  }
  Point center{0, 0};
  for (const Point& c : corner) {
    center[0] += c[0] / corners;
    center[1] += c[1] / corners;
  }
  auto lerp = [](const Point& a, const Point& b, const Rational& s) {
    return Point{a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])};
  };

  std::vector<std::vector<Point>> base_points(v_size, std::vector<Point>{center});
  std::vector<VPolytope> apex_sets;
  for (int w = 0; w < w_size; ++w) {
    const Point& a = corner[w];
    const Point& b = corner[(w + 1) % corners];
    const Point start = lerp(a, b, make_rational(1, 3));
    const Point end = lerp(a, b, make_rational(2, 3));
    apex_sets.emplace_back(2, std::vector<Point>{start, end});

    const LineRep& line = reps[w];
    bool any = false;
    int64_t lo = 0, hi = 0;
    for (const auto& iv : line) {
      if (!iv) continue;
      if (iv->left > iv->right) throw InputError("interval with left > right");
      lo = any ? std::min(lo, iv->left) : iv->left;
      hi = any ? std::max(hi, iv->right) : iv->right;
      any = true;
    }
    // x -> (x - lo + 1) / (hi - lo + 2) lands strictly inside (0, 1).
    for (int v = 0; v < v_size; ++v) {
      if (!line[v]) continue;
      const Rational s0 = make_rational(line[v]->left - lo + 1, hi - lo + 2);
      const Rational s1 = make_rational(line[v]->right - lo + 1, hi - lo + 2);
      base_points[v].push_back(lerp(start, end, s0));
      if (s1 != s0) base_points[v].push_back(lerp(start, end, s1));
    }
  }

  Representation out;
  out.dim = 2;
  for (int v = 0; v < v_size; ++v) {
    out.sets.emplace_back(2, std::move(base_points[v]));
    out.names.push_back(std::to_string(v + 1));
  }
  for (int w = 0; w < w_size; ++w) {
    out.sets.push_back(apex_sets[w]);
    out.names.push_back(std::to_string(v_size + w + 1));
  }
  return out;
}

std::optional<std::pair<Rational, Rational>> projected_interval(std::span<const VPolytope> sets) {
  const System sys = intersection_system(sets);
  std::vector<Rational> cost(sys.columns);
  for (std::size_t j = 0; j < sets[0].points().size(); ++j) cost[j] = sets[0].points()[j][0];
  const LpResult low = solve_lp(sys.a, sys.b, cost);
  if (low.status != LpStatus::kOptimal) return std::nullopt;
  for (auto& c : cost) c = -c;
  const LpResult high = solve_lp(sys.a, sys.b, cost);
  return std::make_pair(low.value, Rational(-high.value));
}

bool projection_check(const Representation& rep) {
  validate(rep);
  if (rep.dim != 2) throw InputError("projection check is implemented for d = 2 only");
  const int n = rep.size();
  if (n > 8) throw LimitError("projection check is limited to 8 sets");
  std::vector<std::vector<std::optional<std::pair<Rational, Rational>>>> shadow(
      n + 1, std::vector<std::optional<std::pair<Rational, Rational>>>(n + 1));
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      shadow[i][j] = projected_interval(select(rep, Face::of({i, j})));
    }
  }
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      for (Vertex k = j + 1; k <= n; ++k) {
        const bool face = intersect_nonempty(select(rep, Face::of({i, j, k})));
        bool shared = true;
        Rational lo, hi;
        bool first = true;
        for (const auto& s : {shadow[i][j], shadow[i][k], shadow[j][k]}) {
          if (!s) {
            shared = false;
            break;
          }
          if (first || s->first > lo) lo = s->first;
          if (first || s->second < hi) hi = s->second;
          first = false;
        }
        if (shared && lo > hi) shared = false;
        if (face != shared) return false;
      }
    }
  }
  return true;
}

}  // namespace nervekit
