#include "nervekit/complex.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "nervekit/errors.h"

namespace nervekit {
namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("ground set size " + std::to_string(n) + " outside 0..32");
  }
}

void sort_unique(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::span<const Face> facets) {
  check_ground(n);
  const Face ground = Face::full(n);
  std::unordered_set<uint32_t> seen;
  std::vector<Face> faces;
  for (Face facet : facets) {
    if (!facet.is_subset_of(ground)) {
      throw InputError("facet {" + to_string(facet) + "} has a vertex outside [" +
                       std::to_string(n) + "]");
    }
    // Walk all submasks of the facet, including the facet and ∅.
    const uint32_t full = facet.bits();
    uint32_t sub = full;
    while (true) {
      if (seen.insert(sub).second) faces.emplace_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & full;
    }
  }
  sort_unique(faces);
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int n, std::vector<Face> faces) {
  check_ground(n);
  sort_unique(faces);
  SimplicialComplex k(n, std::move(faces));
  validate(k);
  return k;
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
  check_ground(n);
  return SimplicialComplex(n, {});
}

SimplicialComplex SimplicialComplex::simplex(int n, Face s) {
  const Face facets[] = {s};
  return from_facets(n, facets);
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f);
}

Face SimplicialComplex::vertex_set() const {
  Face all;
  for (Face f : faces_) all |= f;
  return all;
}

int SimplicialComplex::dim() const {
  if (faces_.empty()) return -2;
  return faces_.back().dim();
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  // Faces are sorted by size, so only later faces can strictly contain a face.
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces_.size() && maximal; ++j) {
      if (faces_[i].is_subset_of(faces_[j])) maximal = false;
    }
    if (maximal) out.push_back(faces_[i]);
  }
  return out;
}

SimplicialComplex SimplicialComplex::with_ground_size(int n) const {
  check_ground(n);
  const Face ground = Face::full(n);
  for (Face f : faces_) {
    if (!f.is_subset_of(ground)) {
      throw InputError("face {" + to_string(f) + "} does not fit in [" + std::to_string(n) + "]");
    }
  }
  return SimplicialComplex(n, faces_);
}

void validate(const SimplicialComplex& k) {
  const Face ground = Face::full(k.n());
  const auto& faces = k.faces();
  if (!std::is_sorted(faces.begin(), faces.end()) ||
      std::adjacent_find(faces.begin(), faces.end()) != faces.end()) {
    throw InputError("faces are not in canonical order");
  }
  for (Face f : faces) {
    if (!f.is_subset_of(ground)) {
      throw InputError("face {" + to_string(f) + "} outside [" + std::to_string(k.n()) + "]");
    }
    if (f.empty()) continue;
    f.for_each([&](Vertex v) {
      if (!k.contains(f.without(v))) {
        throw InputError("not downward closed: {" + to_string(f) + "} lacks subface {" +
                         to_string(f.without(v)) + "}");
      }
    });
  }
}

SimplicialComplex link(const SimplicialComplex& k, Vertex v) {
  if (v < 1 || v > k.n() || !k.contains(Face::singleton(v))) {
    throw InputError("vertex " + std::to_string(v) + " is not a vertex of the complex");
  }
  std::vector<Face> faces;
  for (Face f : k.faces()) {
    if (f.contains(v)) faces.push_back(f.without(v));
  }
  return SimplicialComplex::from_faces(k.n(), std::move(faces));
}

SimplicialComplex cone(const SimplicialComplex& k, Vertex w) {
  if (w < 1 || w > kMaxVertices) throw InputError("apex label outside 1..32");
  if (k.is_void()) throw InputError("cannot cone over the void complex");
  if (k.vertex_set().contains(w)) {
    throw InputError("apex " + std::to_string(w) + " is already a vertex");
  }
  std::vector<Face> faces = k.faces();
  for (Face f : k.faces()) faces.push_back(f.with(w));
  return SimplicialComplex::from_faces(std::max(k.n(), w), std::move(faces));
}

SimplicialComplex clique_complex(const Graph& g) {
  std::vector<Face> faces{Face()};
  // Each clique is extended only by vertices above its largest label.
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const Face c = faces[i];
    Face common = g.vertices();
    c.for_each([&](Vertex v) { common &= g.neighbors(v); });
    common.for_each([&](Vertex v) {
      if (v > c.max_vertex()) faces.push_back(c.with(v));
    });
  }
  return SimplicialComplex::from_faces(g.n(), std::move(faces));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int d) {
  if (d < 0) throw InputError("skeleton dimension must be non-negative");
  std::vector<Face> faces;
  for (Face f : k.faces()) {
    if (f.size() <= d + 1) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(k.n(), std::move(faces));
}

SimplicialComplex helly_completion(const SimplicialComplex& s, int d) {
  if (d < 0) throw InputError("completion dimension must be non-negative");
  for (Face f : s.faces()) {
    if (f.size() > d + 1) {
      throw InputError("face {" + to_string(f) + "} exceeds dimension " + std::to_string(d));
    }
  }
  std::vector<Face> faces = s.faces();
  std::unordered_set<uint32_t> present;
  for (Face f : faces) present.insert(f.bits());

  std::vector<Face> layer;
  for (Face f : faces) {
    if (f.size() == d + 1) layer.push_back(f);
  }
  const Face ground = Face::full(s.n());
  while (!layer.empty()) {
    std::vector<Face> next;
    for (Face f : layer) {
      (ground - f).for_each([&](Vertex v) {
        if (v < f.max_vertex()) return;
        const Face g = f.with(v);
        bool all = true;
        f.for_each([&](Vertex u) {
          if (all && !present.contains(g.without(u).bits())) all = false;
        });
        if (all) next.push_back(g);
      });
    }
    for (Face g : next) present.insert(g.bits());
    faces.insert(faces.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return SimplicialComplex::from_faces(s.n(), std::move(faces));
}

Graph graph_of(const SimplicialComplex& k) {
  Graph g(k.n());
  for (Face f : k.faces()) {
    if (f.size() == 2) {
      const auto vs = f.vertices();
      g.add_edge(vs[0], vs[1]);
    }
  }
  return g;
}

}  // namespace nervekit
