#include "nervekit/poset.h"

#include <string>

#include "nervekit/errors.h"

namespace nervekit {

Poset::Poset(int n) : n_(n), up_(n) {
  if (n < 0 || n > kMaxVertices) throw InputError("poset size outside 0..32");
}

Poset Poset::from_relations(int n, const std::vector<std::pair<Vertex, Vertex>>& less) {
  Poset p(n);
  for (auto [a, b] : less) {
    if (a < 1 || b < 1 || a > n || b > n) {
      throw InputError("relation " + std::to_string(a) + " < " + std::to_string(b) +
                       " outside [" + std::to_string(n) + "]");
    }
    p.up_[a - 1] = p.up_[a - 1].with(b);
  }
  // Warshall closure on bitmask rows.
  for (Vertex k = 1; k <= n; ++k) {
    for (Vertex i = 1; i <= n; ++i) {
      if (p.up_[i - 1].contains(k)) p.up_[i - 1] |= p.up_[k - 1];
    }
  }
  for (Vertex i = 1; i <= n; ++i) {
    if (p.up_[i - 1].contains(i)) throw InputError("relations contain a cycle");
  }
  return p;
}

Poset Poset::from_up_sets(int n, std::vector<Face> up) {
  if (static_cast<int>(up.size()) != n || !is_strict_order(n, up)) {
    throw InputError("up-sets do not form a strict partial order");
  }
  Poset p(n);
  p.up_ = std::move(up);
  return p;
}

Face Poset::predecessors(Vertex v) const {
  Face out;
  for (Vertex u = 1; u <= n_; ++u) {
    if (up_[u - 1].contains(v)) out = out.with(u);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Poset::cover_relations() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex a = 1; a <= n_; ++a) {
    up_[a - 1].for_each([&](Vertex b) {
      bool between = false;
      up_[a - 1].for_each([&](Vertex c) {
        if (up_[c - 1].contains(b)) between = true;
      });
      if (!between) out.emplace_back(a, b);
    });
  }
  return out;
}

Graph Poset::incomparability_graph() const {
  Graph g(n_);
  for (Vertex a = 1; a <= n_; ++a) {
    for (Vertex b = a + 1; b <= n_; ++b) {
      if (!comparable(a, b)) g.add_edge(a, b);
    }
  }
  return g;
}

bool is_strict_order(int n, const std::vector<Face>& up) {
  if (static_cast<int>(up.size()) != n) return false;
  const Face ground = Face::full(n);
  for (Vertex a = 1; a <= n; ++a) {
    const Face row = up[a - 1];
    if (!row.is_subset_of(ground) || row.contains(a)) return false;
    bool closed = true;
    row.for_each([&](Vertex b) {
      if (!up[b - 1].is_subset_of(row)) closed = false;
    });
    if (!closed) return false;
  }
  return true;
}

}  // namespace nervekit
