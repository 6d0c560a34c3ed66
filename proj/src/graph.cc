#include "nervekit/graph.h"

#include <algorithm>
#include <string>

#include "nervekit/errors.h"

namespace nervekit {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph size " + std::to_string(n) + " outside 0..32");
  }
}

Graph Graph::from_code(int n, uint64_t code) {
  if (n > 11) throw InputError("edge codes support at most 11 vertices");
  Graph g(n);
  int k = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++k) {
      if ((code >> k) & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::num_edges() const {
  int twice = 0;
  for (Face row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= n_; ++u) {
    adj_[u - 1].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

uint64_t Graph::code() const {
  if (n_ > 11) throw InputError("edge codes support at most 11 vertices");
  uint64_t code = 0;
  int k = 0;
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v, ++k) {
      if (adjacent(u, v)) code |= uint64_t{1} << k;
    }
  }
  return code;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 1 || v < 1 || u > n_ || v > n_) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} outside [" + std::to_string(n_) + "]");
  }
  if (u == v) throw InputError("loops are not allowed");
  adj_[u - 1] = adj_[u - 1].with(v);
  adj_[v - 1] = adj_[v - 1].with(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u - 1] = adj_[u - 1].without(v);
  adj_[v - 1] = adj_[v - 1].without(u);
}

Graph Graph::induced(Face keep) const {
  Graph g(n_);
  for (Vertex v = 1; v <= n_; ++v) {
    if (keep.contains(v)) g.adj_[v - 1] = adj_[v - 1] & keep;
  }
  return g;
}

std::vector<Vertex> mcs_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(n + 1, 0);
  Face numbered;
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (numbered.contains(v)) continue;
      if (best == 0 || weight[v] > weight[best]) best = v;
    }
    visit.push_back(best);
    numbered = numbered.with(best);
    g.neighbors(best).for_each([&](Vertex u) { ++weight[u]; });
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

namespace {

bool is_perfect_elimination(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> position(g.n() + 1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) position[order[i]] = i;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const Vertex v = order[i];
    Face later;
    g.neighbors(v).for_each([&](Vertex u) {
      if (position[u] > i) later = later.with(u);
    });
    if (later.empty()) continue;
    Vertex first = 0;
    later.for_each([&](Vertex u) {
      if (first == 0 || position[u] < position[first]) first = u;
    });
    if (!(later.without(first)).is_subset_of(g.neighbors(first))) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> perfect_elimination_order(const Graph& g) {
  auto order = mcs_order(g);
  if (!is_perfect_elimination(g, order)) return std::nullopt;
  return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

std::vector<Face> chordal_maximal_cliques(const Graph& g, const std::vector<Vertex>& peo) {
  std::vector<int> position(g.n() + 1);
  for (int i = 0; i < static_cast<int>(peo.size()); ++i) position[peo[i]] = i;
  std::vector<Face> candidates;
  for (int i = 0; i < static_cast<int>(peo.size()); ++i) {
    Face c = Face::singleton(peo[i]);
    g.neighbors(peo[i]).for_each([&](Vertex u) {
      if (position[u] > i) c = c.with(u);
    });
    candidates.push_back(c);
  }
  std::vector<Face> cliques;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j) continue;
      if (candidates[i].is_subset_of(candidates[j]) &&
          (candidates[i] != candidates[j] || j < i)) {
        maximal = false;
      }
    }
    if (maximal) cliques.push_back(candidates[i]);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

}  // namespace nervekit
