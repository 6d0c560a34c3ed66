#include "nervekit/interval.h"

#include <algorithm>
#include <string>
#include <tuple>
#include <unordered_set>

#include "nervekit/errors.h"

namespace nervekit {

IntervalRep::IntervalRep(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.size() > kMaxVertices) throw InputError("more than 32 intervals");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].left > intervals_[i].right) {
      throw InputError("interval " + std::to_string(i + 1) + " has left endpoint " +
                       std::to_string(intervals_[i].left) + " > right endpoint " +
                       std::to_string(intervals_[i].right));
    }
  }
}

int CompressedRep::left(Vertex v) const {
  for (int i = 0; i < size(); ++i) {
    if (a[i].contains(v)) return 2 * i + 1;
  }
  throw InputError("element " + std::to_string(v) + " has no left endpoint");
}

int CompressedRep::right(Vertex v) const {
  for (int i = 0; i < static_cast<int>(b.size()); ++i) {
    if (b[i].contains(v)) return 2 * i + 2;
  }
  throw InputError("element " + std::to_string(v) + " has no right endpoint");
}

IntervalRep CompressedRep::to_intervals() const {
  std::vector<Interval> out;
  for (Vertex v = 1; v <= size(); ++v) out.push_back({left(v), right(v)});
  return IntervalRep(std::move(out));
}

void validate(const CompressedRep& rep) {
  const int m = rep.size();
  if (static_cast<int>(rep.b.size()) != m) throw InputError("A and B lists differ in length");
  const Face ground = Face::full(m);
  auto check_partition = [&](const std::vector<Face>& parts, const char* name) {
    Face seen;
    for (Face part : parts) {
      if (!part.is_subset_of(ground)) {
        throw InputError(std::string(name) + " holds an element outside [" + std::to_string(m) +
                         "]");
      }
      if (part.intersects(seen)) {
        throw InputError(std::string(name) + " assigns an element twice");
      }
      seen |= part;
    }
    if (seen != ground) throw InputError(std::string(name) + " misses an element");
  };
  check_partition(rep.a, "A");
  check_partition(rep.b, "B");
  for (Vertex v = 1; v <= m; ++v) {
    if (rep.left(v) > rep.right(v) - 1) {
      throw InputError("element " + std::to_string(v) + " ends before it starts");
    }
  }
  // Occupied coordinates 1, 2, 3, ... must form a prefix.
  bool ended = false;
  for (int i = 0; i < m; ++i) {
    for (Face slot : {rep.a[i], rep.b[i]}) {
      if (slot.empty()) {
        ended = true;
      } else if (ended) {
        throw InputError("occupied endpoint coordinates are not consecutive from 1");
      }
    }
  }
}

Graph interval_graph(const IntervalRep& rep) {
  Graph g(rep.size());
  for (Vertex i = 1; i <= rep.size(); ++i) {
    for (Vertex j = i + 1; j <= rep.size(); ++j) {
      if (std::max(rep[i].left, rep[j].left) <= std::min(rep[i].right, rep[j].right)) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

Poset interval_order(const IntervalRep& rep) {
  const int n = rep.size();
  std::vector<Face> up(n);
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = 1; j <= n; ++j) {
      if (rep[i].right < rep[j].left) up[i - 1] = up[i - 1].with(j);
    }
  }
  return Poset::from_up_sets(n, std::move(up));
}

namespace {

// Depth-first search for an order of the maximal cliques in which every vertex
// occupies a contiguous block. A state is (cliques used, last clique); only
// failures are memoized.
class CliqueArranger {
 public:
  explicit CliqueArranger(std::vector<Face> cliques) : cliques_(std::move(cliques)) {}

  std::optional<std::vector<int>> arrange() {
    const int k = static_cast<int>(cliques_.size());
    std::vector<int> order;
    if (k == 0) return order;
    for (int first = 0; first < k; ++first) {
      order.assign(1, first);
      if (extend(uint32_t{1} << first, first, order)) return order;
    }
    return std::nullopt;
  }

 private:
  bool extend(uint32_t used, int last, std::vector<int>& order) {
    const int k = static_cast<int>(cliques_.size());
    if (order.size() == cliques_.size()) return true;
    const uint64_t key = (uint64_t{used} << 5) | static_cast<uint64_t>(last);
    if (dead_.contains(key)) return false;
    Face seen;
    for (int i = 0; i < k; ++i) {
      if ((used >> i) & 1u) seen |= cliques_[i];
    }
    const Face closed = seen - cliques_[last];
    for (int next = 0; next < k; ++next) {
      if ((used >> next) & 1u) continue;
      if (cliques_[next].intersects(closed)) continue;
      order.push_back(next);
      if (extend(used | (uint32_t{1} << next), next, order)) return true;
      order.pop_back();
    }
    dead_.insert(key);
    return false;
  }

  std::vector<Face> cliques_;
  std::unordered_set<uint64_t> dead_;
};

}  // namespace

std::optional<IntervalRep> is_interval_graph(const Graph& g) {
  if (g.n() > 12) throw InputError("interval recognition is capped at 12 vertices");
  const auto peo = perfect_elimination_order(g);
  if (!peo) return std::nullopt;
  const auto cliques = chordal_maximal_cliques(g, *peo);
  CliqueArranger arranger(cliques);
  const auto order = arranger.arrange();
  if (!order) return std::nullopt;
  std::vector<Interval> out(g.n(), Interval{0, -1});
  for (int pos = 0; pos < static_cast<int>(order->size()); ++pos) {
    cliques[(*order)[pos]].for_each([&](Vertex v) {
      Interval& iv = out[v - 1];
      if (iv.right < iv.left) iv.left = pos + 1;
      iv.right = pos + 1;
    });
  }
  return IntervalRep(std::move(out));
}

bool is_interval_order(const Poset& p) {
  const int n = p.n();
  for (Vertex a = 1; a <= n; ++a) {
    const Face above_a = p.successors(a);
    const Face near_a = Face::full(n) - above_a - p.predecessors(a) - Face::singleton(a);
    for (Vertex b : above_a.vertices()) {
      const Face near_b = Face::full(n) - p.successors(b) - p.predecessors(b) - Face::singleton(b);
      // c < d with c incomparable to b and d incomparable to a.
      bool found = false;
      near_b.for_each([&](Vertex c) {
        if (p.successors(c).intersects(near_a)) found = true;
      });
      if (found) return false;
    }
  }
  return true;
}

CompressedRep compress(const IntervalRep& rep) {
  const int m = rep.size();
  // (coordinate, 0 for left / 1 for right, element)
  std::vector<std::tuple<int64_t, int, Vertex>> events;
  for (Vertex v = 1; v <= m; ++v) {
    events.emplace_back(rep[v].left, 0, v);
    events.emplace_back(rep[v].right, 1, v);
  }
  std::sort(events.begin(), events.end());
  CompressedRep out{std::vector<Face>(m), std::vector<Face>(m)};
  int run = -1;
  int previous_type = 1;
  for (const auto& [coordinate, type, v] : events) {
    if (type != previous_type) ++run;
    previous_type = type;
    // Runs alternate left, right, left, ... starting with a left run.
    auto& slots = type == 0 ? out.a : out.b;
    slots[run / 2] = slots[run / 2].with(v);
  }
  return out;
}

std::optional<IntervalRep> magnitude_intervals(const Poset& p) {
  const int n = p.n();
  std::vector<Face> pred(n), succ(n);
  for (Vertex v = 1; v <= n; ++v) {
    pred[v - 1] = p.predecessors(v);
    succ[v - 1] = p.successors(v);
  }
  auto distinct = [](std::vector<Face> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
  };
  const auto pred_levels = distinct(pred);
  const auto succ_levels = distinct(succ);
  auto rank = [](const std::vector<Face>& levels, Face s) {
    return static_cast<int64_t>(std::lower_bound(levels.begin(), levels.end(), s) -
                                levels.begin()) + 1;
  };
  std::vector<Interval> out;
  const int64_t top = static_cast<int64_t>(succ_levels.size()) + 1;
  for (Vertex v = 1; v <= n; ++v) {
    const Interval iv{rank(pred_levels, pred[v - 1]), top - rank(succ_levels, succ[v - 1])};
    if (iv.left > iv.right) return std::nullopt;
    out.push_back(iv);
  }
  return IntervalRep(std::move(out));
}

CompressedRep canonical_compressed(const Poset& p) {
  if (!is_interval_order(p)) throw PreconditionError("poset contains an induced 2+2");
  const auto rep = magnitude_intervals(p);
  if (!rep) throw PreconditionError("magnitude ranks do not form intervals");
  return compress(*rep);
}

}  // namespace nervekit
