#include "nervekit/enumerate.h"

#include <algorithm>
#include <vector>

#include "nervekit/errors.h"
#include "nervekit/interval.h"

namespace nervekit {
namespace {

bool down_closed(const std::vector<Face>& up, Face s) {
  // x ∈ s and y < x imply y ∈ s.
  for (std::size_t y = 0; y < up.size(); ++y) {
    if (up[y].intersects(s) && !s.contains(static_cast<Vertex>(y + 1))) return false;
  }
  return true;
}

bool up_closed(const std::vector<Face>& up, Face s) {
  bool closed = true;
  s.for_each([&](Vertex x) {
    if (!up[x - 1].is_subset_of(s)) closed = false;
  });
  return closed;
}

void grow(std::vector<Face>& up, int n, bool interval_only,
          const std::function<void(const Poset&)>& visit) {
  const int k = static_cast<int>(up.size());
  if (k == n) {
    visit(Poset::from_up_sets(n, up));
    return;
  }
  const Face ground = Face::full(k);
  const Vertex fresh = k + 1;
  // Enumerate down-sets D as submasks of [k], then compatible up-sets U.
  uint32_t d_bits = ground.bits();
  while (true) {
    const Face down(d_bits);
    if (down_closed(up, down)) {
      Face allowed = ground - down;
      down.for_each([&](Vertex x) { allowed &= up[x - 1]; });
      uint32_t u_bits = allowed.bits();
      while (true) {
        const Face upper(u_bits);
        if (up_closed(up, upper)) {
          std::vector<Face> next = up;
          down.for_each([&](Vertex x) { next[x - 1] = next[x - 1].with(fresh); });
          next.push_back(upper);
          if (!interval_only || is_interval_order(Poset::from_up_sets(k + 1, next))) {
            grow(next, n, interval_only, visit);
          }
        }
        if (u_bits == 0) break;
        u_bits = (u_bits - 1) & allowed.bits();
      }
    }
    if (d_bits == 0) break;
    d_bits = (d_bits - 1) & ground.bits();
  }
}

}  // namespace

void for_each_poset(int n, const std::function<void(const Poset&)>& visit) {
  if (n < 0 || n > kMaxVertices) throw InputError("poset size outside 0..32");
  std::vector<Face> up;
  grow(up, n, false, visit);
}

void for_each_interval_order(int n, const std::function<void(const Poset&)>& visit) {
  if (n < 0 || n > kMaxVertices) throw InputError("poset size outside 0..32");
  std::vector<Face> up;
  grow(up, n, true, visit);
}

namespace {

struct ComplexWalker {
  int n;
  std::vector<uint32_t> order;  // nonempty subsets in canonical order
  uint64_t present = 1;         // bit s set when subset s is a face; ∅ always
  const std::function<void(const SimplicialComplex&)>& visit;

  void walk(std::size_t i) {
    if (i == order.size()) {
      std::vector<Face> faces;
      for (uint32_t s = 0; s < (uint32_t{1} << n); ++s) {
        if ((present >> s) & 1u) faces.emplace_back(s);
      }
      visit(SimplicialComplex::from_faces(n, std::move(faces)));
      return;
    }
    const uint32_t s = order[i];
    bool allowed = true;
    for (uint32_t b = s; b != 0 && allowed; b &= b - 1) {
      const uint32_t sub = s & ~(b & -b);
      if (!((present >> sub) & 1u)) allowed = false;
    }
    walk(i + 1);
    if (allowed) {
      present |= uint64_t{1} << s;
      walk(i + 1);
      present &= ~(uint64_t{1} << s);
    }
  }
};

}  // namespace

void for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& visit) {
  if (n < 0 || n > 6) throw LimitError("complex enumeration is limited to n <= 6");
  visit(SimplicialComplex::void_complex(n));
  ComplexWalker walker{n, {}, 1, visit};
  for (uint32_t s = 1; s < (uint32_t{1} << n); ++s) walker.order.push_back(s);
  std::sort(walker.order.begin(), walker.order.end(),
            [](uint32_t a, uint32_t b) { return Face(a) < Face(b); });
  walker.walk(0);
}

}  // namespace nervekit
