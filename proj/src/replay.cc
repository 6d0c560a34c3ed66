#include "nervekit/replay.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace nervekit {
namespace {

using VertexList = std::vector<int>;

VertexList listing(Face f) {
  VertexList out;
  for (int v = 1; v <= kMaxVertices; ++v) {
    if (f.contains(v)) out.push_back(v);
  }
  return out;
}

bool within(const VertexList& small, const VertexList& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string show(const VertexList& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

}  // namespace

ReplayResult replay(const SimplicialComplex& k, const CollapseCertificate& cert, int d) {
  std::set<VertexList> alive;
  for (Face f : k.faces()) alive.insert(listing(f));

  ReplayResult result;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const VertexList sigma = listing(cert.steps[i].free_face);
    const VertexList facet = listing(cert.steps[i].facet);
    auto fail = [&](const std::string& why) {
      result.ok = false;
      result.failed_step = static_cast<int>(i);
      result.message = "step " + std::to_string(i + 1) + ": " + why;
      return result;
    };
    const int size = static_cast<int>(sigma.size());
    result.min_d = std::max(result.min_d, size);
    if (d >= 0 && size > d) {
      return fail(show(sigma) + " has dimension " + std::to_string(size - 1) + " > " +
                  std::to_string(d - 1));
    }
    if (!alive.contains(sigma)) return fail(show(sigma) + " is not a face");
    if (!alive.contains(facet)) return fail(show(facet) + " is not a face");
    if (!within(sigma, facet)) return fail(show(sigma) + " is not inside " + show(facet));
    for (const VertexList& g : alive) {
      if (g.size() > facet.size() && within(facet, g)) {
        return fail(show(facet) + " is not a facet");
      }
      if (within(sigma, g) && !within(g, facet)) {
        return fail(show(sigma) + " also lies in " + show(g));
      }
    }
    for (auto it = alive.begin(); it != alive.end();) {
      it = within(sigma, *it) ? alive.erase(it) : std::next(it);
    }
  }
  if (alive.size() > 1 || (alive.size() == 1 && !alive.begin()->empty())) {
    result.ok = false;
    result.failed_step = static_cast<int>(cert.steps.size());
    result.message = std::to_string(alive.size()) + " faces remain after the last step";
    return result;
  }
  result.ok = true;
  return result;
}

}  // namespace nervekit
