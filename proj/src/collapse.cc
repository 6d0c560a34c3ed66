#include "nervekit/collapse.h"

#include <algorithm>
#include <string>

#include "nervekit/errors.h"
#include "nervekit/replay.h"

namespace nervekit {
namespace {

using FaceBits = std::vector<uint32_t>;

FaceBits bits_of(const SimplicialComplex& k) {
  FaceBits out;
  out.reserve(k.num_faces());
  for (Face f : k.faces()) out.push_back(f.bits());
  return out;
}

// Free faces of a canonically sorted face list.
std::vector<CollapseStep> free_faces_of(const FaceBits& faces, int d) {
  std::vector<uint32_t> facets;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces.size() && maximal; ++j) {
      if ((faces[i] & ~faces[j]) == 0) maximal = false;
    }
    if (maximal) facets.push_back(faces[i]);
  }
  std::vector<CollapseStep> out;
  for (uint32_t sigma : faces) {
    if (Face(sigma).size() > d) break;
    uint32_t owner = 0;
    int owners = 0;
    for (uint32_t f : facets) {
      if ((sigma & ~f) == 0) {
        owner = f;
        if (++owners > 1) break;
      }
    }
    if (owners == 1) out.push_back({Face(sigma), Face(owner)});
  }
  return out;
}

FaceBits remove_star(const FaceBits& faces, uint32_t sigma) {
  FaceBits out;
  out.reserve(faces.size());
  for (uint32_t f : faces) {
    if ((sigma & ~f) != 0) out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<CollapseStep> free_faces(const SimplicialComplex& k, int d) {
  auto steps = free_faces_of(bits_of(k), d);
  std::sort(steps.begin(), steps.end(), [](const CollapseStep& a, const CollapseStep& b) {
    if (a.free_face != b.free_face) return a.free_face < b.free_face;
    return a.facet < b.facet;
  });
  return steps;
}

SimplicialComplex collapse_step(const SimplicialComplex& k, Face sigma, int d) {
  if (sigma.size() > d) {
    throw PreconditionError("face {" + to_string(sigma) + "} has dimension above " +
                            std::to_string(d - 1));
  }
  const auto frees = free_faces_of(bits_of(k), d);
  const bool is_free = std::any_of(frees.begin(), frees.end(),
                                   [&](const CollapseStep& s) { return s.free_face == sigma; });
  if (!is_free) throw PreconditionError("face {" + to_string(sigma) + "} is not free");
  std::vector<Face> faces;
  for (Face f : k.faces()) {
    if (!sigma.is_subset_of(f)) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(k.n(), std::move(faces));
}

std::size_t CollapseSearcher::KeyHash::operator()(const Key& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (uint32_t x : key) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h;
}

CollapseSearcher::CollapseSearcher(std::size_t memo_capacity)
    : capacity_(std::max<std::size_t>(memo_capacity, 1)) {}

const CollapseSearcher::Outcome* CollapseSearcher::lookup(const Key& key) {
  auto it = memo_.find(key);
  if (it == memo_.end()) return nullptr;
  lru_.splice(lru_.begin(), lru_, it->second.second);
  return &it->second.first;
}

void CollapseSearcher::remember(const Key& key, Outcome outcome) {
  auto it = memo_.find(key);
  if (it != memo_.end()) {
    it->second.first = outcome;
    lru_.splice(lru_.begin(), lru_, it->second.second);
    return;
  }
  if (memo_.size() >= capacity_) {
    memo_.erase(lru_.back());
    lru_.pop_back();
  }
  lru_.push_front(key);
  memo_.emplace(key, std::make_pair(outcome, lru_.begin()));
}

bool CollapseSearcher::search(const Key& faces, int d, std::vector<CollapseStep>& out) {
  if (faces.size() <= 1) return true;
  if (const Outcome* hit = lookup(faces)) {
    if (!hit->has_value()) return false;
    const CollapseStep step = **hit;
    out.push_back(step);
    if (search(remove_star(faces, step.free_face.bits()), d, out)) return true;
    out.pop_back();
  }
  ++states_visited_;
  auto moves = free_faces_of(faces, d);
  std::stable_sort(moves.begin(), moves.end(), [](const CollapseStep& a, const CollapseStep& b) {
    return a.free_face.size() > b.free_face.size();
  });
  for (const CollapseStep& move : moves) {
    out.push_back(move);
    if (search(remove_star(faces, move.free_face.bits()), d, out)) {
      remember(faces, move);
      return true;
    }
    out.pop_back();
  }
  remember(faces, std::nullopt);
  return false;
}

std::optional<CollapseCertificate> CollapseSearcher::find(const SimplicialComplex& k, int d) {
  if (d < 0) throw InputError("collapse dimension must be non-negative");
  if (d != memo_d_) {
    memo_.clear();
    lru_.clear();
    memo_d_ = d;
  }
  CollapseCertificate cert;
  cert.d = d;
  if (!search(bits_of(k), d, cert.steps)) return std::nullopt;
  return cert;
}

std::optional<CollapseCertificate> is_d_collapsible(const SimplicialComplex& k, int d) {
  CollapseSearcher searcher;
  return searcher.find(k, d);
}

SimplicialComplex split_complex(int n, Face v, const std::vector<SimplicialComplex>& links,
                                const std::vector<Vertex>& apexes) {
  if (links.size() != apexes.size()) throw InputError("one link per apex required");
  std::vector<Face> facets{v};
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (v.contains(apexes[i])) throw InputError("apex inside the base vertex set");
    if (!links[i].vertex_set().is_subset_of(v)) {
      throw InputError("link of apex " + std::to_string(apexes[i]) + " leaves the base set");
    }
    for (Face f : links[i].facets()) facets.push_back(f.with(apexes[i]));
  }
  return SimplicialComplex::from_facets(n, facets);
}

CollapseCertificate cone_collapse_certificate(Face v, const std::vector<ApexCollapse>& apexes,
                                              int d) {
  if (d < 1) throw PreconditionError("cone collapse needs d >= 1");
  CollapseCertificate out;
  out.d = d;
  for (const ApexCollapse& a : apexes) {
    if (!a.link.vertex_set().is_subset_of(v)) {
      throw PreconditionError("link of apex " + std::to_string(a.apex) + " leaves the base set");
    }
    const ReplayResult r = replay(a.link, a.certificate, d - 1);
    if (!r.ok) {
      throw PreconditionError("certificate for apex " + std::to_string(a.apex) +
                              " does not replay: " + r.message);
    }
    if (a.link.is_void()) continue;
    bool apex_removed = false;
    for (const CollapseStep& s : a.certificate.steps) {
      out.steps.push_back({s.free_face.with(a.apex), s.facet.with(a.apex)});
      if (s.free_face.empty()) apex_removed = true;
    }
    if (!apex_removed) {
      const Face w = Face::singleton(a.apex);
      out.steps.push_back({w, w});
    }
  }
  out.steps.push_back({Face(), v});
  return out;
}

}  // namespace nervekit
