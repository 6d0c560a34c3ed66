#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nervekit/complex.h"

namespace nervekit {

struct CollapseStep {
  Face free_face;
  Face facet;
  bool operator==(const CollapseStep&) const = default;
};

// A sequence of d-collapses taking a complex down to {∅} or the void complex.
struct CollapseCertificate {
  int d = 0;
  std::vector<CollapseStep> steps;
  bool operator==(const CollapseCertificate&) const = default;
};

// Pairs (σ, F) with |σ| <= d and F the unique facet containing σ, sorted by σ
// then F in canonical order.
std::vector<CollapseStep> free_faces(const SimplicialComplex& k, int d);

// Removes every face containing σ. Throws PreconditionError unless σ is a free
// face of dimension at most d-1.
SimplicialComplex collapse_step(const SimplicialComplex& k, Face sigma, int d);

// Exact d-collapsibility by depth-first search over collapse choices, with a
// memo of visited complexes. Moves are tried largest free face first; that is
// only an ordering, every choice is explored before giving up.
//
// The memo is per instance and survives across calls, so one searcher can be
// reused over many related complexes. Not thread-safe.
class CollapseSearcher {
 public:
  explicit CollapseSearcher(std::size_t memo_capacity = std::size_t{1} << 20);

  std::optional<CollapseCertificate> find(const SimplicialComplex& k, int d);

  std::size_t states_visited() const { return states_visited_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  using Key = std::vector<uint32_t>;
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };
  // Outcome for a state: the first step of a successful sequence, or nothing
  // when the state is known to be stuck.
  using Outcome = std::optional<CollapseStep>;

  bool search(const Key& faces, int d, std::vector<CollapseStep>& out);
  const Outcome* lookup(const Key& key);
  void remember(const Key& key, Outcome outcome);

  std::size_t capacity_;
  std::size_t states_visited_ = 0;
  int memo_d_ = -1;
  std::list<Key> lru_;
  std::unordered_map<Key, std::pair<Outcome, std::list<Key>::iterator>, KeyHash> memo_;
};

std::optional<CollapseCertificate> is_d_collapsible(const SimplicialComplex& k, int d);

// One cone summand Δ_w ∗ w together with a (d-1)-collapse certificate of Δ_w.
struct ApexCollapse {
  Vertex apex = 0;
  SimplicialComplex link;
  CollapseCertificate certificate;
};

// 2^V ∪ ⋃_w (Δ_w ∗ w) as a complex on [n].
SimplicialComplex split_complex(int n, Face v, const std::vector<SimplicialComplex>& links,
                                const std::vector<Vertex>& apexes);

// Lifts each link certificate by adding its apex to every step, then collapses
// the remaining simplex 2^V. The result is a d-collapse certificate for the
// split complex. Throws PreconditionError if an input certificate does not
// replay at level d-1 or a link does not live on V.
CollapseCertificate cone_collapse_certificate(Face v, const std::vector<ApexCollapse>& apexes,
                                              int d);

}  // namespace nervekit
