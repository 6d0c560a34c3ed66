#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nervekit/graph.h"

namespace nervekit {

// Enumeration caps. NERVE_CENSUS_MAX_N, when set, replaces every n cap.
struct CensusLimits {
  int max_graph_n = 7;
  int max_poset_n = 6;
  int max_complex_n = 5;
  int max_split_side = 3;

  static CensusLimits from_env();
  // Every cap raised to at least n.
  CensusLimits raised_to(int n) const;
};

struct Check {
  std::string name;
  bool ok = false;
};

// A table plus named boolean checks. Serializations are deterministic and do
// not include the wall time.
struct CensusReport {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool passed() const;
  std::string to_csv() const;
  std::string to_json() const;
};

// f₁(n): labeled interval graphs on [n], by recognition over all 2^C(n,2)
// graphs in contiguous code ranges per worker.
uint64_t count_interval_graphs(int n, int jobs = 1, const CensusLimits& limits = {});

// Second route to f₁(n): distinct graphs realized by interval tuples with
// endpoints in [1, span]. span = n suffices because a clique path has at most
// n cliques. Requires n <= 5.
uint64_t count_interval_graphs_by_endpoints(int n, int span);

// g(n): labeled interval orders on [n].
uint64_t count_interval_orders(int n, const CensusLimits& limits = {});

// All labeled posets on [n]; used for sanity tables.
uint64_t count_posets(int n, const CensusLimits& limits = {});

// g₁(n): labeled chordal graphs via perfect elimination orderings.
uint64_t count_1_collapsible(int n, int jobs = 1, const CensusLimits& limits = {});

// Graphs on [n] where 1-collapsibility of the clique complex (collapse engine)
// and chordality (elimination ordering) disagree. Requires n <= 6.
uint64_t chordal_collapse_disagreements(int n);

// Clique on the first half, arbitrary edges across. Returns the number of
// distinct graphs produced that are chordal; the construction makes
// 2^(floor(n/2) * ceil(n/2)) of them. Requires n <= 8.
uint64_t split_graph_witnesses(int n);

struct CollapsibleCount {
  int n = 0;
  int d = 0;
  uint64_t families = 0;               // all downward-closed families, void included
  uint64_t collapsible = 0;            // of those, d-collapsible
  uint64_t full_complexes = 0;         // families with vertex set exactly [n]
  uint64_t full_collapsible = 0;       // g_d(n) in the vertex-set-[n] convention
  int skeleton_bound_log2 = 0;         // C(n,0) + ... + C(n,d+1)
  bool skeleta_distinct = false;       // K -> skeleton(K, d) injective on collapsible K
};

CollapsibleCount count_d_collapsible(int n, int d, const CensusLimits& limits = {});

CensusReport verify_sandwich(int n, int jobs = 1, const CensusLimits& limits = {});

// Builds every tuple of clique complexes of interval graphs on V, checks the
// split complexes are distinct, recover their links, are realized by the
// planar construction and are 2-collapsible. Only d = 2 is supported.
CensusReport split_count_check(int d, int v_size, int w_size, const CensusLimits& limits = {});

// Exact g(n) and f₁(n) next to the leading terms (n!)^2 √n (6/π²)^n and
// exp(2n log n - (2 + log(π²/6)) n). Report only.
CensusReport asymptotic_report(int n_max, const CensusLimits& limits = {});

}  // namespace nervekit
