#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nervekit/graph.h"
#include "nervekit/interval.h"
#include "nervekit/poset.h"

namespace nervekit {

// Raised when decode meets a graph that encode cannot have produced.
class NotCodecImage : public std::runtime_error {
 public:
  explicit NotCodecImage(const std::string& what) : std::runtime_error(what) {}
};

// The shifted intervals J_i = [L(i), R(i) + 2] for i <= m and J_{m+1} = [0, 1].
IntervalRep encoding_intervals(const CompressedRep& rep);

// Interval order on [m] -> interval graph on [m+1] through the canonical
// compressed representation. Throws PreconditionError for non-interval orders.
Graph encode(const Poset& p);

// Recovers the compressed representation used by encode. Vertex n's
// neighbourhood gives A_1; each later step peels off the vertices whose closed
// neighbourhood is the smallest. Throws NotCodecImage when a step's
// neighbourhoods are not nested or the result does not re-encode to `g`.
CompressedRep decode(const Graph& g);

struct RoundtripReport {
  int n = 0;
  uint64_t orders = 0;    // g(n-1)
  uint64_t images = 0;    // distinct encoded graphs
  uint64_t failures = 0;  // decode mismatches or errors
};

// Runs decode(encode(P)) over every interval order P on [n-1]. Requires
// 2 <= n <= 8.
RoundtripReport roundtrip_check(int n, int jobs = 1);

// "n,orders,images,failures"
std::string to_csv(const RoundtripReport& r);

struct RelabelReport {
  int n = 0;
  uint64_t pairs = 0;   // g(n-1) * n
  uint64_t images = 0;  // distinct graphs
  uint64_t max_fiber = 0;
};

// Optional experiment: also choose which of the n vertices plays [0, 1] and
// measure how far from injective the extended map is.
RelabelReport relabel_experiment(int n);

}  // namespace nervekit
