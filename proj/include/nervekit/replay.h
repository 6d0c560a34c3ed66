#pragma once

#include <string>

#include "nervekit/collapse.h"

namespace nervekit {

struct ReplayResult {
  bool ok = false;
  // Index of the failing step, or -1.
  int failed_step = -1;
  std::string message;
  // Smallest d for which every step is a legal d-collapse.
  int min_d = 0;
};

// Checks a certificate step by step against `k`. Deliberately built on its own
// face bookkeeping so that it does not share code with CollapseSearcher.
// With d < 0 the dimension bound is not enforced, only reported via min_d.
ReplayResult replay(const SimplicialComplex& k, const CollapseCertificate& cert, int d);

}  // namespace nervekit
