#pragma once

#include <functional>

#include "nervekit/complex.h"
#include "nervekit/poset.h"

namespace nervekit {

// Every labeled strict partial order on [n], each exactly once. Orders on [k+1]
// are grown from orders on [k] by choosing the down-set and up-set of k+1.
void for_each_poset(int n, const std::function<void(const Poset&)>& visit);

// Same growth, restricted to (2+2)-free orders. Every restriction of an
// interval order is an interval order, so pruning at each level is exact.
void for_each_interval_order(int n, const std::function<void(const Poset&)>& visit);

// Every downward-closed family of subsets of [n], the void complex included.
// Requires n <= 6.
void for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& visit);

}  // namespace nervekit
