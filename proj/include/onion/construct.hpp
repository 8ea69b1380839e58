#pragma once

#include <functional>
#include <vector>

#include "onion/geometry.hpp"
#include "onion/tsp.hpp"

namespace onion {

enum class MergeOrder {
  OutermostFirst,  // host starts at layer 0, guests work inward
  InnermostFirst,  // host starts at the innermost layer, guests work outward
};

// Greedy construction from a start city; distance ties pick the smaller id.
// Throws InputError("invalid start id") for an unknown start.
Tour nearest_neighbor(const Instance& inst, int start);

// Joins two disjoint cycles into one by the cheapest 2-edge reconnection:
// every host edge x every guest edge x both guest orientations. Guests of
// size 1 or 2 degrade to cheapest (chain) insertion. Equal-gain candidates
// resolve by smallest (host edge index, guest edge index, orientation).
// Throws InputError("overlapping id sets") when the cycles share an id.
std::vector<int> splice(const std::vector<int>& host,
                        const std::vector<int>& guest, const Instance& inst);

// Applied to the combined cycle after each splice when supplied, so a tour
// improver can run between merges instead of only once at the end.
using CycleHook = std::function<std::vector<int>(std::vector<int>)>;

// Folds splice over the layers in the requested order.
// Throws InputError("layers do not match instance") when the layer lists
// are not a partition of the instance's ids.
Tour layer_merge(const Instance& inst, const ConvexLayers& layers,
                 MergeOrder order, const CycleHook& improve_between = {});

}  // namespace onion
