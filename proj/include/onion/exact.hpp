#pragma once

#include "onion/tsp.hpp"

namespace onion {

// Exhaustive search over the (n-1)!/2 distinct cyclic tours (first city
// fixed, direction canonicalized). Throws CapError("brute force capped at
// 10") above n = 10. Ties go to the lexicographically smaller canonical
// order, so the result is deterministic.
Tour brute_force(const Instance& inst);

// Subset dynamic programming with path reconstruction. The optimal length
// always matches brute_force where both apply; the tour itself may differ
// when several tours are co-optimal. Throws CapError above n = 18 (the
// table for n = 18 already weighs in around 20 MB).
Tour held_karp(const Instance& inst);

}  // namespace onion
