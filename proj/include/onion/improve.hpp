#pragma once

#include "onion/tsp.hpp"

namespace onion {

enum class ImproveStrategy {
  BestImprovement,  // scan every move, apply the single best per pass
};

struct ImproveConfig {
  // minimum accepted gain, relative to the current tour length; must be
  // positive so floating-point descent terminates
  double epsilon = 1e-9;
  // each pass applies one move; negative means no limit
  int max_passes = -1;
  ImproveStrategy strategy = ImproveStrategy::BestImprovement;
};

// Best-improvement 2-edge exchange until no move gains more than
// epsilon * current length. Deterministic: gain ties keep the move with the
// smallest removed-edge index pair. Throws on invalid tours.
Tour two_opt(const Tour& t, const Instance& inst,
             const ImproveConfig& cfg = {});

// Best-improvement over all 3-edge removals and all seven reconnections
// (the three pure 2-opt sub-moves included), with the same termination and
// tie rules, so a result is a local optimum for 2-opt as well.
Tour three_opt(const Tour& t, const Instance& inst,
               const ImproveConfig& cfg = {});

// True when any two non-adjacent tour edges properly intersect (touching
// endpoints do not count). Coordinates are taken at face value for any
// metric.
bool has_crossings(const Tour& t, const Instance& inst);

}  // namespace onion
