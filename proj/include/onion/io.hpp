#pragma once

#include <optional>
#include <string>

#include "onion/bench.hpp"
#include "onion/geometry.hpp"
#include "onion/tsp.hpp"

namespace onion {

// CSV instances: either a literal `id,x,y` header with one row per point,
// or headerless `x,y` rows that get ids in row order. Throws InputError
// ("duplicate id", "empty point set", parse errors naming the line).
Instance parse_csv(const std::string& text);

// `id,x,y` header plus one row per point; coordinates use enough digits
// to round-trip exactly, so parse_csv(render_csv(i)) == i.
std::string render_csv(const Instance& inst);

// TSPLIB subset: NAME, TYPE: TSP, DIMENSION, EDGE_WEIGHT_TYPE (EUC_2D or
// ATT), NODE_COORD_SECTION with 1-based ids, EOF. Throws InputError, e.g.
// "unsupported metric GEO" or "dimension mismatch".
Instance parse_tsplib(const std::string& text);

// One solver run in reportable form.
struct SolveResult {
  std::string instance_name;
  // pipeline descriptor
  std::string construct;  // "layers", "nn", "brute", "held-karp"
  std::string improve;    // "none", "2opt", "3opt"
  std::string order;      // "outer", "inner"
  uint64_t seed = 0;      // generator seed when known, else 0
  bool improve_each_merge = false;

  Tour tour;
  std::optional<double> optimum;
  std::optional<double> gap_percent;
  int layer_count = 0;
  double wall_time_ms = 0.0;
};

// JSON emission. Keys are always sorted and every real is printed with
// exactly nine decimals, so identical values give identical bytes.
// Timing fields are included only when with_times is set; they are the one
// part of a result that can never be reproducible.
std::string solve_result_json(const SolveResult& result, bool with_times);
std::string bench_report_json(const BenchReport& report, bool with_times);
std::string layers_json(const Instance& inst, const ConvexLayers& layers,
                        const std::string& algo);

// Deterministic SVG: points as circles, one polygon per layer in cycling
// stroke colors, the tour as an explicitly closed polyline, viewBox fitted
// with a 5% margin. Pass null for parts you do not want drawn (not both).
std::string write_svg(const Instance& inst, const ConvexLayers* layers,
                      const Tour* tour);

}  // namespace onion
