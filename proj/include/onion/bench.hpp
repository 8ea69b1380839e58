#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "onion/construct.hpp"
#include "onion/tsp.hpp"

namespace onion {

// xorshift64* with the multiplier 2685821657736338717; pinned bit-exactly
// so instances and reports reproduce across platforms and languages.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed)
      : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}
  uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 2685821657736338717ull;
  }
  // uniform in [0, 1): next() / 2^64
  double uniform() { return (double)next() * 0x1p-64; }
};

// n points uniform in [0,1000) x [0,1000), x drawn before y per point;
// exact coordinate duplicates are redrawn by continuing the stream.
// Throws InputError for n < 1.
Instance gen_random(int n, uint64_t seed);

// n points on the circle of radius 450 around (500,500), one angle drawn
// per point, same duplicate-redraw rule. The result is in convex position.
Instance gen_circle(int n, uint64_t seed);

enum class ConstructKind { NearestNeighbor, Layers };
enum class ImproveKind { None, TwoOpt, ThreeOpt };

// A named solver recipe, e.g. "nn+2opt", "layers-inner+3opt+each".
struct PipelineSpec {
  ConstructKind construct = ConstructKind::Layers;
  MergeOrder order = MergeOrder::OutermostFirst;
  ImproveKind improve = ImproveKind::None;
  bool improve_each_merge = false;  // run the improver after every merge too
  int start = 0;                    // nearest-neighbor start city

  std::string name() const;
  // Grammar: ("nn" | "layers" | "layers-inner") ["+2opt" | "+3opt"] ["+each"].
  // Throws InputError("unknown pipeline <name>") on anything else.
  static PipelineSpec parse(const std::string& text);
};

struct PipelineRun {
  Tour tour;
  int layer_count = 0;
  double time_ms = 0.0;
};

PipelineRun run_pipeline(const Instance& inst, const PipelineSpec& spec);

struct ExperimentConfig {
  int n = 10;
  int instances = 1;  // seeds used: seed, seed+1, ..., seed+instances-1
  uint64_t seed = 1;
  std::vector<PipelineSpec> pipelines;
  bool circle = false;  // sample instances on a circle instead of uniformly
  bool gaps = true;     // score against the exact optimum (needs n <= 18)
  int threads = 1;      // worker threads; output is identical for any count
};

struct BenchRow {
  uint64_t seed = 0;
  std::string pipeline;
  double length = 0.0;
  std::optional<double> optimum;
  std::optional<double> gap_percent;
  double time_ms = 0.0;
};

struct BenchAggregate {
  std::string pipeline;
  double mean_gap = 0.0;
  double max_gap = 0.0;
};

struct BenchReport {
  ExperimentConfig config;
  std::vector<BenchRow> rows;  // sorted by (seed, pipeline name)
  std::vector<BenchAggregate> aggregates;  // per pipeline, sorted by name
};

// Runs every (seed, pipeline) cell, scores against held_karp when gaps are
// requested, and assembles the sorted report. Cells may run on several
// threads; the report is byte-stable regardless.
// Throws CapError("no exact oracle at this size") if gaps && n > 18.
BenchReport run_experiment(const ExperimentConfig& config);

}  // namespace onion
