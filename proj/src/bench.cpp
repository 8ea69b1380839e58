#include "onion/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "onion/errors.hpp"
#include "onion/exact.hpp"
#include "onion/hull_graph.hpp"
#include "onion/improve.hpp"

namespace onion {

namespace {

bool coordinate_taken(const std::vector<Point>& pts, double x, double y) {
  for (const Point& p : pts)
    if (p.x == x && p.y == y) return true;
  return false;
}

Instance finish_instance(std::string name, std::vector<Point> pts,
                         Metric metric) {
  return {std::move(name), std::move(pts), metric};
}

}  // namespace

Instance gen_random(int n, uint64_t seed) {
  if (n < 1) throw InputError("empty point set");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  while ((int)pts.size() < n) {
    double x = rng.uniform() * 1000.0;
    double y = rng.uniform() * 1000.0;
    if (coordinate_taken(pts, x, y)) continue;
    pts.push_back({(int)pts.size(), x, y});
  }
  return finish_instance(
      "rand-n" + std::to_string(n) + "-s" + std::to_string(seed),
      std::move(pts), Metric::Euc2d);
}

Instance gen_circle(int n, uint64_t seed) {
  if (n < 1) throw InputError("empty point set");
  Rng rng(seed);
  std::vector<Point> pts;
  pts.reserve(n);
  while ((int)pts.size() < n) {
    double angle = rng.uniform() * 2.0 * M_PI;
    double x = 500.0 + 450.0 * std::cos(angle);
    double y = 500.0 + 450.0 * std::sin(angle);
    if (coordinate_taken(pts, x, y)) continue;
    pts.push_back({(int)pts.size(), x, y});
  }
  return finish_instance(
      "circle-n" + std::to_string(n) + "-s" + std::to_string(seed),
      std::move(pts), Metric::Euc2d);
}

std::string PipelineSpec::name() const {
  std::string out = construct == ConstructKind::NearestNeighbor
                        ? "nn"
                        : (order == MergeOrder::InnermostFirst ? "layers-inner"
                                                               : "layers");
  if (improve == ImproveKind::TwoOpt) out += "+2opt";
  if (improve == ImproveKind::ThreeOpt) out += "+3opt";
  if (improve_each_merge) out += "+each";
  return out;
}

PipelineSpec PipelineSpec::parse(const std::string& text) {
  PipelineSpec spec;
  std::vector<std::string> parts;
  std::size_t from = 0;
  while (from <= text.size()) {
    std::size_t plus = text.find('+', from);
    if (plus == std::string::npos) plus = text.size();
    parts.push_back(text.substr(from, plus - from));
    from = plus + 1;
  }

  auto fail = [&]() -> PipelineSpec {
    throw InputError("unknown pipeline " + text);
  };

  if (parts[0] == "nn")
    spec.construct = ConstructKind::NearestNeighbor;
  else if (parts[0] == "layers")
    spec.construct = ConstructKind::Layers;
  else if (parts[0] == "layers-inner") {
    spec.construct = ConstructKind::Layers;
    spec.order = MergeOrder::InnermostFirst;
  } else
    return fail();

  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] == "2opt" && spec.improve == ImproveKind::None)
      spec.improve = ImproveKind::TwoOpt;
    else if (parts[i] == "3opt" && spec.improve == ImproveKind::None)
      spec.improve = ImproveKind::ThreeOpt;
    else if (parts[i] == "each" && !spec.improve_each_merge)
      spec.improve_each_merge = true;
    else
      return fail();
  }
  // between-merge improvement needs a merge loop and an improver to run
  if (spec.improve_each_merge &&
      (spec.construct != ConstructKind::Layers ||
       spec.improve == ImproveKind::None))
    return fail();
  return spec;
}

namespace {

Tour apply_improver(ImproveKind kind, const Tour& t, const Instance& inst) {
  switch (kind) {
    case ImproveKind::None:
      return t;
    case ImproveKind::TwoOpt:
      return two_opt(t, inst);
    case ImproveKind::ThreeOpt:
      return three_opt(t, inst);
  }
  return t;
}

// improves a partial cycle by lifting it into a sub-instance, so the tour
// improvers (which insist on full permutations) can run between merges
std::vector<int> improve_partial_cycle(std::vector<int> cycle,
                                       const Instance& inst,
                                       ImproveKind kind) {
  if (cycle.size() < 4) return cycle;
  Instance sub;
  sub.name = inst.name;
  sub.metric = inst.metric;
  std::vector<int> local(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point& p = inst.points[cycle[i]];
    sub.points.push_back({(int)i, p.x, p.y});
    local[i] = (int)i;
  }
  Tour improved = apply_improver(kind, make_tour(local, sub), sub);
  std::vector<int> out;
  out.reserve(cycle.size());
  for (int idx : improved.order) out.push_back(cycle[idx]);
  return out;
}

}  // namespace

PipelineRun run_pipeline(const Instance& inst, const PipelineSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();

  PipelineRun run;
  Tour tour;
  if (spec.construct == ConstructKind::NearestNeighbor) {
    tour = nearest_neighbor(inst, spec.start);
    run.layer_count = (int)convex_layers_fast(inst.points).layers.size();
  } else {
    ConvexLayers layers = convex_layers_fast(inst.points);
    run.layer_count = (int)layers.layers.size();
    CycleHook between;
    if (spec.improve_each_merge && spec.improve != ImproveKind::None)
      between = [&](std::vector<int> cycle) {
        return improve_partial_cycle(std::move(cycle), inst, spec.improve);
      };
    tour = layer_merge(inst, layers, spec.order, between);
  }
  run.tour = apply_improver(spec.improve, tour, inst);

  auto t1 = std::chrono::steady_clock::now();
  run.time_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return run;
}

BenchReport run_experiment(const ExperimentConfig& config) {
  if (config.instances < 1 || config.pipelines.empty())
    throw InputError("empty experiment");
  if (config.gaps && config.n > 18)
    throw CapError("no exact oracle at this size");

  // fix the row order up front: pipelines sorted by name within each seed
  std::vector<PipelineSpec> pipelines = config.pipelines;
  std::sort(pipelines.begin(), pipelines.end(),
            [](const PipelineSpec& a, const PipelineSpec& b) {
              return a.name() < b.name();
            });
  pipelines.erase(std::unique(pipelines.begin(), pipelines.end(),
                              [](const PipelineSpec& a, const PipelineSpec& b) {
                                return a.name() == b.name();
                              }),
                  pipelines.end());

  std::size_t per_seed = pipelines.size();
  std::vector<BenchRow> rows(config.instances * per_seed);

  auto run_cellblock = [&](int inst_idx) {
    uint64_t seed = config.seed + (uint64_t)inst_idx;
    Instance inst = config.circle ? gen_circle(config.n, seed)
                                  : gen_random(config.n, seed);
    std::optional<double> optimum;
    if (config.gaps) optimum = held_karp(inst).length;
    for (std::size_t p = 0; p < per_seed; ++p) {
      PipelineRun run = run_pipeline(inst, pipelines[p]);
      BenchRow& row = rows[inst_idx * per_seed + p];
      row.seed = seed;
      row.pipeline = pipelines[p].name();
      row.length = run.tour.length;
      row.time_ms = run.time_ms;
      if (optimum) {
        row.optimum = *optimum;
        row.gap_percent = 100.0 * (run.tour.length - *optimum) / *optimum;
      }
    }
  };

  int workers = std::max(1, config.threads);
  if (workers == 1) {
    for (int i = 0; i < config.instances; ++i) run_cellblock(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> cursor{0};
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (;;) {
          int i = cursor.fetch_add(1);
          if (i >= config.instances) return;
          run_cellblock(i);
        }
      });
    for (std::thread& th : pool) th.join();
  }

  BenchReport report;
  report.config = config;
  report.rows = std::move(rows);

  for (const PipelineSpec& spec : pipelines) {
    std::string name = spec.name();
    BenchAggregate agg{name, 0.0, 0.0};
    int counted = 0;
    for (const BenchRow& row : report.rows) {
      if (row.pipeline != name || !row.gap_percent) continue;
      agg.mean_gap += *row.gap_percent;
      agg.max_gap = counted == 0 ? *row.gap_percent
                                 : std::max(agg.max_gap, *row.gap_percent);
      ++counted;
    }
    if (counted) agg.mean_gap /= counted;
    report.aggregates.push_back(agg);
  }
  return report;
}

}  // namespace onion
