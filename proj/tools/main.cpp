// Command-line front end: instance generation, layer decomposition, the
// heuristic pipelines, exact solvers, and the benchmark harness.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "onion/bench.hpp"
#include "onion/errors.hpp"
#include "onion/exact.hpp"
#include "onion/hull_graph.hpp"
#include "onion/io.hpp"

using namespace onion;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

// TSPLIB files announce themselves; everything else is treated as CSV.
Instance load_instance(const std::string& path) {
  std::string text = read_file(path);
  if (text.find("NODE_COORD_SECTION") != std::string::npos)
    return parse_tsplib(text);
  Instance inst = parse_csv(text);
  inst.name = std::filesystem::path(path).stem().string();
  return inst;
}

std::vector<PipelineSpec> parse_pipeline_list(const std::string& list) {
  std::vector<PipelineSpec> specs;
  std::size_t from = 0;
  while (from <= list.size()) {
    std::size_t comma = list.find(',', from);
    if (comma == std::string::npos) comma = list.size();
    std::string item = list.substr(from, comma - from);
    if (!item.empty()) specs.push_back(PipelineSpec::parse(item));
    from = comma + 1;
  }
  if (specs.empty()) throw InputError("empty pipeline list");
  return specs;
}

struct GenArgs {
  int n = 0;
  uint64_t seed = 0;
  std::string out;
};

struct LayersArgs {
  std::string file;
  std::string algo = "hullgraph";
  std::string format = "json";
};

struct SolveArgs {
  std::string file;
  std::string construct;
  std::string order = "outer";
  std::string improve = "none";
  bool improve_each_merge = false;
  int start = 0;
  std::string format = "json";
  bool times = false;
};

struct ExactArgs {
  std::string file;
  std::string algo;
  bool times = false;
};

struct BenchArgs {
  int n = 10;
  int instances = 1;
  uint64_t seed = 1;
  std::string pipelines = "nn,nn+2opt,layers,layers+3opt";
  bool circle = false;
  int threads = 1;
  bool times = false;
  std::string out;
};

int run_gen(const GenArgs& args) {
  std::string csv = render_csv(gen_random(args.n, args.seed));
  if (args.out.empty())
    std::cout << csv;
  else
    write_file(args.out, csv);
  return 0;
}

int run_layers(const LayersArgs& args) {
  Instance inst = load_instance(args.file);
  ConvexLayers layers = args.algo == "naive"
                            ? convex_layers_naive(inst.points)
                            : convex_layers_fast(inst.points);
  if (args.format == "svg")
    std::cout << write_svg(inst, &layers, nullptr);
  else
    std::cout << layers_json(inst, layers, args.algo);
  return 0;
}

int run_solve(const SolveArgs& args) {
  Instance inst = load_instance(args.file);

  PipelineSpec spec;
  spec.construct = args.construct == "nn" ? ConstructKind::NearestNeighbor
                                          : ConstructKind::Layers;
  spec.order = args.order == "inner" ? MergeOrder::InnermostFirst
                                     : MergeOrder::OutermostFirst;
  spec.improve = args.improve == "2opt"   ? ImproveKind::TwoOpt
                 : args.improve == "3opt" ? ImproveKind::ThreeOpt
                                          : ImproveKind::None;
  spec.improve_each_merge = args.improve_each_merge;
  spec.start = args.start;

  PipelineRun run = run_pipeline(inst, spec);

  SolveResult result;
  result.instance_name = inst.name;
  result.construct = args.construct;
  result.improve = args.improve;
  result.order = args.order;
  result.improve_each_merge = args.improve_each_merge;
  result.tour = run.tour;
  result.layer_count = run.layer_count;
  result.wall_time_ms = run.time_ms;

  if (args.format == "svg") {
    if (spec.construct == ConstructKind::Layers) {
      ConvexLayers layers = convex_layers_fast(inst.points);
      std::cout << write_svg(inst, &layers, &run.tour);
    } else {
      std::cout << write_svg(inst, nullptr, &run.tour);
    }
  } else {
    std::cout << solve_result_json(result, args.times);
  }
  return 0;
}

int run_exact(const ExactArgs& args) {
  Instance inst = load_instance(args.file);

  auto t0 = std::chrono::steady_clock::now();
  Tour tour = args.algo == "brute" ? brute_force(inst) : held_karp(inst);
  auto t1 = std::chrono::steady_clock::now();

  SolveResult result;
  result.instance_name = inst.name;
  result.construct = args.algo;
  result.improve = "none";
  result.order = "outer";
  result.tour = tour;
  result.optimum = tour.length;
  result.gap_percent = 0.0;
  result.layer_count = 0;
  result.wall_time_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  std::cout << solve_result_json(result, args.times);
  return 0;
}

int run_bench(const BenchArgs& args) {
  ExperimentConfig config;
  config.n = args.n;
  config.instances = args.instances;
  config.seed = args.seed;
  config.pipelines = parse_pipeline_list(args.pipelines);
  config.circle = args.circle;
  config.gaps = true;
  config.threads = args.threads;

  BenchReport report = run_experiment(config);
  write_file(args.out, bench_report_json(report, args.times));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex-layer heuristics for the Euclidean TSP"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded CSV instance");
  gen->add_option("--n", gen_args.n, "number of cities")->required();
  gen->add_option("--seed", gen_args.seed, "generator seed")->required();
  gen->add_option("--out", gen_args.out, "output file (default: stdout)");

  LayersArgs layers_args;
  CLI::App* layers =
      app.add_subcommand("layers", "Compute the convex layers of an instance");
  layers->add_option("file", layers_args.file, "instance file (CSV or TSPLIB)")
      ->required();
  layers->add_option("--algo", layers_args.algo, "layer algorithm")
      ->check(CLI::IsMember({"naive", "hullgraph"}));
  layers->add_option("--format", layers_args.format, "output format")
      ->check(CLI::IsMember({"json", "svg"}));

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Run a heuristic pipeline");
  solve->add_option("file", solve_args.file, "instance file (CSV or TSPLIB)")
      ->required();
  solve->add_option("--construct", solve_args.construct, "tour construction")
      ->required()
      ->check(CLI::IsMember({"layers", "nn"}));
  solve->add_option("--order", solve_args.order, "layer merge order")
      ->check(CLI::IsMember({"outer", "inner"}));
  solve->add_option("--improve", solve_args.improve, "local search pass")
      ->check(CLI::IsMember({"none", "2opt", "3opt"}));
  solve->add_flag("--improve-each-merge", solve_args.improve_each_merge,
                  "also improve the partial cycle after every merge");
  solve->add_option("--start", solve_args.start,
                    "start city for nearest neighbor");
  solve->add_option("--format", solve_args.format, "output format")
      ->check(CLI::IsMember({"json", "svg"}));
  solve->add_flag("--times", solve_args.times, "include wall-clock timings");

  ExactArgs exact_args;
  CLI::App* exact = app.add_subcommand("exact", "Solve to proven optimality");
  exact->add_option("file", exact_args.file, "instance file (CSV or TSPLIB)")
      ->required();
  exact->add_option("--algo", exact_args.algo, "exact algorithm")
      ->required()
      ->check(CLI::IsMember({"brute", "held-karp"}));
  exact->add_flag("--times", exact_args.times, "include wall-clock timings");

  BenchArgs bench_args;
  CLI::App* bench =
      app.add_subcommand("bench", "Score pipelines over seeded instances");
  bench->add_option("--n", bench_args.n, "cities per instance")->required();
  bench->add_option("--instances", bench_args.instances, "number of seeds")
      ->required();
  bench->add_option("--seed", bench_args.seed, "base seed")->required();
  bench->add_option("--pipelines", bench_args.pipelines,
                    "comma-separated pipeline names");
  bench->add_flag("--circle", bench_args.circle,
                  "sample instances on a circle (convex position)");
  bench->add_option("--threads", bench_args.threads, "worker threads");
  bench->add_flag("--times", bench_args.times, "include per-row timings");
  bench->add_option("--out", bench_args.out, "report file")->required();

  try {
    app.parse(argc, argv);
    if (solve_args.improve_each_merge &&
        (solve_args.construct != "layers" || solve_args.improve == "none"))
      throw CLI::ValidationError(
          "--improve-each-merge needs --construct layers and an --improve");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems all map to exit 1
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (layers->parsed()) return run_layers(layers_args);
    if (solve->parsed()) return run_solve(solve_args);
    if (exact->parsed()) return run_exact(exact_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
