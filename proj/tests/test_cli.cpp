// End-to-end checks against the installed command-line binary. Each test
// spawns the real executable and inspects its streams and exit code.

#include <doctest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "onion/bench.hpp"
#include "onion/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("onion-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path scratch_file(const std::string& name) {
  static int counter = 0;
  return scratch_dir() / (std::to_string(counter++) + "-" + name);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args) {
  fs::path out = scratch_file("stdout"), err = scratch_file("stderr");
  std::string cmd = std::string(ONION_TSP_BIN) + " " + args + " >" +
                    out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path square_csv() {
  fs::path p = scratch_dir() / "square.csv";
  spit(p, "id,x,y\n0,0,0\n1,1,0\n2,1,1\n3,0,1\n");
  return p;
}

int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos;
       at = hay.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("solve reports the square's optimal length through layers+3opt") {
  RunResult r = run_cli("solve " + square_csv().string() +
                        " --construct layers --improve 3opt");
  CHECK(r.exit_code == 0);
  CHECK(r.err.empty());
  CHECK(count_of(r.out, "\"length\": 4.000000000") == 1);
  CHECK(count_of(r.out, "\"tour\": [0, 1, 2, 3]") == 1);
  CHECK(count_of(r.out, "wall_time_ms") == 0);

  RunResult timed = run_cli("solve " + square_csv().string() +
                            " --construct layers --improve 3opt --times");
  CHECK(count_of(timed.out, "wall_time_ms") == 1);
}

TEST_CASE("exact agrees with the heuristic on the square") {
  RunResult r = run_cli("exact " + square_csv().string() + " --algo brute");
  CHECK(r.exit_code == 0);
  CHECK(count_of(r.out, "\"optimum\": 4.000000000") == 1);
  CHECK(count_of(r.out, "\"gap_percent\": 0.000000000") == 1);

  RunResult hk =
      run_cli("exact " + square_csv().string() + " --algo held-karp");
  CHECK(count_of(hk.out, "\"length\": 4.000000000") == 1);
}

TEST_CASE("gen is deterministic and matches the library generator") {
  RunResult a = run_cli("gen --n 5 --seed 9");
  RunResult b = run_cli("gen --n 5 --seed 9");
  RunResult c = run_cli("gen --n 5 --seed 10");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out == onion::render_csv(onion::gen_random(5, 9)));

  fs::path out = scratch_file("gen.csv");
  RunResult d = run_cli("gen --n 5 --seed 9 --out " + out.string());
  CHECK(d.exit_code == 0);
  CHECK(d.out.empty());
  CHECK(slurp(out) == a.out);
}

TEST_CASE("layers output agrees between the two algorithms") {
  fs::path inst = scratch_file("inst.csv");
  REQUIRE(run_cli("gen --n 60 --seed 4 --out " + inst.string()).exit_code ==
          0);

  RunResult fast = run_cli("layers " + inst.string());
  RunResult naive = run_cli("layers " + inst.string() + " --algo naive");
  CHECK(fast.exit_code == 0);
  CHECK(count_of(fast.out, "\"algo\": \"hullgraph\"") == 1);
  CHECK(count_of(naive.out, "\"algo\": \"naive\"") == 1);

  // identical apart from the algo tag itself
  auto strip = [](std::string s) {
    std::size_t at = s.find("\"algo\"");
    s.erase(at, s.find('\n', at) - at);
    return s;
  };
  CHECK(strip(fast.out) == strip(naive.out));

  RunResult svg = run_cli("layers " + inst.string() + " --format svg");
  CHECK(svg.out.rfind("<?xml", 0) == 0);
  CHECK(count_of(svg.out, "<polygon") > 1);
}

TEST_CASE("solve renders an svg tour on request") {
  RunResult r = run_cli("solve " + square_csv().string() +
                        " --construct layers --format svg");
  CHECK(r.exit_code == 0);
  CHECK(count_of(r.out, "<polyline") == 1);
  CHECK(count_of(r.out, "<polygon") == 1);

  RunResult nn = run_cli("solve " + square_csv().string() +
                         " --construct nn --start 2 --format svg");
  CHECK(count_of(nn.out, "<polygon") == 0);
  CHECK(count_of(nn.out, "<polyline") == 1);
}

TEST_CASE("usage mistakes exit with 1 and explain themselves") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("solve " + square_csv().string()).exit_code == 1);
  CHECK(run_cli("exact " + square_csv().string() + " --algo warp").exit_code ==
        1);
  CHECK(run_cli("solve " + square_csv().string() +
                " --construct nn --improve 2opt --improve-each-merge")
            .exit_code == 1);
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(count_of(help.out, "bench") == 1);
}

TEST_CASE("bad inputs exit with 2 and report on the diagnostic stream") {
  RunResult missing = run_cli("solve does-not-exist.csv --construct nn");
  CHECK(missing.exit_code == 2);
  CHECK(missing.out.empty());
  CHECK(count_of(missing.err, "cannot read") == 1);

  fs::path dup = scratch_file("dup.csv");
  spit(dup, "id,x,y\n0,1,1\n0,2,2\n");
  RunResult r = run_cli("layers " + dup.string());
  CHECK(r.exit_code == 2);
  CHECK(count_of(r.err, "duplicate id") == 1);

  fs::path report = scratch_file("report.json");
  RunResult warp = run_cli("bench --n 5 --instances 1 --seed 1 --out " +
                           report.string() + " --pipelines warp");
  CHECK(warp.exit_code == 2);
  CHECK(count_of(warp.err, "unknown pipeline warp") == 1);
}

TEST_CASE("size caps exit with 3") {
  fs::path big = scratch_file("big.csv");
  REQUIRE(run_cli("gen --n 20 --seed 1 --out " + big.string()).exit_code == 0);

  RunResult brute = run_cli("exact " + big.string() + " --algo brute");
  CHECK(brute.exit_code == 3);
  CHECK(count_of(brute.err, "brute force capped at 10") == 1);

  RunResult hk = run_cli("exact " + big.string() + " --algo held-karp");
  CHECK(hk.exit_code == 3);
  CHECK(count_of(hk.err, "Held-Karp capped at 18") == 1);

  fs::path report = scratch_file("report.json");
  RunResult bench =
      run_cli("bench --n 19 --instances 1 --seed 1 --out " + report.string());
  CHECK(bench.exit_code == 3);
  CHECK(count_of(bench.err, "no exact oracle at this size") == 1);
}

TEST_CASE("bench writes byte-identical reports across runs and threads") {
  fs::path a = scratch_file("a.json"), b = scratch_file("b.json"),
           c = scratch_file("c.json");
  std::string base = "bench --n 8 --instances 4 --seed 2";
  CHECK(run_cli(base + " --out " + a.string()).exit_code == 0);
  CHECK(run_cli(base + " --out " + b.string()).exit_code == 0);
  CHECK(run_cli(base + " --threads 4 --out " + c.string()).exit_code == 0);

  std::string report = slurp(a);
  CHECK(!report.empty());
  CHECK(report == slurp(b));
  CHECK(report == slurp(c));
  CHECK(count_of(report, "\"pipeline\": \"layers+3opt\"") > 0);
  CHECK(count_of(report, "\"aggregates\"") == 1);

  RunResult circle = run_cli("bench --n 7 --instances 2 --seed 3 --circle "
                             "--pipelines layers --out " +
                             a.string());
  CHECK(circle.exit_code == 0);
  CHECK(count_of(slurp(a), "\"max_gap\": 0.000000000") == 1);
}
