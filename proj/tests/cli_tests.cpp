// End-to-end checks of the command-line tool; the binary path comes from
// the GSPREP_BIN environment variable set by ctest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "gsprep/io.hpp"

using namespace gsprep;
namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* p = std::getenv("GSPREP_BIN");
  REQUIRE(p != nullptr);
  return p;
}

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("gsprep_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("gen, decompose, reconstruct, roundtrip") {
  TempDir tmp;
  std::string g = tmp.file("g.json");
  CHECK(run("gen --family km --parts 3,2,2 --out " + g) == 0);
  Graph loaded = graph_from_json(read_file(g));
  CHECK(loaded.num_vertices() == 7);

  std::string tree = tmp.file("tree.json");
  CHECK(run("decompose --in " + g + " --out " + tree) == 0);
  std::string back = tmp.file("back.json");
  CHECK(run("reconstruct --in " + tree + " --out " + back) == 0);
  CHECK(read_file(back) == read_file(g));

  CHECK(run("roundtrip --in " + g) == 0);
}

TEST_CASE("gen random graphs are seed deterministic") {
  TempDir tmp;
  std::string a = tmp.file("a.json"), b = tmp.file("b.json"), c = tmp.file("c.json");
  CHECK(run("--seed 5 gen --random dh --n 12 --out " + a) == 0);
  CHECK(run("--seed 5 gen --random dh --n 12 --out " + b) == 0);
  CHECK(run("--seed 6 gen --random dh --n 12 --out " + c) == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(read_file(a) != read_file(c));
}

TEST_CASE("plan and verify round trip through files") {
  TempDir tmp;
  std::string g = tmp.file("g.json"), plan = tmp.file("plan.json");
  CHECK(run("gen --family cs --parts 2,2,2,2 --r 1 --out " + g) == 0);
  CHECK(run("plan --in " + g + " --strategy splitfuse --out " + plan) == 0);
  CHECK(run("verify --plan " + plan + " --target " + g) == 0);

  // verifying against the wrong target fails with exit code 1
  std::string other = tmp.file("other.json");
  CHECK(run("gen --family km --parts 4,4 --out " + other) == 0);
  CHECK(run("verify --plan " + plan + " --target " + other) == 1);
}

TEST_CASE("orbit report and resource limits") {
  TempDir tmp;
  std::string g = tmp.file("g.json"), report = tmp.file("report.json");
  CHECK(run("gen --family kb --parts 3,3 --out " + g) == 0);
  CHECK(run("orbit --in " + g + " --report " + report) == 0);
  CHECK(read_file(report).find("\"orbit_size\": 18") != std::string::npos);
  CHECK(run("orbit --in " + g + " --max 5 --report " + report) == 3);
}

TEST_CASE("heuristic, compare, bench, table subcommands") {
  TempDir tmp;
  std::string g = tmp.file("g.json");
  CHECK(run("gen --family k --n 5 --out " + g) == 0);
  CHECK(run("heuristic --in " + g + " --out " + tmp.file("h.json")) == 0);
  CHECK(run("compare --in " + g + " --csv " + tmp.file("cmp.csv")) == 0);
  CHECK(run("--seed 9 bench --random dh --n 10 --samples 5 "
            "--strategies naive,splitfuse --out " +
            tmp.file("bench.csv")) == 0);
  std::string csv = read_file(tmp.file("bench.csv"));
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 11);
  CHECK(run("table --kind table2 --max-n 10 --out " + tmp.file("t2.csv")) == 0);
  CHECK(run("table --kind table3 --max-n 8 --out " + tmp.file("t3.csv")) == 0);
}

TEST_CASE("input errors exit with code 2") {
  TempDir tmp;
  std::string bad = tmp.file("bad.json");
  write_file(bad, "{\"num_vertices\": 2, \"edges\": [[0,0]]}\n");
  CHECK(run("decompose --in " + bad) == 2);
  CHECK(run("gen --family zz --out " + tmp.file("x.json")) == 2);
}
