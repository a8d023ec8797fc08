#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "gsprep/errors.hpp"
#include "gsprep/families.hpp"
#include "gsprep/heuristic.hpp"
#include "gsprep/io.hpp"
#include "gsprep/orbit.hpp"
#include "gsprep/planner.hpp"
#include "gsprep/reports.hpp"
#include "gsprep/split_tree.hpp"
#include "gsprep/verify.hpp"

#include <json.hpp>

using namespace gsprep;

namespace {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) parts.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (parts.empty()) throw InputError("expected comma-separated part sizes");
  return parts;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  if (text.find('{') != std::string::npos) return graph_from_json(text);
  return graph_from_edgelist(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-state preparation planner based on split trees"};
  app.require_subcommand(1);

  uint64_t seed = 12345;
  int threads = 0;
  int indent = 2;
  app.add_option("--seed", seed, "random seed");
  app.add_option("--threads", threads, "worker threads (0 = library default)");
  app.add_option("--json-indent", indent, "JSON output indent");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph");
  std::string family, random_kind, out_path;
  std::string parts_text = "2,2";
  int gen_n = 0, cs_r = 1;
  double gen_p = 0.5;
  gen->add_option("--family", family, "k|s|kb|km|cs|r|mr");
  gen->add_option("--parts", parts_text, "comma-separated part sizes");
  gen->add_option("--r", cs_r, "clique-star central clique (1-based)");
  gen->add_option("--random", random_kind, "dh|er");
  gen->add_option("--n", gen_n, "vertex count (single-parameter families / random)");
  gen->add_option("--p", gen_p, "edge probability (er)");
  gen->add_option("--out", out_path, "output graph JSON path");

  // decompose
  auto* dec = app.add_subcommand("decompose", "split decomposition as a quotient tree");
  std::string in_path;
  dec->add_option("--in", in_path, "input graph")->required();
  dec->add_option("--out", out_path, "output tree JSON");

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "rebuild the graph from a quotient tree");
  rec->add_option("--in", in_path, "input tree JSON")->required();
  rec->add_option("--out", out_path, "output graph JSON");

  // roundtrip
  auto* rt = app.add_subcommand("roundtrip", "decompose + reconstruct, compare bytes");
  rt->add_option("--in", in_path, "input graph JSON")->required();
  rt->add_option("--out", out_path, "optional rebuilt graph JSON");

  // orbit
  auto* orb = app.add_subcommand("orbit", "enumerate the LC orbit and its minima");
  uint64_t orbit_max = 100000;
  std::string report_path;
  orb->add_option("--in", in_path, "input graph")->required();
  orb->add_option("--max", orbit_max, "orbit size limit");
  orb->add_option("--report", report_path, "report JSON path");

  // heuristic
  auto* heur = app.add_subcommand("heuristic", "triangle-greedy edge reduction");
  bool iterate = false;
  heur->add_option("--in", in_path, "input graph")->required();
  heur->add_option("--out", out_path, "result JSON");
  heur->add_flag("--iterate", iterate, "repeat passes until no improvement");

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "synthesize a preparation plan");
  std::string strategy = "splitfuse";
  plan_cmd->add_option("--in", in_path, "input graph")->required();
  plan_cmd->add_option("--strategy", strategy, "naive|splitfuse|generalized|generalized+heuristic");
  plan_cmd->add_option("--out", out_path, "plan JSON");

  // verify
  auto* ver = app.add_subcommand("verify", "stabilizer-level plan check");
  std::string plan_path, target_path;
  ver->add_option("--plan", plan_path, "plan JSON")->required();
  ver->add_option("--target", target_path, "target graph")->required();

  // compare
  auto* cmp = app.add_subcommand("compare", "strategy comparison table");
  std::string csv_path;
  cmp->add_option("--in", in_path, "input graph")->required();
  cmp->add_option("--csv", csv_path, "output CSV");

  // bench
  auto* bench = app.add_subcommand("bench", "batch benchmark over random graphs");
  std::string bench_random = "dh", strategies_text = "naive,splitfuse";
  int bench_n = 10, bench_samples = 10;
  double bench_p = 0.5;
  bench->add_option("--random", bench_random, "dh|er");
  bench->add_option("--n", bench_n, "vertex count");
  bench->add_option("--p", bench_p, "edge probability (er)");
  bench->add_option("--samples", bench_samples, "sample count");
  bench->add_option("--strategies", strategies_text, "comma-separated strategy list");
  bench->add_option("--out", csv_path, "output CSV");

  // table
  auto* table = app.add_subcommand("table", "reference tables from the closed forms");
  std::string kind = "table2";
  int max_n = 12;
  table->add_option("--kind", kind, "table2|table3");
  table->add_option("--max-n", max_n, "largest vertex count");
  table->add_option("--out", csv_path, "output CSV");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (gen->parsed()) {
      Graph g;
      if (!random_kind.empty()) {
        if (random_kind == "dh") {
          g = random_dh(gen_n, seed);
        } else if (random_kind == "er") {
          g = random_er_connected(gen_n, gen_p, seed);
        } else {
          throw InputError("gen: --random must be dh or er");
        }
      } else if (family == "k") {
        g = build(FamilySpec::complete(gen_n ? gen_n : parse_parts(parts_text)[0]));
      } else if (family == "s") {
        g = build(FamilySpec::star(gen_n ? gen_n : parse_parts(parts_text)[0]));
      } else if (family == "kb") {
        auto p = parse_parts(parts_text);
        if (p.size() != 2) throw InputError("gen: kb needs exactly two parts");
        g = build(FamilySpec::bipartite(p[0], p[1]));
      } else if (family == "km") {
        g = build(FamilySpec::multipartite(parse_parts(parts_text)));
      } else if (family == "cs") {
        g = build(FamilySpec::clique_star(cs_r, parse_parts(parts_text)));
      } else if (family == "r") {
        g = build(FamilySpec::repeater(gen_n ? gen_n : parse_parts(parts_text)[0]));
      } else if (family == "mr") {
        g = build(FamilySpec::multi_leaf_repeater(parse_parts(parts_text)));
      } else {
        throw InputError("gen: pass --family or --random");
      }
      emit(out_path, graph_to_json(g, indent));
    } else if (dec->parsed()) {
      emit(out_path, qasst_to_json(decompose(load_graph(in_path)), indent));
    } else if (rec->parsed()) {
      emit(out_path, graph_to_json(reconstruct(qasst_from_json(read_file(in_path))), indent));
    } else if (rt->parsed()) {
      std::string original = read_file(in_path);
      Graph g = graph_from_json(original);
      std::string rebuilt = graph_to_json(reconstruct(decompose(g)), indent);
      if (!out_path.empty()) write_file(out_path, rebuilt);
      if (rebuilt != original) {
        std::cerr << "roundtrip: rebuilt graph differs from input\n";
        return 1;
      }
      std::cout << "roundtrip: identical\n";
    } else if (orb->parsed()) {
      OrbitReport r = oracle_min_stats(load_graph(in_path), orbit_max);
      emit(report_path, orbit_report_to_json(r, indent));
    } else if (heur->parsed()) {
      Graph g = load_graph(in_path);
      HeuristicResult r = iterate ? triangle_greedy_iterated(g) : triangle_greedy(g);
      nlohmann::ordered_json j;
      j["graph"] = nlohmann::ordered_json::parse(graph_to_json(r.improved, indent));
      j["sequence"] = nlohmann::ordered_json::array();
      for (const auto& s : r.sequence.steps) j["sequence"].push_back(s.v);
      j["neighborhoods"] = r.sequence.neighborhoods;
      j["edges_before"] = r.edges_before;
      j["edges_after"] = r.edges_after;
      emit(out_path, j.dump(indent) + "\n");
    } else if (plan_cmd->parsed()) {
      Graph g = load_graph(in_path);
      PreparationPlan p = make_plan(g, strategy_from_name(strategy));
      emit(out_path, plan_to_json(p, indent));
    } else if (ver->parsed()) {
      PreparationPlan p = plan_from_json(read_file(plan_path));
      Graph target = load_graph(target_path);
      VerifyResult r = verify_plan(p, target);
      nlohmann::ordered_json j;
      j["ok"] = r.ok;
      if (!r.ok) j["reason"] = r.reason;
      std::cout << j.dump(indent) << "\n";
      return r.ok ? 0 : 1;
    } else if (cmp->parsed()) {
      emit(csv_path, compare_csv(load_graph(in_path)));
    } else if (bench->parsed()) {
      BenchConfig cfg;
      cfg.generator = bench_random == "er" ? BenchConfig::Generator::ErdosRenyi
                                           : BenchConfig::Generator::DistanceHereditary;
      cfg.n = bench_n;
      cfg.p = bench_p;
      cfg.samples = bench_samples;
      cfg.base_seed = seed;
      std::string cur;
      for (char c : strategies_text + ",") {
        if (c == ',') {
          if (!cur.empty()) cfg.strategies.push_back(strategy_from_name(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      emit(csv_path, run_bench(cfg));
    } else if (table->parsed()) {
      if (kind == "table2") {
        emit(csv_path, table_report_bipartite(max_n));
      } else if (kind == "table3") {
        emit(csv_path, table_report_families(max_n));
      } else {
        throw InputError("table: --kind must be table2 or table3");
      }
    }
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
