#include "gsprep/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsprep/errors.hpp"

namespace gsprep {

using json = nlohmann::ordered_json;

static std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

static json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError(std::string(what) + ": malformed JSON");
  return j;
}

std::string graph_to_json(const Graph& g, int indent) {
  json j;
  j["num_vertices"] = g.num_vertices();
  j["edges"] = json::array();
  for (auto [u, v] : g.edge_list()) j["edges"].push_back({u, v});
  return dump(j, indent);
}

Graph graph_from_json(const std::string& text) {
  json j = parse(text, "graph");
  if (!j.contains("num_vertices") || !j.contains("edges")) {
    throw InputError("graph: missing num_vertices or edges");
  }
  int n = j["num_vertices"].get<int>();
  if (n < 0) throw InputError("graph: negative vertex count");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw InputError("graph: edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, edges);  // rejects self-loops and duplicates
}

std::string graph_to_edgelist(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edge_list();
  os << g.num_vertices() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) os << u << " " << v << "\n";
  return os.str();
}

Graph graph_from_edgelist(const std::string& text) {
  std::istringstream is(text);
  int n = 0;
  size_t m = 0;
  if (!(is >> n >> m)) throw InputError("edgelist: bad header line");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v)) throw InputError("edgelist: truncated at edge " + std::to_string(i));
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

static std::string class_name(QuotientClass c) {
  switch (c) {
    case QuotientClass::Star: return "star";
    case QuotientClass::Complete: return "complete";
    case QuotientClass::Prime: return "prime";
  }
  return "?";
}

std::string qasst_to_json(const Qasst& q, int indent) {
  json j;
  j["quotients"] = json::array();
  for (const auto& quot : q.quotients) {
    json jq;
    jq["id"] = quot.id;
    jq["class"] = class_name(quot.cls);
    jq["nodes"] = json::array();
    for (const auto& r : quot.roles) {
      if (r.is_leaf) {
        jq["nodes"].push_back({{"role", "leaf"}, {"v", r.vertex}});
      } else {
        jq["nodes"].push_back({{"role", "split"}});
      }
    }
    jq["edges"] = json::array();
    for (auto [a, b] : quot.graph.edge_list()) jq["edges"].push_back({a, b});
    j["quotients"].push_back(std::move(jq));
  }
  j["tree"] = json::array();
  for (const auto& [a, b] : q.tree_edges) {
    j["tree"].push_back({{a.quotient, a.node}, {b.quotient, b.node}});
  }
  return dump(j, indent);
}

Qasst qasst_from_json(const std::string& text) {
  json j = parse(text, "qasst");
  Qasst out;
  int vertices = 0;
  for (const auto& jq : j.at("quotients")) {
    Quotient q;
    q.id = jq.at("id").get<int>();
    int n = static_cast<int>(jq.at("nodes").size());
    for (const auto& node : jq.at("nodes")) {
      NodeRole r;
      r.is_leaf = node.at("role").get<std::string>() == "leaf";
      if (r.is_leaf) {
        r.vertex = node.at("v").get<int>();
        ++vertices;
      }
      q.roles.push_back(r);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : jq.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    q.graph = Graph::from_edges(n, edges);
    q.cls = classify_quotient(q.graph, &q.star_center);
    out.quotients.push_back(std::move(q));
  }
  for (const auto& e : j.at("tree")) {
    TreeEnd a{e[0][0].get<int>(), e[0][1].get<int>()};
    TreeEnd b{e[1][0].get<int>(), e[1][1].get<int>()};
    out.tree_edges.emplace_back(a, b);
  }
  out.source_vertex_count = vertices;
  return out;
}

static const char* op_name(PlanOp::Kind k) {
  switch (k) {
    case PlanOp::Kind::InitPlus: return "init";
    case PlanOp::Kind::CZ: return "cz";
    case PlanOp::Kind::LocalClifford: return "lc";
    case PlanOp::Kind::FusionII: return "fusion2";
  }
  return "?";
}

std::string plan_to_json(const PreparationPlan& p, int indent) {
  json j;
  j["qubits"] = p.summary.qubits_total;
  j["map"] = json::array();
  for (int v : p.qubit_map) {
    if (v < 0)
      j["map"].push_back("aux");
    else
      j["map"].push_back(v);
  }
  j["layers"] = json::array();
  for (const auto& layer : p.layers) {
    json jl = json::array();
    for (const auto& op : layer) {
      json jo;
      jo["op"] = op_name(op.kind);
      if (op.kind == PlanOp::Kind::InitPlus || op.kind == PlanOp::Kind::LocalClifford) {
        jo["q"] = json::array({op.q1});
      } else {
        jo["q"] = json::array({op.q1, op.q2});
      }
      if (op.kind == PlanOp::Kind::LocalClifford) jo["n"] = op.lc_neighborhood;
      jl.push_back(std::move(jo));
    }
    j["layers"].push_back(std::move(jl));
  }
  j["summary"] = {{"cz", p.summary.cz_total},
                  {"depth", p.summary.time_steps},
                  {"qubits", p.summary.qubits_total},
                  {"aux", p.summary.qubits_aux}};
  return dump(j, indent);
}

PreparationPlan plan_from_json(const std::string& text) {
  json j = parse(text, "plan");
  PreparationPlan p;
  for (const auto& m : j.at("map")) {
    p.qubit_map.push_back(m.is_string() ? -1 : m.get<int>());
  }
  for (const auto& jl : j.at("layers")) {
    std::vector<PlanOp> layer;
    for (const auto& jo : jl) {
      std::string name = jo.at("op").get<std::string>();
      PlanOp op;
      if (name == "init") {
        op.kind = PlanOp::Kind::InitPlus;
        op.q1 = jo.at("q")[0].get<int>();
      } else if (name == "cz" || name == "fusion2") {
        op.kind = name == "cz" ? PlanOp::Kind::CZ : PlanOp::Kind::FusionII;
        op.q1 = jo.at("q")[0].get<int>();
        op.q2 = jo.at("q")[1].get<int>();
      } else if (name == "lc") {
        op.kind = PlanOp::Kind::LocalClifford;
        op.q1 = jo.at("q")[0].get<int>();
        for (const auto& u : jo.at("n")) op.lc_neighborhood.push_back(u.get<int>());
      } else {
        throw InputError("plan: unknown op " + name);
      }
      layer.push_back(std::move(op));
    }
    p.layers.push_back(std::move(layer));
  }
  const auto& s = j.at("summary");
  p.summary = {s.at("cz").get<int>(), s.at("depth").get<int>(), s.at("qubits").get<int>(),
               s.at("aux").get<int>()};
  return p;
}

std::string orbit_report_to_json(const OrbitReport& r, int indent) {
  json j;
  j["orbit_size"] = r.orbit_size;
  j["min_edges"] = r.min_edges;
  j["min_max_degree"] = r.min_max_degree;
  j["min_edge_representative"] =
      json::parse(graph_to_json(r.min_edge_representative, indent));
  j["min_degree_representative"] =
      json::parse(graph_to_json(r.min_degree_representative, indent));
  auto steps = [](const LcSequence& s) {
    json arr = json::array();
    for (const auto& step : s.steps) arr.push_back(step.v);
    return arr;
  };
  j["min_edge_witness"] = steps(r.min_edge_witness);
  j["min_degree_witness"] = steps(r.min_degree_witness);
  return dump(j, indent);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << content;
}

}  // namespace gsprep
