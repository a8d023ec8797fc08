#include "gsprep/planner.hpp"

#include <algorithm>
#include <numeric>

#include "gsprep/errors.hpp"
#include "gsprep/families.hpp"
#include "gsprep/local_ops.hpp"
#include "gsprep/orbit.hpp"

namespace gsprep {

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Naive: return "naive";
    case Strategy::Heuristic: return "heuristic";
    case Strategy::SplitFuse: return "splitfuse";
    case Strategy::Generalized: return "generalized";
    case Strategy::GeneralizedHeuristic: return "generalized+heuristic";
  }
  return "?";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "naive") return Strategy::Naive;
  if (name == "heuristic") return Strategy::Heuristic;
  if (name == "splitfuse") return Strategy::SplitFuse;
  if (name == "generalized") return Strategy::Generalized;
  if (name == "generalized+heuristic") return Strategy::GeneralizedHeuristic;
  throw InputError("unknown strategy: " + name);
}

namespace {

std::vector<PlanOp> init_layer(int qubits) {
  std::vector<PlanOp> ops;
  for (int q = 0; q < qubits; ++q) ops.push_back({PlanOp::Kind::InitPlus, q, -1, {}});
  return ops;
}

// CZ layers for preparing `g` on the given qubit ids, scheduled by edge
// coloring; returns the number of layers used.
int append_colored_cz(std::vector<std::vector<PlanOp>>& layers, const Graph& g,
                      const std::vector<int>& qubit_of, int first_layer) {
  EdgeColoring col = edge_color(g);
  for (int c = 0; c < col.num_colors; ++c) {
    size_t layer = static_cast<size_t>(first_layer) + c;
    while (layers.size() <= layer) layers.emplace_back();
    for (auto [u, v] : col.classes[c]) {
      layers[layer].push_back({PlanOp::Kind::CZ, qubit_of[u], qubit_of[v], {}});
    }
  }
  return col.num_colors;
}

int identity_map_size(const Graph& g) { return g.num_vertices(); }

}  // namespace

PreparationPlan plan_naive(const Graph& g) {
  PreparationPlan plan;
  int n = identity_map_size(g);
  plan.qubit_map.resize(n);
  std::iota(plan.qubit_map.begin(), plan.qubit_map.end(), 0);
  plan.layers.push_back(init_layer(n));
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  int depth = append_colored_cz(plan.layers, g, ident, 1);
  plan.summary = {g.edge_count(), depth, n, 0};
  return plan;
}

PreparationPlan plan_heuristic(const Graph& g) {
  HeuristicResult h = triangle_greedy(g);
  PreparationPlan plan;
  int n = g.num_vertices();
  plan.qubit_map.resize(n);
  std::iota(plan.qubit_map.begin(), plan.qubit_map.end(), 0);
  plan.layers.push_back(init_layer(n));
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 0);
  int depth = append_colored_cz(plan.layers, h.improved, ident, 1);
  if (!h.sequence.empty()) {
    // inverse sequence: same vertices in reverse order, same neighborhoods
    std::vector<PlanOp> conv;
    for (size_t i = h.sequence.size(); i-- > 0;) {
      conv.push_back({PlanOp::Kind::LocalClifford, h.sequence.steps[i].v, -1,
                      h.sequence.neighborhoods[i]});
    }
    plan.layers.push_back(std::move(conv));
    ++depth;
  }
  plan.summary = {h.edges_after, depth, n, 0};
  return plan;
}

namespace {

struct QuotientPrep {
  const Quotient* q;
  int base;                 // first plan qubit of this quotient
  std::vector<int> qubits;  // node index -> plan qubit
};

// Shared core of the split-fuse and generalized planners.
PreparationPlan plan_over_tree(const Qasst& tree, PrimeStrategy prime) {
  PreparationPlan plan;
  int total = 0;
  std::vector<QuotientPrep> preps;
  for (const auto& q : tree.quotients) {
    QuotientPrep p;
    p.q = &q;
    p.base = total;
    for (size_t ni = 0; ni < q.roles.size(); ++ni) p.qubits.push_back(total + static_cast<int>(ni));
    total += q.graph.num_vertices();
    preps.push_back(std::move(p));
  }
  plan.qubit_map.assign(total, -1);
  int aux = 0;
  for (const auto& p : preps) {
    for (size_t ni = 0; ni < p.q->roles.size(); ++ni) {
      if (p.q->roles[ni].is_leaf) {
        plan.qubit_map[p.qubits[ni]] = p.q->roles[ni].vertex;
      } else {
        ++aux;
      }
    }
  }
  plan.layers.push_back(init_layer(total));

  int prep_depth = 0;
  int cz = 0;
  std::vector<PlanOp> conversion;
  for (const auto& p : preps) {
    const Quotient& q = *p.q;
    int size = q.graph.num_vertices();
    if (q.cls == QuotientClass::Prime) {
      Graph target = q.graph;
      Graph prepared = target;
      LcSequence back;
      if (prime == PrimeStrategy::Heuristic) {
        HeuristicResult h = triangle_greedy(target);
        prepared = h.improved;
        back = h.sequence;
      }
      int depth = append_colored_cz(plan.layers, prepared, p.qubits, 1);
      prep_depth = std::max(prep_depth, depth);
      cz += prepared.edge_count();
      for (size_t i = back.size(); i-- > 0;) {
        std::vector<int> nbrs;
        for (int u : back.neighborhoods[i]) nbrs.push_back(p.qubits[u]);
        conversion.push_back(
            {PlanOp::Kind::LocalClifford, p.qubits[back.steps[i].v], -1, std::move(nbrs)});
      }
      continue;
    }
    // Star or complete: prepare a star. Its center matches the target star's
    // center; complete targets get centered on the first node and converted.
    int center = q.cls == QuotientClass::Star ? q.star_center : 0;
    int layer = 1;
    for (int ni = 0; ni < size; ++ni) {
      if (ni == center) continue;
      while (static_cast<int>(plan.layers.size()) <= layer) plan.layers.emplace_back();
      plan.layers[layer].push_back(
          {PlanOp::Kind::CZ, p.qubits[center], p.qubits[ni], {}});
      ++cz;
      ++layer;
    }
    prep_depth = std::max(prep_depth, size - 1);
    if (q.cls == QuotientClass::Complete && size >= 3) {
      std::vector<int> nbrs;
      for (int ni = 0; ni < size; ++ni) {
        if (ni != center) nbrs.push_back(p.qubits[ni]);
      }
      conversion.push_back({PlanOp::Kind::LocalClifford, p.qubits[center], -1, std::move(nbrs)});
    }
  }

  // conversion stage: one time step, reserved even when empty
  while (static_cast<int>(plan.layers.size()) <= prep_depth) plan.layers.emplace_back();
  plan.layers.push_back(std::move(conversion));
  // fusion stage: all split-node pairs at once
  std::vector<PlanOp> fusions;
  for (const auto& [a, b] : tree.tree_edges) {
    fusions.push_back({PlanOp::Kind::FusionII, preps[a.quotient].qubits[a.node],
                       preps[b.quotient].qubits[b.node], {}});
    ++cz;
  }
  plan.layers.push_back(std::move(fusions));
  plan.summary = {cz, prep_depth + 2, total, aux};
  return plan;
}

}  // namespace

PreparationPlan plan_split_fuse(const Graph& g) {
  Qasst tree = decompose(g);
  for (const auto& q : tree.quotients) {
    if (q.cls == QuotientClass::Prime) {
      throw InputError("plan_split_fuse: graph is not distance-hereditary; use plan_generalized");
    }
  }
  return plan_over_tree(tree, PrimeStrategy::Naive);
}

PreparationPlan plan_generalized(const Graph& g, PrimeStrategy prime) {
  Qasst tree = decompose(g);
  if (tree.quotients.size() == 1 && tree.quotients[0].cls == QuotientClass::Prime) {
    return prime == PrimeStrategy::Naive ? plan_naive(g) : plan_heuristic(g);
  }
  return plan_over_tree(tree, prime);
}

PreparationPlan make_plan(const Graph& g, Strategy s) {
  switch (s) {
    case Strategy::Naive: return plan_naive(g);
    case Strategy::Heuristic: return plan_heuristic(g);
    case Strategy::SplitFuse: return plan_split_fuse(g);
    case Strategy::Generalized: return plan_generalized(g, PrimeStrategy::Naive);
    case Strategy::GeneralizedHeuristic: return plan_generalized(g, PrimeStrategy::Heuristic);
  }
  throw InputError("make_plan: unknown strategy");
}

ResourceSummary resource_formulas(const Qasst& q) {
  int k = static_cast<int>(q.quotients.size());
  int n = q.source_vertex_count;
  int max_size = 0;
  for (const auto& quot : q.quotients) {
    if (quot.cls == QuotientClass::Prime) {
      throw InputError("resource_formulas: prime quotient present");
    }
    max_size = std::max(max_size, quot.leaf_count() + quot.split_count());
  }
  return {n + 2 * k - 3, 1 + max_size, n + 2 * k - 2, 2 * k - 2};
}

void validate_plan(const PreparationPlan& plan) {
  if (plan.layers.empty()) throw InputError("plan: no layers");
  int total = static_cast<int>(plan.qubit_map.size());
  std::vector<char> inited(total, 0), alive(total, 1);
  for (size_t layer = 0; layer < plan.layers.size(); ++layer) {
    std::vector<char> busy(total, 0);
    for (const auto& op : plan.layers[layer]) {
      auto touch = [&](int q, bool two_qubit) {
        if (q < 0 || q >= total) {
          throw InputError("plan: layer " + std::to_string(layer) + " touches bad qubit");
        }
        if (!alive[q]) {
          throw InputError("plan: layer " + std::to_string(layer) + " uses consumed qubit " +
                           std::to_string(q));
        }
        if (two_qubit) {
          if (busy[q]) {
            throw InputError("plan: layer " + std::to_string(layer) +
                             " schedules two two-qubit ops on qubit " + std::to_string(q));
          }
          busy[q] = 1;
        }
      };
      switch (op.kind) {
        case PlanOp::Kind::InitPlus:
          if (layer != 0) throw InputError("plan: init outside layer 0");
          if (inited[op.q1]) throw InputError("plan: qubit initialized twice");
          inited[op.q1] = 1;
          break;
        case PlanOp::Kind::CZ:
          touch(op.q1, true);
          touch(op.q2, true);
          break;
        case PlanOp::Kind::LocalClifford:
          touch(op.q1, false);
          for (int u : op.lc_neighborhood) touch(u, false);
          break;
        case PlanOp::Kind::FusionII:
          touch(op.q1, true);
          touch(op.q2, true);
          alive[op.q1] = alive[op.q2] = 0;
          break;
      }
    }
  }
  for (int q = 0; q < total; ++q) {
    if (!inited[q]) throw InputError("plan: qubit " + std::to_string(q) + " never initialized");
  }
  for (int q = 0; q < total; ++q) {
    if (alive[q] && plan.qubit_map[q] < 0) {
      throw InputError("plan: auxiliary qubit " + std::to_string(q) + " left unconsumed");
    }
    if (!alive[q] && plan.qubit_map[q] >= 0) {
      throw InputError("plan: target qubit " + std::to_string(q) + " was consumed");
    }
  }
}

Graph replay_plan_graph(const PreparationPlan& plan) {
  validate_plan(plan);
  int total = static_cast<int>(plan.qubit_map.size());
  Graph g(total);
  std::vector<int> where(total);
  std::iota(where.begin(), where.end(), 0);
  for (const auto& layer : plan.layers) {
    for (const auto& op : layer) {
      switch (op.kind) {
        case PlanOp::Kind::InitPlus: break;  // vertices pre-allocated
        case PlanOp::Kind::CZ: g.toggle_edge(where[op.q1], where[op.q2]); break;
        case PlanOp::Kind::LocalClifford: {
          std::vector<int> expect;
          for (int u : op.lc_neighborhood) expect.push_back(where[u]);
          std::sort(expect.begin(), expect.end());
          std::vector<int> actual = g.neighbors(where[op.q1]);
          if (expect != actual) {
            throw InputError("plan replay: recorded neighborhood mismatch at qubit " +
                             std::to_string(op.q1));
          }
          g = local_complement(g, where[op.q1]);
          break;
        }
        case PlanOp::Kind::FusionII: {
          auto fused = fuse_type2_within(g, where[op.q1], where[op.q2]);
          g = std::move(fused.graph);
          for (int q = 0; q < total; ++q) {
            if (where[q] >= 0) where[q] = fused.old_to_new[where[q]];
          }
          break;
        }
      }
    }
  }
  int targets = 0;
  for (int v : plan.qubit_map) targets = std::max(targets, v + 1);
  Graph out(targets);
  std::vector<int> vertex_at(g.num_vertices(), -1);
  for (int q = 0; q < total; ++q) {
    if (plan.qubit_map[q] >= 0) vertex_at[where[q]] = plan.qubit_map[q];
  }
  for (auto [u, v] : g.edge_list()) {
    if (vertex_at[u] < 0 || vertex_at[v] < 0) {
      throw InputError("plan replay: edge touches an unmapped qubit");
    }
    out.add_edge(vertex_at[u], vertex_at[v]);
  }
  return out;
}

std::vector<StrategyRow> compare_strategies(const Graph& g) {
  std::vector<StrategyRow> rows;
  rows.push_back({"naive", plan_naive(g).summary});
  rows.push_back({"heuristic", plan_heuristic(g).summary});
  Qasst tree = decompose(g);
  bool dh = true;
  for (const auto& q : tree.quotients) dh &= q.cls != QuotientClass::Prime;
  if (dh) {
    rows.push_back({"splitfuse", plan_split_fuse(g).summary});
  } else {
    rows.push_back({"generalized", plan_generalized(g, PrimeStrategy::Naive).summary});
  }
  rows.push_back(
      {"generalized+heuristic", plan_generalized(g, PrimeStrategy::Heuristic).summary});

  int n = g.num_vertices();
  auto optimal_row = [&](int min_edges, int min_deg) {
    rows.push_back({"optimal", {min_edges, min_deg + 1, n, 0}});
  };
  if (auto parts = detect_complete_multipartite(g)) {
    if (parts->size() == 2 && (*parts)[0] >= 2 && (*parts)[1] >= 2) {
      optimal_row((*parts)[0] + (*parts)[1] - 1, std::max((*parts)[0], (*parts)[1]));
    } else if (parts->size() >= 3 && parts->back() >= 2) {
      auto sel = select_min_edges(OrbitFamily::Multipartite, *parts);
      if (sel.known) {
        optimal_row(sel.value, min_degree_formula(OrbitFamily::Multipartite, *parts));
      }
    }
  } else if (auto cs = detect_clique_star(g)) {
    std::vector<int> parts = *cs;
    if (parts.size() >= 3 && *std::min_element(parts.begin(), parts.end()) >= 2) {
      auto sel = select_min_edges(OrbitFamily::CliqueStar, parts);
      if (sel.known) {
        optimal_row(sel.value, min_degree_formula(OrbitFamily::CliqueStar, parts));
      }
    }
  }
  return rows;
}

}  // namespace gsprep
