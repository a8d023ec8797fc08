#include "gsprep/verify.hpp"

#include <numeric>

#include "gsprep/errors.hpp"

namespace gsprep {

VerifyResult verify_plan(const PreparationPlan& plan, const Graph& target) {
  try {
    validate_plan(plan);
  } catch (const InputError& e) {
    return {false, e.what()};
  }
  int total = static_cast<int>(plan.qubit_map.size());
  Tableau t(total);  // InitPlus: every qubit starts as |+>
  std::vector<int> where(total);
  std::iota(where.begin(), where.end(), 0);
  auto drop_tracking = [&](int removed) {
    for (int& w : where) {
      if (w == removed)
        w = -1;
      else if (w > removed)
        --w;
    }
  };
  for (size_t layer = 0; layer < plan.layers.size(); ++layer) {
    for (const auto& op : plan.layers[layer]) {
      switch (op.kind) {
        case PlanOp::Kind::InitPlus: break;
        case PlanOp::Kind::CZ: t.apply(Gate::CZ, where[op.q1], where[op.q2]); break;
        case PlanOp::Kind::LocalClifford: {
          std::vector<int> nbrs;
          for (int u : op.lc_neighborhood) nbrs.push_back(where[u]);
          for (const auto& gate : lc_unitary_gates(where[op.q1], nbrs)) t.apply(gate);
          break;
        }
        case PlanOp::Kind::FusionII: {
          int a = where[op.q1], b = where[op.q2];
          try {
            t.fuse_pair(a, b, +1, +1);
          } catch (const std::exception& e) {
            return {false, "layer " + std::to_string(layer) + ": fusion failed: " + e.what()};
          }
          int hi = std::max(a, b), lo = std::min(a, b);
          drop_tracking(hi);
          drop_tracking(lo);
          break;
        }
      }
    }
  }
  if (t.num_qubits() != target.num_vertices()) {
    return {false, "surviving qubit count " + std::to_string(t.num_qubits()) +
                       " != target vertices " + std::to_string(target.num_vertices())};
  }
  // Build the target graph state with vertices renamed to the surviving
  // tableau positions.
  std::vector<int> position_of(target.num_vertices(), -1);
  for (int q = 0; q < total; ++q) {
    if (plan.qubit_map[q] >= 0) {
      if (where[q] < 0) return {false, "target qubit was consumed"};
      position_of[plan.qubit_map[q]] = where[q];
    }
  }
  Graph relabeled(target.num_vertices());
  for (auto [u, v] : target.edge_list()) relabeled.add_edge(position_of[u], position_of[v]);
  if (!states_equal(t, graph_state_tableau(relabeled))) {
    return {false, "final_state_mismatch"};
  }
  return {true, ""};
}

}  // namespace gsprep
