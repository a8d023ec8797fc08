#pragma once

#include <string>
#include <vector>

#include "gsprep/edge_coloring.hpp"
#include "gsprep/graph.hpp"
#include "gsprep/heuristic.hpp"
#include "gsprep/split_tree.hpp"

namespace gsprep {

/// One scheduled circuit operation. LocalClifford realizes the
/// local-complement unitary at q1; the recorded neighborhood pins down its
/// single-qubit factors for both graph replay and stabilizer execution.
struct PlanOp {
  enum class Kind { InitPlus, CZ, LocalClifford, FusionII };
  Kind kind;
  int q1 = -1;
  int q2 = -1;
  std::vector<int> lc_neighborhood;
};

struct ResourceSummary {
  int cz_total = 0;  // fusions counted as CZ
  int time_steps = 0;
  int qubits_total = 0;
  int qubits_aux = 0;
  bool operator==(const ResourceSummary&) const = default;
};

/// Time-layered preparation plan. layers[0] holds the qubit
/// initializations and is not counted as a time step; layers 1..time_steps
/// hold the scheduled operations (a layer may be empty when the accounting
/// reserves a step, e.g. the split-fuse conversion stage).
struct PreparationPlan {
  std::vector<std::vector<PlanOp>> layers;
  std::vector<int> qubit_map;  // plan qubit -> target vertex, -1 for auxiliary
  ResourceSummary summary;
};

enum class Strategy { Naive, Heuristic, SplitFuse, Generalized, GeneralizedHeuristic };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Init everything, one CZ per edge, depth from the edge coloring.
PreparationPlan plan_naive(const Graph& g);

/// Direct preparation of the triangle-greedy improved graph followed by the
/// inverse local-Clifford conversion layer back to the target.
PreparationPlan plan_heuristic(const Graph& g);

/// Split-fuse preparation of a distance-hereditary graph state: star
/// intermediate states per quotient, a conversion layer, one simultaneous
/// fusion layer. The conversion layer is always counted, which keeps the
/// summary aligned with the closed-form resource expressions.
PreparationPlan plan_split_fuse(const Graph& g);

enum class PrimeStrategy { Naive, Heuristic };

/// Hybrid split-fuse for arbitrary connected graphs: star and complete
/// quotients prepared as stars, prime quotients prepared directly or via
/// the triangle heuristic. A graph that is itself a single prime quotient
/// degrades to the direct strategy (no conversion or fusion stage).
PreparationPlan plan_generalized(const Graph& g, PrimeStrategy prime);

PreparationPlan make_plan(const Graph& g, Strategy s);

/// Closed-form split-fuse resources from the tree shape alone. Requires
/// every quotient to be star or complete.
ResourceSummary resource_formulas(const Qasst& q);

/// Throws InputError naming the offending layer on structural problems
/// (double-init, use of consumed qubits, two-qubit clashes in a layer).
void validate_plan(const PreparationPlan& plan);

/// Replays the plan under graph semantics: init adds an isolated vertex, CZ
/// toggles an edge, LocalClifford applies the local complement it records,
/// FusionII applies the graph fusion rule. Returns the produced graph over
/// target vertex ids.
Graph replay_plan_graph(const PreparationPlan& plan);

struct StrategyRow {
  std::string strategy;
  ResourceSummary summary;
};

/// Rows for naive, heuristic, (generalized) split-fuse, generalized +
/// heuristic, and -- when the graph is a recognized family instance with a
/// known optimum -- the formula-optimal representative.
std::vector<StrategyRow> compare_strategies(const Graph& g);

}  // namespace gsprep
