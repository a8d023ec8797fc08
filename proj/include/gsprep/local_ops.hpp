#pragma once

#include <optional>
#include <vector>

#include "gsprep/gates.hpp"
#include "gsprep/graph.hpp"

namespace gsprep {

/// One step of a local-complementation sequence: either c_v or the edge
/// pivot ep_{(u,v)} = c_u . c_v . c_u (which requires {u,v} to be an edge
/// of the graph it is applied to).
struct LcStep {
  enum class Kind { LocalComplement, EdgePivot };
  Kind kind = Kind::LocalComplement;
  int v = -1;
  int u = -1;  // pivot partner, EdgePivot only

  static LcStep lc(int v) { return {Kind::LocalComplement, v, -1}; }
  static LcStep pivot(int u, int v) { return {Kind::EdgePivot, v, u}; }
  bool operator==(const LcStep&) const = default;
};

/// Ordered LC steps plus the neighborhood of each step's vertex at the time
/// it was applied. The recorded neighborhoods are what downstream Clifford
/// synthesis needs to realize each step as gates.
struct LcSequence {
  std::vector<LcStep> steps;
  std::vector<std::vector<int>> neighborhoods;

  void push(LcStep s, std::vector<int> nbrs) {
    steps.push_back(s);
    neighborhoods.push_back(std::move(nbrs));
  }
  size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
};

Graph local_complement(const Graph& g, int v);
Graph edge_pivot(const Graph& g, int u, int v);
Graph apply_sequence(const Graph& g, const LcSequence& s);

struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;  // deleted vertex maps to -1
};

VertexDeletion delete_vertex(const Graph& g, int v);

enum class PauliBasis { X, Y, Z };

struct MeasurementOutcome {
  PauliBasis basis;
  int sign;  // +1 or -1
  int measured_vertex;
  std::optional<int> pivot_partner;  // X basis only
  Graph residual_graph;
  std::vector<int> old_to_new;
  /// Byproduct U_v^{(P,s)} as single-qubit Clifford factors on residual ids.
  std::vector<GateOp> byproduct;
};

/// Local Pauli measurement rewrite on a graph state's graph. For the X
/// basis the pivot partner defaults to the smallest-id neighbor of v; pass
/// `pivot_partner` to override. X on an isolated vertex is an error unless
/// `isolated_x_as_z` is set, which falls back to the Z rule.
MeasurementOutcome measure_pauli(const Graph& g, int v, PauliBasis basis, int sign,
                                 std::optional<int> pivot_partner = std::nullopt,
                                 bool isolated_x_as_z = false);

struct FusionResult {
  Graph graph;
  std::vector<int> map1;  // g1 old id -> new id (-1 if consumed)
  std::vector<int> map2;  // g2 old id -> new id
};

/// Type-II fusion of two graph states at q1, q2: all-to-all edges between
/// N(q1) and N(q2) are added across the disjoint union, then both fused
/// vertices are deleted.
FusionResult fuse_type2(const Graph& g1, int q1, const Graph& g2, int q2);

/// Type-II fusion between two vertices of one graph (the planner's view,
/// where every qubit already lives in a single system).
VertexDeletion fuse_type2_within(const Graph& g, int q1, int q2);

/// Type-I fusion: q1 and q2 merge into a single vertex inheriting the union
/// of their neighborhoods. The merged vertex sits at q1's slot in the union
/// labeling before recompaction.
FusionResult fuse_type1(const Graph& g1, int q1, const Graph& g2, int q2);

}  // namespace gsprep
