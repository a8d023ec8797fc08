#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gsprep/graph.hpp"

namespace gsprep {

enum class QuotientClass { Prime, Star, Complete };

/// Role of one node inside a quotient graph: either an original vertex of
/// the decomposed graph, or a split node paired with a split node of an
/// adjacent quotient through a tree edge.
struct NodeRole {
  bool is_leaf = false;
  int vertex = -1;  // original vertex id when is_leaf
};

struct Quotient {
  int id = 0;
  Graph graph;                  // adjacency over this quotient's nodes
  std::vector<NodeRole> roles;  // one per node
  QuotientClass cls = QuotientClass::Prime;
  int star_center = -1;  // node index, Star only

  int split_count() const;
  int leaf_count() const;
};

struct TreeEnd {
  int quotient = 0;
  int node = 0;
  bool operator==(const TreeEnd&) const = default;
  auto operator<=>(const TreeEnd&) const = default;
};

/// Quotient-augmented strong split tree: the canonical split decomposition
/// of a connected graph. Tree edges pair up split nodes of adjacent
/// quotients; leaf-role nodes across all quotients biject onto the original
/// vertex ids.
struct Qasst {
  std::vector<Quotient> quotients;
  std::vector<std::pair<TreeEnd, TreeEnd>> tree_edges;
  int source_vertex_count = 0;

  /// For a tree edge, the bipartition of original vertex ids induced by
  /// cutting the tree there. Used for the strong-split cross-checks.
  std::pair<std::vector<int>, std::vector<int>> edge_bipartition(size_t edge_index) const;
};

/// A bipartition (U1, U2) whose crossing edges form a complete bipartite
/// subgraph, with both sides of size >= 2.
struct Split {
  std::vector<int> side1;
  std::vector<int> side2;
  std::vector<int> frontier1;  // side1 vertices with crossing edges
  std::vector<int> frontier2;
};

/// All nontrivial splits by exhaustive bipartition scan. Oracle only;
/// refuses graphs with more than 16 vertices.
std::vector<Split> find_splits_bruteforce(const Graph& g);

/// One nontrivial split found in polynomial time, or nullopt if g is prime
/// (or too small to have one).
std::optional<Split> find_any_split(const Graph& g);

Qasst decompose(const Graph& g);
Graph reconstruct(const Qasst& q);
bool is_distance_hereditary(const Graph& g);

/// Swaps the internal graph of one quotient; node count and role positions
/// carry over unchanged.
Qasst quotient_substitute(const Qasst& q, int quotient_id, const Graph& replacement);

QuotientClass classify_quotient(const Graph& g, int* star_center_out = nullptr);

bool splits_cross(const Split& a, const Split& b);

}  // namespace gsprep
