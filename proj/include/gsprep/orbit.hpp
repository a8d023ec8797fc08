#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gsprep/families.hpp"
#include "gsprep/graph.hpp"
#include "gsprep/local_ops.hpp"

namespace gsprep {

/// One member of an enumerated LC orbit, with the BFS provenance needed to
/// replay a witness sequence from the source graph.
struct OrbitMember {
  Graph g;
  int parent = -1;      // index into the member list, -1 for the source
  int via_vertex = -1;  // local complement applied to the parent
};

struct OrbitEnumeration {
  std::vector<OrbitMember> members;  // members[0] is the input graph

  size_t size() const { return members.size(); }
  bool contains(const Graph& g) const;
  LcSequence witness_to(size_t index) const;
};

/// Labeled-graph LC orbit by breadth-first closure under local complements
/// (no isomorphism quotienting; this matches the counting convention of the
/// closed-form orbit sizes). Throws LimitError past max_size members.
/// The default expands frontiers with OpenMP; the serial variant is the
/// reference implementation and both return identical member sets.
OrbitEnumeration enumerate_orbit(const Graph& g, size_t max_size = 100000);
OrbitEnumeration enumerate_orbit_serial(const Graph& g, size_t max_size = 100000);

struct OrbitReport {
  size_t orbit_size = 0;
  int min_edges = 0;
  int min_max_degree = 0;
  Graph min_edge_representative;
  Graph min_degree_representative;
  LcSequence min_edge_witness;
  LcSequence min_degree_witness;
};

OrbitReport oracle_min_stats(const Graph& g, size_t max_size = 100000);

/// |O(K_{n,m})| = nm + n + m + 3 for n,m >= 2.
uint64_t orbit_size_bipartite(int n, int m);

/// Orbit sizes for complete multipartite graphs and clique-stars: the even
/// (resp. odd) products of prod_i (n_i + 1) plus sum_j prod_{i != j} (n_i+1).
uint64_t orbit_size_multipartite(std::span<const int> parts);
uint64_t orbit_size_cliquestar(std::span<const int> parts);

enum class OrbitFamily { Multipartite, CliqueStar };

/// Literal per-case minimum-edge expressions (cases 1..3). Which case
/// applies to a given part list is decided externally; see
/// select_min_edges.
int min_edges_formula(OrbitFamily family, std::span<const int> parts, int case_index);

/// Per-case minimum-degree expressions, parity-aware in k.
int min_degree_formula_case(OrbitFamily family, std::span<const int> parts, int case_index);

/// The minimum over the three case expressions; this is the orbit's minimal
/// maximum degree for these families.
int min_degree_formula(OrbitFamily family, std::span<const int> parts);

/// Case selection for the minimum-edge formulas. The applicability
/// predicates live outside this artifact, so the selection is validated
/// against tabulated reference rows, or against the BFS oracle when the
/// instance is small enough; otherwise the result is flagged unknown and
/// carries all three case values.
struct MinEdgeSelection {
  bool known = false;
  int value = -1;
  int case_index = -1;
  std::array<int, 3> case_values{};
};

MinEdgeSelection select_min_edges(OrbitFamily family, std::span<const int> parts);

/// Tabulated reference row for one part list (descending order).
struct FamilyTableRow {
  std::vector<int> parts;
  uint64_t cm_orbit;
  int cm_min_edges;
  int cm_min_maxdeg_plus1;
  uint64_t cs_orbit;
  int cs_min_edges;
  int cs_min_maxdeg_plus1;
};

std::span<const FamilyTableRow> family_reference_rows();
const FamilyTableRow* find_reference_row(std::span<const int> parts);

enum class QuotientSym { StarCenter, StarSpoke, Complete };

/// QASST symmetry class of a graph locally equivalent to some K_{n,m}:
/// what each of the two quotients looks like and where its split node sits.
struct BipartiteSymmetryClass {
  QuotientSym q1;
  QuotientSym q2;
  bool operator==(const BipartiteSymmetryClass&) const = default;
};

BipartiteSymmetryClass bipartite_classify(const Graph& g);

/// The local-complement sequence turning K_{n,m} into a representative of
/// the target symmetry class, acting on vertex 0 of the first part and
/// vertex n of the second.
LcSequence bipartite_transform(int n, int m, BipartiteSymmetryClass target);

/// Multi-leaf repeaters are locally equivalent to a complete multipartite
/// graph for even k and to a clique-star (reported with r = 1) for odd k.
FamilySpec multileaf_repeater_equivalent(std::span<const int> parts);

}  // namespace gsprep
