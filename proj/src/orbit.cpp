#include "gsprep/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gsprep/errors.hpp"
#include "gsprep/split_tree.hpp"

namespace gsprep {

namespace {

struct KeyHash {
  size_t operator()(const std::vector<uint64_t>& key) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : key) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

using Visited = std::unordered_map<std::vector<uint64_t>, int, KeyHash>;

// Vertices worth complementing: degree <= 1 leaves the graph unchanged.
std::vector<int> active_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) >= 2) out.push_back(v);
  }
  return out;
}

}  // namespace

bool OrbitEnumeration::contains(const Graph& g) const {
  for (const auto& m : members) {
    if (m.g == g) return true;
  }
  return false;
}

LcSequence OrbitEnumeration::witness_to(size_t index) const {
  std::vector<int> vertices;
  int at = static_cast<int>(index);
  while (at > 0) {
    vertices.push_back(members[at].via_vertex);
    at = members[at].parent;
  }
  std::reverse(vertices.begin(), vertices.end());
  LcSequence seq;
  Graph h = members[0].g;
  for (int v : vertices) {
    seq.push(LcStep::lc(v), h.neighbors(v));
    h = local_complement(h, v);
  }
  return seq;
}

OrbitEnumeration enumerate_orbit_serial(const Graph& g, size_t max_size) {
  if (!g.is_connected()) throw InputError("enumerate_orbit: graph must be connected");
  OrbitEnumeration orbit;
  Visited visited;
  orbit.members.push_back({g, -1, -1});
  visited.emplace(g.canonical_key(), 0);
  std::vector<int> active = active_vertices(g);
  for (size_t at = 0; at < orbit.members.size(); ++at) {
    Graph current = orbit.members[at].g;  // copy: members may reallocate
    for (int v : active) {
      Graph h = local_complement(current, v);
      auto key = h.canonical_key();
      if (visited.emplace(std::move(key), static_cast<int>(orbit.members.size())).second) {
        orbit.members.push_back({std::move(h), static_cast<int>(at), v});
        if (orbit.members.size() > max_size) {
          throw LimitError("enumerate_orbit: exceeded max_size=" + std::to_string(max_size) +
                           " (partial result discarded)");
        }
      }
    }
  }
  return orbit;
}

OrbitEnumeration enumerate_orbit(const Graph& g, size_t max_size) {
  if (!g.is_connected()) throw InputError("enumerate_orbit: graph must be connected");
  OrbitEnumeration orbit;
  Visited visited;
  orbit.members.push_back({g, -1, -1});
  visited.emplace(g.canonical_key(), 0);
  std::vector<int> active = active_vertices(g);
  size_t frontier_begin = 0;
  std::vector<Graph> produced;
  std::vector<std::vector<uint64_t>> keys;
  std::vector<char> fresh;
  while (frontier_begin < orbit.members.size()) {
    size_t frontier_end = orbit.members.size();
    size_t jobs = (frontier_end - frontier_begin) * active.size();
    produced.assign(jobs, Graph());
    keys.assign(jobs, {});
    fresh.assign(jobs, 0);
    // Expansion and the probe against already-known members run in
    // parallel; the visited set is read-only here and duplicate candidates
    // never leave the thread-local scratch buffers.
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
      Graph scratch;
      std::vector<uint64_t> keybuf;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
      for (size_t job = 0; job < jobs; ++job) {
        size_t member = frontier_begin + job / active.size();
        int v = active[job % active.size()];
        scratch = orbit.members[member].g;
        scratch.complement_neighborhood(v);
        scratch.canonical_key_into(keybuf);
        if (visited.find(keybuf) == visited.end()) {
          produced[job] = scratch;
          keys[job] = keybuf;
          fresh[job] = 1;
        }
      }
    }
    // Deterministic serial merge in (parent, vertex) order: only survivors
    // of the probe (new members plus same-level duplicates) touch the map,
    // and the member list matches the serial enumeration exactly.
    for (size_t job = 0; job < jobs; ++job) {
      if (!fresh[job]) continue;
      if (visited.emplace(std::move(keys[job]), static_cast<int>(orbit.members.size())).second) {
        orbit.members.push_back({std::move(produced[job]),
                                 static_cast<int>(frontier_begin + job / active.size()),
                                 active[job % active.size()]});
        if (orbit.members.size() > max_size) {
          throw LimitError("enumerate_orbit: exceeded max_size=" + std::to_string(max_size) +
                           " (partial result discarded)");
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return orbit;
}

OrbitReport oracle_min_stats(const Graph& g, size_t max_size) {
  OrbitEnumeration orbit = enumerate_orbit(g, max_size);
  OrbitReport report;
  report.orbit_size = orbit.size();
  size_t best_e = 0, best_d = 0;
  int min_e = orbit.members[0].g.edge_count();
  int min_d = orbit.members[0].g.max_degree();
  for (size_t i = 1; i < orbit.size(); ++i) {
    int e = orbit.members[i].g.edge_count();
    int d = orbit.members[i].g.max_degree();
    if (e < min_e) {
      min_e = e;
      best_e = i;
    }
    if (d < min_d) {
      min_d = d;
      best_d = i;
    }
  }
  report.min_edges = min_e;
  report.min_max_degree = min_d;
  report.min_edge_representative = orbit.members[best_e].g;
  report.min_degree_representative = orbit.members[best_d].g;
  report.min_edge_witness = orbit.witness_to(best_e);
  report.min_degree_witness = orbit.witness_to(best_d);
  return report;
}

uint64_t orbit_size_bipartite(int n, int m) {
  if (n < 2 || m < 2) throw InputError("orbit_size_bipartite: parts must be >= 2");
  return static_cast<uint64_t>(n) * m + n + m + 3;
}

static void require_formula_parts(std::span<const int> parts, const char* what) {
  if (parts.size() < 2) throw InputError(std::string(what) + ": need k >= 2");
  for (int p : parts) {
    if (p < 2) throw InputError(std::string(what) + ": parts must be >= 2");
  }
}

namespace {
// (even, odd) sums of the expanded products of prod_i (n_i + 1): the terms
// with an even resp. odd number of n_i factors.
std::pair<uint64_t, uint64_t> even_odd_products(std::span<const int> parts) {
  uint64_t even = 1, odd = 0;
  for (int p : parts) {
    uint64_t e = even + odd * p;
    uint64_t o = odd + even * p;
    even = e;
    odd = o;
  }
  return {even, odd};
}

uint64_t sum_of_leave_one_out(std::span<const int> parts) {
  uint64_t total = 0;
  for (size_t j = 0; j < parts.size(); ++j) {
    uint64_t prod = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i != j) prod *= static_cast<uint64_t>(parts[i]) + 1;
    }
    total += prod;
  }
  return total;
}

struct Extremes {
  int k;
  int nj;  // smallest part
  int nt;  // second smallest
  int nl;  // largest
  long long sum_minus_min;  // sum over i != j of (n_i - 1)
  long long sum_all;        // sum over all i of (n_i - 1)
};

Extremes extremes(std::span<const int> parts) {
  std::vector<int> sorted(parts.begin(), parts.end());
  std::sort(sorted.begin(), sorted.end());
  Extremes e;
  e.k = static_cast<int>(sorted.size());
  e.nj = sorted.front();
  e.nt = sorted.size() > 1 ? sorted[1] : sorted[0];
  e.nl = sorted.back();
  e.sum_all = 0;
  for (int p : sorted) e.sum_all += p - 1;
  e.sum_minus_min = e.sum_all - (e.nj - 1);
  return e;
}
}  // namespace

uint64_t orbit_size_multipartite(std::span<const int> parts) {
  require_formula_parts(parts, "orbit_size_multipartite");
  return even_odd_products(parts).first + sum_of_leave_one_out(parts);
}

uint64_t orbit_size_cliquestar(std::span<const int> parts) {
  require_formula_parts(parts, "orbit_size_cliquestar");
  return even_odd_products(parts).second + sum_of_leave_one_out(parts);
}

int min_edges_formula(OrbitFamily family, std::span<const int> parts, int case_index) {
  require_formula_parts(parts, "min_edges_formula");
  Extremes e = extremes(parts);
  long long kk = static_cast<long long>(e.k) * (e.k - 1) / 2;
  long long expr_full = kk + e.sum_all;
  long long expr_min_clique =
      static_cast<long long>(e.nj) * (e.k - 1) + static_cast<long long>(e.nj) * (e.nj - 1) / 2 +
      e.sum_minus_min;
  long long expr_min_star = static_cast<long long>(e.nj) * (e.k - 1) + e.sum_minus_min;
  long long value;
  if (family == OrbitFamily::Multipartite) {
    switch (case_index) {
      case 1: value = expr_full; break;
      case 2: value = expr_min_clique; break;
      case 3: value = expr_min_star; break;
      default: throw InputError("min_edges_formula: case must be 1..3");
    }
  } else {
    switch (case_index) {
      case 1: value = expr_min_star; break;
      case 2: value = expr_full; break;
      case 3: value = expr_min_clique; break;
      default: throw InputError("min_edges_formula: case must be 1..3");
    }
  }
  return static_cast<int>(value);
}

int min_degree_formula_case(OrbitFamily family, std::span<const int> parts, int case_index) {
  require_formula_parts(parts, "min_degree_formula");
  Extremes e = extremes(parts);
  // Branch A applies to multipartite graphs with even k and clique-stars
  // with odd k; branch B to the other parity.
  auto branch_a = [&](int c) {
    switch (c) {
      case 1: return e.nl + e.k - 2;
      case 2: return std::max(e.k - 1 + e.nt, e.nl - 1 + e.nj);
      case 3: return std::max(e.nj + e.k - 2, e.nl - 1 + e.nj);
      default: throw InputError("min_degree_formula: case must be 1..3");
    }
  };
  auto branch_b = [&](int c) {
    switch (c) {
      case 1: return e.nl + e.nj + e.k - 3;
      case 2: return std::max(e.k - 1, e.nl - 1 + e.nj);
      case 3: return std::max(e.nj + e.nt + e.k - 3, e.nl - 1 + e.nj);
      default: throw InputError("min_degree_formula: case must be 1..3");
    }
  };
  bool even_k = e.k % 2 == 0;
  bool use_a = (family == OrbitFamily::Multipartite) == even_k;
  return use_a ? branch_a(case_index) : branch_b(case_index);
}

int min_degree_formula(OrbitFamily family, std::span<const int> parts) {
  int best = min_degree_formula_case(family, parts, 1);
  for (int c = 2; c <= 3; ++c) best = std::min(best, min_degree_formula_case(family, parts, c));
  return best;
}

namespace {
// Reference rows transcribed from the tabulated family data, part lists in
// descending order. Orbit-size columns double as a transcription check
// against the closed forms (asserted in tests).
const std::vector<FamilyTableRow> kFamilyRows = {
    {{2, 2, 2}, 40, 6, 4, 41, 6, 4},
    {{3, 2, 2}, 50, 7, 5, 52, 7, 5},
    {{4, 2, 2}, 60, 8, 6, 63, 8, 6},
    {{3, 3, 2}, 62, 8, 5, 66, 8, 5},
    {{2, 2, 2, 2}, 149, 10, 5, 148, 9, 4},
    {{5, 2, 2}, 70, 9, 7, 74, 9, 7},
    {{4, 3, 2}, 74, 9, 6, 80, 9, 6},
    {{3, 3, 3}, 76, 10, 6, 84, 9, 5},
    {{3, 2, 2, 2}, 190, 11, 5, 188, 10, 5},
    {{6, 2, 2}, 80, 10, 8, 85, 10, 8},
    {{5, 3, 2}, 86, 10, 7, 94, 10, 7},
    {{4, 4, 2}, 88, 10, 6, 97, 10, 6},
    {{4, 3, 3}, 90, 11, 7, 102, 10, 6},
    {{4, 2, 2, 2}, 231, 12, 6, 228, 11, 6},
    {{3, 3, 2, 2}, 242, 12, 5, 238, 11, 5},
    {{2, 2, 2, 2, 2}, 526, 12, 5, 527, 13, 6},
    {{7, 2, 2}, 90, 11, 9, 96, 11, 9},
    {{6, 3, 2}, 98, 11, 8, 108, 11, 8},
    {{5, 4, 2}, 102, 11, 7, 114, 11, 7},
    {{5, 3, 3}, 104, 12, 8, 120, 11, 7},
    {{5, 2, 2, 2}, 272, 13, 7, 268, 12, 7},
    {{4, 4, 3}, 106, 12, 7, 124, 11, 6},
    {{4, 3, 2, 2}, 294, 13, 6, 288, 12, 6},
    {{3, 3, 3, 2}, 308, 13, 5, 300, 12, 5},
    {{3, 2, 2, 2, 2}, 674, 13, 5, 676, 14, 6},
    {{8, 2, 2}, 100, 12, 10, 107, 12, 10},
    {{7, 3, 2}, 110, 12, 9, 122, 12, 9},
    {{6, 4, 2}, 116, 12, 8, 131, 12, 8},
    {{6, 3, 3}, 118, 13, 9, 138, 12, 8},
    {{6, 2, 2, 2}, 313, 14, 8, 308, 13, 8},
    {{5, 5, 2}, 118, 12, 7, 134, 12, 7},
    {{5, 4, 3}, 122, 13, 8, 146, 12, 7},
    {{5, 3, 2, 2}, 346, 14, 7, 338, 13, 7},
    {{4, 4, 4}, 124, 14, 8, 151, 12, 6},
    {{4, 4, 2, 2}, 357, 14, 6, 348, 13, 6},
    {{4, 3, 3, 2}, 374, 14, 6, 362, 13, 6},
    {{4, 2, 2, 2, 2}, 822, 14, 6, 825, 15, 6},
    {{3, 3, 3, 3}, 392, 14, 6, 376, 15, 6},
    {{3, 3, 2, 2, 2}, 862, 14, 5, 866, 15, 6},
    {{2, 2, 2, 2, 2, 2}, 1823, 16, 7, 1822, 15, 6},
    {{8, 8, 8}, 436, 30, 16, 779, 24, 10},
    {{6, 6, 6, 6}, 2885, 26, 9, 2260, 33, 12},
    {{9, 8, 8}, 470, 31, 17, 862, 25, 11},
    {{7, 6, 6, 6}, 3266, 27, 10, 2516, 34, 13},
    {{5, 5, 5, 5, 5}, 9856, 36, 10, 10880, 30, 9},
    {{10, 8, 8}, 504, 32, 18, 945, 26, 12},
    {{9, 9, 8}, 506, 32, 17, 954, 26, 11},
    {{8, 6, 6, 6}, 3647, 28, 11, 2772, 35, 14},
    {{7, 7, 6, 6}, 3698, 28, 10, 2798, 35, 13},
    {{6, 5, 5, 5, 5}, 11240, 37, 11, 12520, 31, 10},
    {{11, 8, 8}, 538, 33, 19, 1028, 27, 13},
    {{10, 9, 8}, 542, 33, 18, 1046, 27, 12},
    {{9, 9, 9}, 544, 34, 18, 1056, 27, 11},
    {{9, 6, 6, 6}, 4028, 29, 12, 3028, 36, 15},
    {{8, 7, 6, 6}, 4130, 29, 11, 3080, 36, 14},
    {{7, 7, 7, 6}, 4188, 29, 10, 3108, 36, 13},
    {{7, 5, 5, 5, 5}, 12624, 38, 12, 14160, 32, 11},
    {{6, 6, 5, 5, 5}, 12808, 38, 11, 14408, 32, 10},
};
}  // namespace

std::span<const FamilyTableRow> family_reference_rows() { return kFamilyRows; }

const FamilyTableRow* find_reference_row(std::span<const int> parts) {
  std::vector<int> sorted(parts.begin(), parts.end());
  std::sort(sorted.rbegin(), sorted.rend());
  for (const auto& row : kFamilyRows) {
    if (row.parts == sorted) return &row;
  }
  return nullptr;
}

MinEdgeSelection select_min_edges(OrbitFamily family, std::span<const int> parts) {
  MinEdgeSelection sel;
  for (int c = 1; c <= 3; ++c) sel.case_values[c - 1] = min_edges_formula(family, parts, c);
  int target = -1;
  if (const FamilyTableRow* row = find_reference_row(parts)) {
    target = family == OrbitFamily::Multipartite ? row->cm_min_edges : row->cs_min_edges;
  } else if (std::accumulate(parts.begin(), parts.end(), 0) <= 9) {
    std::vector<int> p(parts.begin(), parts.end());
    Graph g = build(family == OrbitFamily::Multipartite ? FamilySpec::multipartite(p)
                                                        : FamilySpec::clique_star(1, p));
    target = oracle_min_stats(g).min_edges;
  }
  if (target < 0) return sel;  // case predicate unknown at this size
  for (int c = 1; c <= 3; ++c) {
    if (sel.case_values[c - 1] == target) {
      sel.known = true;
      sel.value = target;
      sel.case_index = c;
      return sel;
    }
  }
  throw std::logic_error("select_min_edges: no case matches the reference value");
}

BipartiteSymmetryClass bipartite_classify(const Graph& g) {
  Qasst q = decompose(g);
  if (q.quotients.size() != 2 || q.tree_edges.size() != 1) {
    throw InputError("bipartite_classify: QASST does not have exactly two quotients");
  }
  auto sym = [&](const Quotient& quot, int split_node) {
    if (quot.cls == QuotientClass::Complete) return QuotientSym::Complete;
    if (quot.cls != QuotientClass::Star) {
      throw InputError("bipartite_classify: prime quotient; not bipartite-equivalent");
    }
    return quot.star_center == split_node ? QuotientSym::StarCenter : QuotientSym::StarSpoke;
  };
  const auto& edge = q.tree_edges[0];
  TreeEnd e1 = edge.first.quotient == 0 ? edge.first : edge.second;
  TreeEnd e2 = edge.first.quotient == 0 ? edge.second : edge.first;
  return {sym(q.quotients[e1.quotient], e1.node), sym(q.quotients[e2.quotient], e2.node)};
}

LcSequence bipartite_transform(int n, int m, BipartiteSymmetryClass target) {
  if (n < 2 || m < 2) throw InputError("bipartite_transform: parts must be >= 2");
  using S = QuotientSym;
  const int in = 0;  // smallest id in the first part
  const int im = n;  // smallest id in the second part
  std::vector<int> vertices;
  if (target == BipartiteSymmetryClass{S::StarCenter, S::StarCenter}) {
    vertices = {};
  } else if (target == BipartiteSymmetryClass{S::StarCenter, S::Complete}) {
    vertices = {in};
  } else if (target == BipartiteSymmetryClass{S::Complete, S::StarCenter}) {
    vertices = {im};
  } else if (target == BipartiteSymmetryClass{S::StarSpoke, S::Complete}) {
    vertices = {im, in};
  } else if (target == BipartiteSymmetryClass{S::Complete, S::StarSpoke}) {
    vertices = {in, im};
  } else if (target == BipartiteSymmetryClass{S::StarSpoke, S::StarSpoke}) {
    vertices = {in, im, in};
  } else {
    throw InputError("bipartite_transform: inadmissible symmetry class");
  }
  LcSequence seq;
  Graph h = build(FamilySpec::bipartite(n, m));
  for (int v : vertices) {
    seq.push(LcStep::lc(v), h.neighbors(v));
    h = local_complement(h, v);
  }
  return seq;
}

FamilySpec multileaf_repeater_equivalent(std::span<const int> parts) {
  if (parts.size() < 2) throw InputError("multileaf_repeater_equivalent: need k >= 2");
  std::vector<int> p(parts.begin(), parts.end());
  if (parts.size() % 2 == 0) return FamilySpec::multipartite(std::move(p));
  return FamilySpec::clique_star(1, std::move(p));
}

}  // namespace gsprep
