#include "gsprep/local_ops.hpp"

#include <algorithm>

#include "gsprep/errors.hpp"

namespace gsprep {

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::Sdg: return "Sdg";
    case Gate::SqrtXp: return "SqrtX+";
    case Gate::SqrtXm: return "SqrtX-";
    case Gate::SqrtYp: return "SqrtY+";
    case Gate::SqrtYm: return "SqrtY-";
    case Gate::SqrtZp: return "SqrtZ+";
    case Gate::SqrtZm: return "SqrtZ-";
    case Gate::X: return "X";
    case Gate::Y: return "Y";
    case Gate::Z: return "Z";
    case Gate::CZ: return "CZ";
  }
  return "?";
}

Graph local_complement(const Graph& g, int v) {
  check_vertex(g, v, "local_complement");
  Graph h = g;
  h.complement_neighborhood(v);
  return h;
}

Graph edge_pivot(const Graph& g, int u, int v) {
  check_vertex(g, u, "edge_pivot");
  check_vertex(g, v, "edge_pivot");
  if (!g.has_edge(u, v)) {
    throw InputError("edge_pivot: (" + std::to_string(u) + "," + std::to_string(v) +
                     ") is not an edge");
  }
  return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph apply_sequence(const Graph& g, const LcSequence& s) {
  Graph h = g;
  for (size_t i = 0; i < s.steps.size(); ++i) {
    const LcStep& step = s.steps[i];
    try {
      if (step.kind == LcStep::Kind::LocalComplement) {
        h = local_complement(h, step.v);
      } else {
        h = edge_pivot(h, step.u, step.v);
      }
    } catch (const InputError& e) {
      throw InputError("apply_sequence: step " + std::to_string(i) + ": " + e.what());
    }
  }
  return h;
}

VertexDeletion delete_vertex(const Graph& g, int v) {
  check_vertex(g, v, "delete_vertex");
  int n = g.num_vertices();
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i < v ? i : (i == v ? -1 : i - 1);
  Graph h(n - 1);
  for (auto [a, b] : g.edge_list()) {
    if (a != v && b != v) h.add_edge(map[a], map[b]);
  }
  return {std::move(h), std::move(map)};
}

MeasurementOutcome measure_pauli(const Graph& g, int v, PauliBasis basis, int sign,
                                 std::optional<int> pivot_partner, bool isolated_x_as_z) {
  check_vertex(g, v, "measure_pauli");
  if (sign != 1 && sign != -1) throw InputError("measure_pauli: sign must be +1 or -1");

  MeasurementOutcome out;
  out.basis = basis;
  out.sign = sign;
  out.measured_vertex = v;

  auto nv = g.neighbors(v);

  if (basis == PauliBasis::X) {
    if (nv.empty()) {
      if (!isolated_x_as_z) {
        throw InputError("measure_pauli: X basis on isolated vertex " + std::to_string(v));
      }
      basis = PauliBasis::Z;  // documented fallback
    } else {
      int w = pivot_partner.value_or(nv.front());
      if (!g.has_edge(w, v)) {
        throw InputError("measure_pauli: pivot partner " + std::to_string(w) +
                         " is not a neighbor of " + std::to_string(v));
      }
      out.pivot_partner = w;
      Graph pivoted = edge_pivot(g, w, v);
      auto del = delete_vertex(pivoted, v);
      out.residual_graph = std::move(del.graph);
      out.old_to_new = del.old_to_new;
      // The +1 byproduct is a Y-rotation on w plus Z on N(v)\N(w)\{w}; the
      // -1 byproduct rotates the other way with Z on N(w)\N(v)\{v}. The
      // rotation roots here are the ones that reproduce the residual graph
      // state at the stabilizer level.
      out.byproduct.push_back({sign > 0 ? Gate::SqrtYm : Gate::SqrtYp, del.old_to_new[w]});
      if (sign > 0) {
        for (int u : nv) {
          if (u != w && !g.has_edge(u, w)) out.byproduct.push_back({Gate::Z, del.old_to_new[u]});
        }
      } else {
        g.for_each_neighbor(w, [&](int u) {
          if (u != v && !g.has_edge(u, v)) out.byproduct.push_back({Gate::Z, del.old_to_new[u]});
        });
      }
      return out;
    }
  }

  if (basis == PauliBasis::Z) {
    auto del = delete_vertex(g, v);
    out.residual_graph = std::move(del.graph);
    out.old_to_new = del.old_to_new;
    if (sign < 0) {
      for (int u : nv) out.byproduct.push_back({Gate::Z, del.old_to_new[u]});
    }
    return out;
  }

  // Y basis: residual c_v(G) \ v, byproduct sqrt(-s i Z) on each neighbor.
  auto del = delete_vertex(local_complement(g, v), v);
  out.residual_graph = std::move(del.graph);
  out.old_to_new = del.old_to_new;
  for (int u : nv) {
    out.byproduct.push_back({sign > 0 ? Gate::SqrtZm : Gate::SqrtZp, del.old_to_new[u]});
  }
  return out;
}

VertexDeletion fuse_type2_within(const Graph& g, int q1, int q2) {
  check_vertex(g, q1, "fuse_type2");
  check_vertex(g, q2, "fuse_type2");
  if (q1 == q2) throw InputError("fuse_type2: vertices coincide");
  Graph joined = g;
  for (int a : g.neighbors(q1)) {
    for (int b : g.neighbors(q2)) {
      if (a != b && a != q2 && b != q1 && !joined.has_edge(a, b)) joined.add_edge(a, b);
    }
  }
  int lo = std::min(q1, q2), hi = std::max(q1, q2);
  auto d1 = delete_vertex(joined, hi);
  auto d2 = delete_vertex(d1.graph, lo);
  std::vector<int> map(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) {
    int m = d1.old_to_new[i];
    map[i] = m < 0 ? -1 : d2.old_to_new[m];
  }
  return {std::move(d2.graph), std::move(map)};
}

static Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.num_vertices() + g2.num_vertices());
  for (auto [a, b] : g1.edge_list()) g.add_edge(a, b);
  int off = g1.num_vertices();
  for (auto [a, b] : g2.edge_list()) g.add_edge(a + off, b + off);
  return g;
}

FusionResult fuse_type2(const Graph& g1, int q1, const Graph& g2, int q2) {
  check_vertex(g1, q1, "fuse_type2");
  check_vertex(g2, q2, "fuse_type2");
  int off = g1.num_vertices();
  auto fused = fuse_type2_within(disjoint_union(g1, g2), q1, q2 + off);
  FusionResult out;
  out.graph = std::move(fused.graph);
  out.map1.assign(fused.old_to_new.begin(), fused.old_to_new.begin() + off);
  out.map2.assign(fused.old_to_new.begin() + off, fused.old_to_new.end());
  return out;
}

FusionResult fuse_type1(const Graph& g1, int q1, const Graph& g2, int q2) {
  check_vertex(g1, q1, "fuse_type1");
  check_vertex(g2, q2, "fuse_type1");
  int off = g1.num_vertices();
  Graph u = disjoint_union(g1, g2);
  for (int b : g2.neighbors(q2)) {
    if (!u.has_edge(q1, b + off)) u.add_edge(q1, b + off);
  }
  auto del = delete_vertex(u, q2 + off);
  FusionResult out;
  out.graph = std::move(del.graph);
  out.map1.assign(del.old_to_new.begin(), del.old_to_new.begin() + off);
  out.map2.assign(del.old_to_new.begin() + off, del.old_to_new.end());
  out.map2[q2] = out.map1[q1];  // merged vertex
  return out;
}

}  // namespace gsprep
