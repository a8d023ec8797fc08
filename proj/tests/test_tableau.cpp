#include <doctest.h>

#include "gsprep/errors.hpp"
#include "gsprep/families.hpp"
#include "gsprep/local_ops.hpp"
#include "gsprep/tableau.hpp"
#include "test_util.hpp"

using namespace gsprep;
using namespace gsprep::testutil;

namespace {

Tableau measured_graph_state(const Graph& g, int v, char basis, int sign) {
  Tableau t = graph_state_tableau(g);
  t.measure_qubit(v, basis, sign);
  return t;
}

void apply_inverse_byproduct(Tableau& t, const std::vector<GateOp>& byproduct) {
  // all factors are self-inverse up to the sqrt sign swap
  for (auto it = byproduct.rbegin(); it != byproduct.rend(); ++it) {
    GateOp inv = *it;
    switch (it->gate) {
      case Gate::SqrtXp: inv.gate = Gate::SqrtXm; break;
      case Gate::SqrtXm: inv.gate = Gate::SqrtXp; break;
      case Gate::SqrtYp: inv.gate = Gate::SqrtYm; break;
      case Gate::SqrtYm: inv.gate = Gate::SqrtYp; break;
      case Gate::SqrtZp: inv.gate = Gate::SqrtZm; break;
      case Gate::SqrtZm: inv.gate = Gate::SqrtZp; break;
      case Gate::S: inv.gate = Gate::Sdg; break;
      case Gate::Sdg: inv.gate = Gate::S; break;
      default: break;  // H and Paulis are involutions
    }
    t.apply(inv);
  }
}

}  // namespace

TEST_CASE("single-qubit conjugation sanity") {
  Tableau t(1);  // |+> stabilized by X
  t.apply(Gate::H, 0);
  CHECK(t.to_string() == "+Z\n");
  t.apply(Gate::H, 0);
  t.apply(Gate::S, 0);
  CHECK(t.to_string() == "+Y\n");
  t.apply(Gate::S, 0);
  CHECK(t.to_string() == "-X\n");
  t.apply(Gate::S, 0);
  t.apply(Gate::S, 0);
  CHECK(t.to_string() == "+X\n");
}

TEST_CASE("CZ on |++> produces the K_2 graph state") {
  Tableau t(2);
  t.apply(Gate::CZ, 0, 1);
  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK(states_equal(t, graph_state_tableau(k2)));
  CHECK(t.valid());
}

TEST_CASE("graph state rows are X_v with Z on the neighborhood") {
  Graph g = build(FamilySpec::star(2));
  Tableau t = graph_state_tableau(g);
  CHECK(t.to_string() == "+XZZ\n+ZXI\n+ZIX\n");
}

TEST_CASE("states_equal is basis independent") {
  Graph g = random_er_connected(6, 0.5, 17);
  Tableau a = graph_state_tableau(g);
  Tableau b = a;
  // generator shuffle: multiply rows together pairwise via gates is awkward;
  // compare against a tableau built through the circuit route instead
  CHECK(states_equal(a, b));
  Tableau plus(g.num_vertices());
  for (auto [u, v] : g.edge_list()) plus.apply(Gate::CZ, u, v);
  CHECK(states_equal(a, plus));

  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK_FALSE(states_equal(graph_state_tableau(k2), Tableau(2)));
}

TEST_CASE("local-complement unitary maps |G> to |c_v(G)>") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = random_er_connected(3 + static_cast<int>(seed % 6), 0.5, 2200 + seed);
    for (int v = 0; v < g.num_vertices(); ++v) {
      Tableau t = graph_state_tableau(g);
      auto nbrs = g.neighbors(v);
      for (const auto& gate : lc_unitary_gates(v, nbrs)) t.apply(gate);
      CHECK(states_equal(t, graph_state_tableau(local_complement(g, v))));
    }
  }
}

TEST_CASE("Z measurement of |+> leaves an empty register") {
  Tableau t(1);
  CHECK(t.measure_qubit(0, 'Z', +1) == +1);
  CHECK(t.num_qubits() == 0);
}

TEST_CASE("forced sign on a determined outcome") {
  Tableau t(1);  // stabilizer X: X-measurement is determined +
  CHECK(t.measure_qubit(0, 'X', std::nullopt) == +1);
  Tableau t2(1);
  CHECK_THROWS_AS(t2.measure_qubit(0, 'X', -1), InputError);
}

TEST_CASE("graph measurement rewrites match the stabilizer level") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_er_connected(3 + static_cast<int>(seed % 5), 0.5, 3300 + seed);
    for (int v = 0; v < g.num_vertices(); ++v) {
      for (auto [basis, ch] : std::vector<std::pair<PauliBasis, char>>{
               {PauliBasis::Z, 'Z'}, {PauliBasis::Y, 'Y'}, {PauliBasis::X, 'X'}}) {
        if (basis == PauliBasis::X && g.degree(v) == 0) continue;
        for (int sign : {+1, -1}) {
          auto rewrite = measure_pauli(g, v, basis, sign);
          Tableau t = measured_graph_state(g, v, ch, sign);
          apply_inverse_byproduct(t, rewrite.byproduct);
          CHECK(states_equal(t, graph_state_tableau(rewrite.residual_graph)));
        }
      }
    }
  }
}

TEST_CASE("X measurement identity holds for every pivot partner") {
  Graph g = random_er_connected(6, 0.5, 55);
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int w : g.neighbors(v)) {
      for (int sign : {+1, -1}) {
        auto rewrite = measure_pauli(g, v, PauliBasis::X, sign, w);
        Tableau t = measured_graph_state(g, v, 'X', sign);
        apply_inverse_byproduct(t, rewrite.byproduct);
        CHECK(states_equal(t, graph_state_tableau(rewrite.residual_graph)));
      }
    }
  }
}

TEST_CASE("tableau fusion equals the graph fusion rule on all outcome branches") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph g1 = random_er_connected(2 + static_cast<int>(seed % 5), 0.6, 4400 + seed);
    Graph g2 = random_er_connected(2 + static_cast<int>((seed + 2) % 5), 0.6, 4500 + seed);
    int q1 = static_cast<int>(seed) % g1.num_vertices();
    int q2 = static_cast<int>(seed / 2) % g2.num_vertices();
    Graph expected = fuse_type2(g1, q1, g2, q2).graph;
    for (int s1 : {+1, -1}) {
      for (int s2 : {+1, -1}) {
        Tableau fused;
        try {
          fused = fuse_type2_tableau(graph_state_tableau(g1), q1, graph_state_tableau(g2), q2,
                                     s1, s2);
        } catch (const InputError&) {
          // a determined Bell outcome contradicts this forced branch
          continue;
        }
        // fused qubit order: g1's survivors then g2's, matching the rule's map
        CHECK(states_equal(fused, graph_state_tableau(expected)));
      }
    }
  }
}

TEST_CASE("fusing two bare |+> qubits leaves an empty register") {
  Tableau t = fuse_type2_tableau(Tableau(1), 0, Tableau(1), 0);
  CHECK(t.num_qubits() == 0);
}

TEST_CASE("fusion of two edges is the two-qubit graph state") {
  Graph edge(2);
  edge.add_edge(0, 1);
  Tableau fused = fuse_type2_tableau(graph_state_tableau(edge), 1, graph_state_tableau(edge), 0);
  CHECK(states_equal(fused, graph_state_tableau(edge)));
}

TEST_CASE("tableau validity is preserved by gates and measurements") {
  Graph g = random_er_connected(7, 0.5, 66);
  Tableau t = graph_state_tableau(g);
  CHECK(t.valid());
  t.apply(Gate::H, 0);
  t.apply(Gate::SqrtYm, 3);
  t.apply(Gate::CZ, 1, 2);
  CHECK(t.valid());
  t.measure_qubit(4, 'Y', -1);
  CHECK(t.valid());
  CHECK(t.num_qubits() == 6);
}
