// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gsprep/errors.hpp"
#include "gsprep/families.hpp"
#include "gsprep/heuristic.hpp"
#include "gsprep/local_ops.hpp"
#include "gsprep/orbit.hpp"
#include "gsprep/planner.hpp"
#include "gsprep/reports.hpp"
#include "gsprep/split_tree.hpp"
#include "gsprep/tableau.hpp"
#include "gsprep/verify.hpp"

using namespace gsprep;

namespace {

struct Checker {
  int failures = 0;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (failures <= 5) detail << "    " << what << "\n";
    }
  }
};

// part lists with k parts >= 2 summing to <= budget
void part_lists(int budget, int min_k, std::vector<std::vector<int>>& out) {
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (static_cast<int>(acc.size()) >= min_k) out.push_back(acc);
    for (int p = std::min(left, max_part); p >= 2; --p) {
      acc.push_back(p);
      rec(left - p, p);
      acc.pop_back();
    }
  };
  rec(budget, budget);
}

int median(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

bool criterion1(Checker& c) {
  for (int n = 2; n <= 7; ++n) {
    for (int m = n; n + m <= 9; ++m) {
      auto report = oracle_min_stats(build(FamilySpec::bipartite(n, m)));
      c.expect(report.orbit_size == orbit_size_bipartite(n, m),
               "orbit size K_{" + std::to_string(n) + "," + std::to_string(m) + "}");
      c.expect(report.min_edges == n + m - 1, "min edges");
      c.expect(report.min_max_degree == std::max(n, m), "min max degree");
    }
  }
  return c.failures == 0;
}

bool criterion2(Checker& c) {
  std::vector<std::vector<int>> lists;
  part_lists(9, 2, lists);
  for (const auto& parts : lists) {
    uint64_t cm = orbit_size_multipartite(parts);
    c.expect(enumerate_orbit(build(FamilySpec::multipartite(parts))).size() == cm,
             "multipartite orbit size");
    if (parts.size() >= 3) {
      uint64_t cs = orbit_size_cliquestar(parts);
      c.expect(enumerate_orbit(build(FamilySpec::clique_star(1, parts))).size() == cs,
               "clique-star orbit size");
    }
  }
  std::vector<int> p3(3, 2), p4(4, 2);
  c.expect(orbit_size_multipartite(p3) == 40, "K_{2,2,2} closed form");
  c.expect(orbit_size_cliquestar(p3) == 41, "CS_{2,2,2} closed form");
  c.expect(orbit_size_multipartite(p4) == 149, "K_{2,2,2,2} closed form");
  c.expect(orbit_size_cliquestar(p4) == 148, "CS_{2,2,2,2} closed form");
  return c.failures == 0;
}

bool criterion3(Checker& c) {
  for (const auto& row : family_reference_rows()) {
    int total = 0;
    for (int p : row.parts) total += p;
    if (total > 9) continue;
    auto cm = oracle_min_stats(build(FamilySpec::multipartite(row.parts)));
    c.expect(cm.min_edges == row.cm_min_edges, "multipartite min edges");
    c.expect(cm.min_max_degree + 1 == row.cm_min_maxdeg_plus1, "multipartite min degree");
    auto cs = oracle_min_stats(build(FamilySpec::clique_star(1, row.parts)));
    c.expect(cs.min_edges == row.cs_min_edges, "clique-star min edges");
    c.expect(cs.min_max_degree + 1 == row.cs_min_maxdeg_plus1, "clique-star min degree");
  }
  return c.failures == 0;
}

bool criterion4(Checker& c) {
  Graph g = build(FamilySpec::clique_star(1, {2, 2, 2, 2}));
  auto plan = plan_split_fuse(g);
  c.expect(plan.summary.qubits_total == 16, "16 qubits");
  c.expect(plan.summary.qubits_aux == 8, "8 auxiliary");
  c.expect(plan.summary.cz_total == 15, "15 CZ");
  c.expect(plan.summary.time_steps == 5, "5 time steps");
  int fusions = 0;
  for (const auto& layer : plan.layers) {
    for (const auto& op : layer) fusions += op.kind == PlanOp::Kind::FusionII;
  }
  c.expect(fusions == 4, "4 fusions");
  c.expect(verify_plan(plan, g).ok, "stabilizer verification");
  return c.failures == 0;
}

bool criterion5(Checker& c) {
  int bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
  for (int i = 0; i < 1000; ++i) {
    int n = 2 + static_cast<int>(i % 13);  // n <= 14
    Graph g = random_dh(n, 51000 + i);
    auto plan = plan_split_fuse(g);
    if (!(plan.summary == resource_formulas(decompose(g)))) ++bad;
    if (!verify_plan(plan, g).ok) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " mismatches");
  return c.failures == 0;
}

bool criterion6(Checker& c) {
  int bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
  for (int i = 0; i < 1000; ++i) {
    Graph g = random_dh(2 + i % 11, 61000 + i);
    if (!(reconstruct(decompose(g)) == g)) ++bad;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
  for (int i = 0; i < 200; ++i) {
    Graph g = random_er_connected(3 + i % 10, 0.45, 62000 + i);
    if (!(reconstruct(decompose(g)) == g)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " roundtrip failures");
  return c.failures == 0;
}

bool criterion7(Checker& c) {
  int bad_lc = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad_lc)
#endif
  for (int i = 0; i < 500; ++i) {
    Graph g = random_er_connected(3 + i % 6, 0.5, 71000 + i);  // n <= 8
    for (int v = 0; v < g.num_vertices(); ++v) {
      Tableau t = graph_state_tableau(g);
      for (const auto& gate : lc_unitary_gates(v, g.neighbors(v))) t.apply(gate);
      if (!states_equal(t, graph_state_tableau(local_complement(g, v)))) ++bad_lc;
    }
  }
  c.expect(bad_lc == 0, std::to_string(bad_lc) + " LC-unitary mismatches");

  int bad_meas = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad_meas)
#endif
  for (int i = 0; i < 200; ++i) {
    Graph g = random_er_connected(3 + i % 5, 0.5, 72000 + i);  // n <= 7
    for (int v = 0; v < g.num_vertices(); ++v) {
      for (PauliBasis basis : {PauliBasis::X, PauliBasis::Y, PauliBasis::Z}) {
        for (int sign : {+1, -1}) {
          std::vector<std::optional<int>> partners = {std::nullopt};
          if (basis == PauliBasis::X) {
            partners.clear();
            for (int w : g.neighbors(v)) partners.push_back(w);
          }
          for (auto w : partners) {
            auto rewrite = measure_pauli(g, v, basis, sign, w);
            Tableau t = graph_state_tableau(g);
            char ch = basis == PauliBasis::X ? 'X' : (basis == PauliBasis::Y ? 'Y' : 'Z');
            t.measure_qubit(v, ch, sign);
            for (auto it = rewrite.byproduct.rbegin(); it != rewrite.byproduct.rend(); ++it) {
              GateOp inv = *it;
              switch (it->gate) {
                case Gate::SqrtYp: inv.gate = Gate::SqrtYm; break;
                case Gate::SqrtYm: inv.gate = Gate::SqrtYp; break;
                case Gate::SqrtZp: inv.gate = Gate::SqrtZm; break;
                case Gate::SqrtZm: inv.gate = Gate::SqrtZp; break;
                default: break;
              }
              t.apply(inv);
            }
            if (!states_equal(t, graph_state_tableau(rewrite.residual_graph))) ++bad_meas;
          }
        }
      }
    }
  }
  c.expect(bad_meas == 0, std::to_string(bad_meas) + " measurement-identity mismatches");
  return c.failures == 0;
}

bool criterion8(Checker& c) {
  int bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : bad)
#endif
  for (int i = 0; i < 200; ++i) {
    Graph g1 = random_er_connected(2 + i % 5, 0.6, 81000 + i);
    Graph g2 = random_er_connected(2 + (i + 3) % 5, 0.6, 82000 + i);
    int q1 = i % g1.num_vertices();
    int q2 = (i / 3) % g2.num_vertices();
    Graph expected = fuse_type2(g1, q1, g2, q2).graph;
    for (int s1 : {+1, -1}) {
      for (int s2 : {+1, -1}) {
        try {
          Tableau fused = fuse_type2_tableau(graph_state_tableau(g1), q1,
                                             graph_state_tableau(g2), q2, s1, s2);
          if (!states_equal(fused, graph_state_tableau(expected))) ++bad;
        } catch (const InputError&) {
          // branch unreachable: the forced sign contradicts a determined outcome
        }
      }
    }
  }
  c.expect(bad == 0, std::to_string(bad) + " fusion branches disagree");
  return c.failures == 0;
}

bool criterion9(Checker& c) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = seed % 2 ? random_er_connected(10, 0.6, 91000 + seed) : random_dh(11, 91000 + seed);
    auto r = triangle_greedy(g);
    c.expect(r.edges_after <= r.edges_before, "edge count grew");
    c.expect(apply_sequence(g, r.sequence) == r.improved, "sequence replay");
  }
  for (const Graph& g : {build(FamilySpec::bipartite(4, 4)), build(FamilySpec::star(6))}) {
    auto r = triangle_greedy(g);
    c.expect(r.improved == g && r.sequence.empty(), "triangle-free fixed point");
  }
  return c.failures == 0;
}

bool criterion10(Checker& c) {
  std::vector<int> parts = {8, 8, 8};
  auto sel = select_min_edges(OrbitFamily::Multipartite, parts);
  c.expect(sel.known && sel.value == 30, "formula-optimal CZ = 30");
  int mindeg = min_degree_formula(OrbitFamily::Multipartite, parts);
  c.expect(mindeg + 1 == 16, "formula-optimal depth bound = 16");

  Graph g = build(FamilySpec::multipartite(parts));
  auto plan = plan_split_fuse(g);
  c.expect(plan.summary.cz_total == 29, "split-fuse CZ = 29");
  c.expect(plan.summary.time_steps == 10, "split-fuse steps = 10");
  c.expect(plan.summary == resource_formulas(decompose(g)), "closed-form agreement");
  c.expect(plan.summary.cz_total < sel.value, "split-fuse beats optimal CZ");
  c.expect(plan.summary.time_steps < mindeg + 1, "split-fuse beats optimal depth");
  c.expect(verify_plan(plan, g).ok, "stabilizer verification at n=24");
  return c.failures == 0;
}

bool criterion11(Checker& c) {
  for (int n : {20, 30}) {
    std::vector<int> naive_cz(100), sf_cz(100);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < 100; ++i) {
      Graph g = random_dh(n, 111000 + n * 1000 + i);
      naive_cz[i] = plan_naive(g).summary.cz_total;
      sf_cz[i] = plan_split_fuse(g).summary.cz_total;
    }
    c.expect(median(sf_cz) < median(naive_cz),
             "median split-fuse CZ below naive at n=" + std::to_string(n));
  }
  int prime_samples = 0;
  for (int i = 0; i < 100; ++i) {
    Graph g = random_er_connected(10, 0.5, 112000 + i);
    Qasst tree = decompose(g);
    if (tree.quotients.size() == 1 && tree.quotients[0].cls == QuotientClass::Prime) {
      ++prime_samples;
      c.expect(plan_generalized(g, PrimeStrategy::Naive).summary == plan_naive(g).summary,
               "generalized != naive on a prime sample");
    }
  }
  c.expect(prime_samples > 0, "no prime mid-density samples drawn");
  return c.failures == 0;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(Checker&)> run;
  };
  std::vector<Criterion> criteria = {
      {"1 bipartite orbit formula and minima vs oracle", criterion1},
      {"2 multipartite/clique-star orbit formulas vs oracle", criterion2},
      {"3 tabulated family minima vs oracle (n <= 9)", criterion3},
      {"4 split-fuse worked example CS^1_{2,2,2,2}", criterion4},
      {"5 closed-form resources + verification on 1000 DH graphs", criterion5},
      {"6 decompose/reconstruct roundtrip on 1200 graphs", criterion6},
      {"7 LC-unitary and measurement identities", criterion7},
      {"8 fusion equivalence across outcome branches", criterion8},
      {"9 heuristic contract", criterion9},
      {"10 crossover at multipartite (8,8,8)", criterion10},
      {"11 qualitative scaling reproduction", criterion11},
  };
  int failed = 0;
  for (auto& cr : criteria) {
    Checker c;
    bool ok = false;
    std::string error;
    try {
      ok = cr.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (ok) {
      std::printf("PASS  criterion %s\n", cr.name);
    } else {
      ++failed;
      std::printf("FAIL  criterion %s\n", cr.name);
      if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
      std::fputs(c.detail.str().c_str(), stdout);
    }
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed ? 1 : 0;
}
