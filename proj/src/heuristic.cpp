#include "gsprep/heuristic.hpp"

namespace gsprep {

static void greedy_pass(Graph& h, LcSequence& seq) {
  std::vector<int> tri = enumerate_triangle_vertices(h);
  int edges = h.edge_count();
  for (int v : tri) {
    Graph candidate = local_complement(h, v);
    int e = candidate.edge_count();
    if (e < edges) {
      seq.push(LcStep::lc(v), h.neighbors(v));
      h = std::move(candidate);
      edges = e;
    }
  }
}

HeuristicResult triangle_greedy(const Graph& g) {
  HeuristicResult r;
  r.edges_before = g.edge_count();
  r.improved = g;
  greedy_pass(r.improved, r.sequence);
  r.edges_after = r.improved.edge_count();
  return r;
}

HeuristicResult triangle_greedy_iterated(const Graph& g) {
  HeuristicResult r;
  r.edges_before = g.edge_count();
  r.improved = g;
  while (true) {
    size_t before = r.sequence.size();
    greedy_pass(r.improved, r.sequence);
    if (r.sequence.size() == before) break;
  }
  r.edges_after = r.improved.edge_count();
  return r;
}

}  // namespace gsprep
