#pragma once

#include "gsprep/graph.hpp"
#include "gsprep/local_ops.hpp"

namespace gsprep {

struct HeuristicResult {
  Graph improved;
  LcSequence sequence;  // accepted steps with their neighborhoods
  int edges_before = 0;
  int edges_after = 0;
};

/// Greedy triangle-based edge reduction: enumerate the vertices lying in a
/// triangle of the input (once, in ascending order), tentatively apply a
/// local complement at each, and keep it only when the edge count strictly
/// drops. A vertex may no longer lie in a triangle of the evolving graph by
/// the time it is visited; the single pass runs over the original list
/// regardless.
HeuristicResult triangle_greedy(const Graph& g);

/// Repeats passes (recomputing the triangle list on the current graph) until
/// a pass accepts nothing.
HeuristicResult triangle_greedy_iterated(const Graph& g);

}  // namespace gsprep
