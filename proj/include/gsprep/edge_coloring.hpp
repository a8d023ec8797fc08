#pragma once

#include <vector>

#include "gsprep/graph.hpp"

namespace gsprep {

/// Proper edge coloring with at most max_degree + 1 colors.
struct EdgeColoring {
  std::vector<std::vector<std::pair<int, int>>> classes;  // edges per color
  int num_colors = 0;

  int color_of(int u, int v) const;
  bool proper(const Graph& g) const;
};

/// Constructive Vizing coloring (fan rotation and alternating-path flips).
EdgeColoring edge_color(const Graph& g);

}  // namespace gsprep
