#include "gsprep/edge_coloring.hpp"

#include <algorithm>
#include <limits>

namespace gsprep {

namespace {

constexpr int kUncolored = std::numeric_limits<int>::max();

// Work state: color per edge in a dense matrix.
struct Coloring {
  int n;
  std::vector<int> color;  // n*n, symmetric

  explicit Coloring(int n_) : n(n_), color(static_cast<size_t>(n_) * n_, kUncolored) {}

  int get(int u, int v) const { return color[static_cast<size_t>(u) * n + v]; }
  void put(int u, int v, int c) {
    color[static_cast<size_t>(u) * n + v] = c;
    color[static_cast<size_t>(v) * n + u] = c;
  }
};

bool is_free(const Graph& g, const Coloring& col, int u, int c) {
  if (c == kUncolored) return false;
  bool free = true;
  g.for_each_neighbor(u, [&](int v) { free &= col.get(u, v) != c; });
  return free;
}

std::vector<int> maximal_fan(const Graph& g, const Coloring& col, int x, int y) {
  std::vector<int> fan = {y};
  bool extended = true;
  while (extended) {
    extended = false;
    g.for_each_neighbor(x, [&](int v) {
      if (extended) return;
      if (is_free(g, col, fan.back(), col.get(x, v)) &&
          std::find(fan.begin(), fan.end(), v) == fan.end()) {
        fan.push_back(v);
        extended = true;
      }
    });
  }
  return fan;
}

int find_free_color(const Graph& g, const Coloring& col, int u) {
  int c = 0;
  while (!is_free(g, col, u, c)) ++c;
  return c;
}

void invert_cd_path(const Graph& g, Coloring& col, int x, int c, int d) {
  // Walk the maximal path from x alternating d, c and swap the two colors.
  int at = x, want = d;
  int prev = -1;
  while (true) {
    int next = -1;
    g.for_each_neighbor(at, [&](int v) {
      if (next < 0 && v != prev && col.get(at, v) == want) next = v;
    });
    if (next < 0) break;
    col.put(at, next, want == d ? c : d);
    prev = at;
    at = next;
    want = want == d ? c : d;
  }
}

int color_edge(const Graph& g, Coloring& col, int x, int y, int delta) {
  // a color free at both endpoints colors the edge without fan work and
  // tends to stay below the Vizing budget on easy graphs
  for (int c = 0; c <= delta; ++c) {
    if (is_free(g, col, x, c) && is_free(g, col, y, c)) {
      col.put(x, y, c);
      return c;
    }
  }
  std::vector<int> fan = maximal_fan(g, col, x, y);
  int c = find_free_color(g, col, x);
  int d = find_free_color(g, col, fan.back());
  invert_cd_path(g, col, x, c, d);
  auto w = std::find_if(fan.begin(), fan.end(),
                        [&](int v) { return is_free(g, col, v, d); });
  // rotate: every fan edge takes its successor's color
  for (auto it = fan.begin(); it != w; ++it) {
    col.put(x, *it, col.get(x, *(it + 1)));
  }
  col.put(x, *w, d);
  return std::max(c, d);
}

}  // namespace

int EdgeColoring::color_of(int u, int v) const {
  for (int c = 0; c < num_colors; ++c) {
    for (auto [a, b] : classes[c]) {
      if ((a == u && b == v) || (a == v && b == u)) return c;
    }
  }
  return -1;
}

bool EdgeColoring::proper(const Graph& g) const {
  int counted = 0;
  for (const auto& cls : classes) {
    std::vector<char> used(g.num_vertices(), 0);
    for (auto [u, v] : cls) {
      if (!g.has_edge(u, v) || used[u] || used[v]) return false;
      used[u] = used[v] = 1;
      ++counted;
    }
  }
  return counted == g.edge_count();
}

EdgeColoring edge_color(const Graph& g) {
  Coloring col(g.num_vertices());
  int colors = 0;
  int delta = g.max_degree();
  for (auto [u, v] : g.edge_list()) {
    colors = std::max(colors, color_edge(g, col, u, v, delta) + 1);
  }
  EdgeColoring out;
  out.num_colors = colors;
  out.classes.resize(colors);
  for (auto [u, v] : g.edge_list()) {
    out.classes[col.get(u, v)].emplace_back(u, v);
  }
  return out;
}

}  // namespace gsprep
