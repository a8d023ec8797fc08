#include "gsprep/families.hpp"

#include <algorithm>
#include <numeric>

#include "gsprep/errors.hpp"

namespace gsprep {

static void require_parts(const std::vector<int>& parts, size_t min_count, const char* what) {
  if (parts.size() < min_count) throw InputError(std::string(what) + ": too few parts");
  for (int p : parts) {
    if (p < 1) throw InputError(std::string(what) + ": part sizes must be >= 1");
  }
}

Graph build(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::Complete: {
      require_parts(spec.parts, 1, "Complete");
      int n = spec.parts[0];
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
      return g;
    }
    case K::Star: {
      require_parts(spec.parts, 1, "Star");
      int n = spec.parts[0];
      Graph g(n + 1);
      for (int v = 1; v <= n; ++v) g.add_edge(0, v);
      return g;
    }
    case K::CompleteBipartite: {
      require_parts(spec.parts, 2, "CompleteBipartite");
      return build(FamilySpec::multipartite({spec.parts[0], spec.parts[1]}));
    }
    case K::CompleteMultipartite: {
      require_parts(spec.parts, 1, "CompleteMultipartite");
      int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
      Graph g(n);
      std::vector<int> block(n);
      int off = 0, bi = 0;
      for (int p : spec.parts) {
        for (int i = 0; i < p; ++i) block[off + i] = bi;
        off += p;
        ++bi;
      }
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (block[u] != block[v]) g.add_edge(u, v);
      return g;
    }
    case K::CliqueStar: {
      require_parts(spec.parts, 1, "CliqueStar");
      int k = static_cast<int>(spec.parts.size());
      if (spec.r < 1 || spec.r > k) throw InputError("CliqueStar: r out of range");
      int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
      // Central clique first, then the others in index order.
      std::vector<int> order = {spec.r - 1};
      for (int i = 0; i < k; ++i)
        if (i != spec.r - 1) order.push_back(i);
      Graph g(n);
      std::vector<std::pair<int, int>> span;  // [start, size) per ordered clique
      int off = 0;
      for (int idx : order) {
        span.emplace_back(off, spec.parts[idx]);
        off += spec.parts[idx];
      }
      for (auto [start, size] : span)
        for (int u = start; u < start + size; ++u)
          for (int v = u + 1; v < start + size; ++v) g.add_edge(u, v);
      auto [cstart, csize] = span[0];
      for (int u = cstart; u < cstart + csize; ++u)
        for (int v = cstart + csize; v < n; ++v) g.add_edge(u, v);
      return g;
    }
    case K::Repeater: {
      require_parts(spec.parts, 1, "Repeater");
      int n = spec.parts[0];
      Graph g(2 * n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        g.add_edge(u, n + u);
      }
      return g;
    }
    case K::MultiLeafRepeater: {
      require_parts(spec.parts, 1, "MultiLeafRepeater");
      int n = std::accumulate(spec.parts.begin(), spec.parts.end(), 0);
      Graph g(n);
      std::vector<int> core;
      int off = 0;
      for (int p : spec.parts) {
        core.push_back(off);
        for (int i = 1; i < p; ++i) g.add_edge(off, off + i);
        off += p;
      }
      for (size_t i = 0; i < core.size(); ++i)
        for (size_t j = i + 1; j < core.size(); ++j) g.add_edge(core[i], core[j]);
      return g;
    }
  }
  throw InputError("build: unknown family");
}

Graph random_dh(int n, uint64_t seed) {
  if (n < 1) throw InputError("random_dh: n must be >= 1");
  Rng rng(seed);
  Graph g(1);
  for (int step = 1; step < n; ++step) {
    int m = g.num_vertices();
    int target = static_cast<int>(rng() % m);
    int kind = static_cast<int>(rng() % 3);  // 0 pendant, 1 true twin, 2 false twin
    Graph h(m + 1);
    for (auto [a, b] : g.edge_list()) h.add_edge(a, b);
    if (m == 1) {
      h.add_edge(0, 1);  // every extension of K_1 gives K_2
    } else if (kind == 0) {
      h.add_edge(target, m);
    } else {
      for (int u : g.neighbors(target)) h.add_edge(m, u);
      if (kind == 1) h.add_edge(m, target);
    }
    g = std::move(h);
  }
  return g;
}

Graph random_er_connected(int n, double p, uint64_t seed, int max_attempts) {
  if (n < 1) throw InputError("random_er_connected: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw InputError("random_er_connected: need 0 < p < 1");
  Rng rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
  throw LimitError("random_er_connected: no connected sample within " +
                   std::to_string(max_attempts) + " attempts");
}

std::optional<std::vector<int>> detect_complete_multipartite(const Graph& g) {
  int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  // Non-adjacency must be an equivalence relation; classes are the parts.
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    part[v] = id;
    sizes.push_back(1);
    for (int u = v + 1; u < n; ++u) {
      if (part[u] < 0 && !g.has_edge(u, v)) {
        part[u] = id;
        ++sizes[id];
      }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v) == (part[u] == part[v])) return std::nullopt;
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::optional<std::vector<int>> detect_clique_star(const Graph& g) {
  int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  // Central clique = vertices adjacent to everything else; removing it must
  // leave disjoint cliques, each fully non-adjacent to the others.
  std::vector<int> central, rest;
  for (int v = 0; v < n; ++v) {
    (g.degree(v) == n - 1 ? central : rest).push_back(v);
  }
  if (central.empty() || rest.empty()) return std::nullopt;
  std::vector<int> comp(n, -1);
  std::vector<int> sizes;
  for (int v : rest) {
    if (comp[v] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<int> stack = {v};
    comp[v] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (int u : rest) {
        if (comp[u] < 0 && g.has_edge(x, u)) {
          comp[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  if (sizes.size() < 2) return std::nullopt;  // that would just be complete
  for (int u : rest)
    for (int v : rest)
      if (u < v && (comp[u] == comp[v]) != g.has_edge(u, v)) return std::nullopt;
  std::vector<int> parts = {static_cast<int>(central.size())};
  parts.insert(parts.end(), sizes.begin(), sizes.end());
  std::sort(parts.begin() + 1, parts.end(), std::greater<>());
  return parts;  // parts[0] is the central clique (r = 1 layout)
}

}  // namespace gsprep
