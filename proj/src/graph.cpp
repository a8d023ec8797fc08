#include "gsprep/graph.hpp"

#include <bit>
#include <sstream>

#include "gsprep/errors.hpp"

namespace gsprep {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 0 || v >= g.num_vertices()) {
    throw InputError(std::string(what) + ": vertex " + std::to_string(v) +
                     " out of range [0," + std::to_string(g.num_vertices()) + ")");
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(g, u, "from_edges");
    check_vertex(g, v, "from_edges");
    if (u == v) throw InputError("from_edges: self-loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v)) {
      throw InputError("from_edges: duplicate edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    }
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

void Graph::toggle_edge(int u, int v) {
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] ^= uint64_t{1} << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] ^= uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const {
  int d = 0;
  for (uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t w : bits_) total += std::popcount(w);
  return total / 2;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degree(v));
  for_each_neighbor(v, [&](int u) { out.push_back(u); });
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<uint64_t> seen(words_, 0), frontier(words_, 0);
  seen[0] = frontier[0] = 1;  // start from vertex 0
  int count = 1;
  while (true) {
    std::vector<uint64_t> next(words_, 0);
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = frontier[w];
      while (bits) {
        int v = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        auto r = row(v);
        for (int x = 0; x < words_; ++x) next[x] |= r[x];
      }
    }
    bool grew = false;
    for (int x = 0; x < words_; ++x) {
      uint64_t fresh = next[x] & ~seen[x];
      if (fresh) {
        grew = true;
        seen[x] |= fresh;
        count += std::popcount(fresh);
      }
      frontier[x] = fresh;
    }
    if (!grew) break;
  }
  return count == n_;
}

void Graph::complement_neighborhood(int v) {
  std::vector<uint64_t> mask(row(v).begin(), row(v).end());
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = mask[w];
    while (bits) {
      int u = w * 64 + __builtin_ctzll(bits);
      bits &= bits - 1;
      auto r = row_mut(u);
      for (int x = 0; x < words_; ++x) r[x] ^= mask[x];
      r[u >> 6] &= ~(uint64_t{1} << (u & 63));  // no self-loop
    }
  }
}

std::vector<uint64_t> Graph::canonical_key() const {
  std::vector<uint64_t> key;
  canonical_key_into(key);
  return key;
}

void Graph::canonical_key_into(std::vector<uint64_t>& key) const {
  key.assign((static_cast<size_t>(n_) * (n_ - 1) / 2 + 63) / 64 + 1, 0);
  key[0] = static_cast<uint64_t>(n_);  // fold in vertex count so K_0 != K_1 etc.
  size_t pos = 64;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v, ++pos) {
      if (has_edge(u, v)) key[pos >> 6] |= uint64_t{1} << (pos & 63);
    }
  }
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::to_string() const {
  std::ostringstream os;
  os << "Graph(n=" << n_ << ", edges={";
  bool first = true;
  for (auto [u, v] : edge_list()) {
    if (!first) os << ",";
    os << u << "-" << v;
    first = false;
  }
  os << "})";
  return os.str();
}

size_t GraphHash::operator()(const Graph& g) const {
  uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 0x100000001b3ull;
  };
  mix(static_cast<uint64_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (uint64_t w : g.row(v)) mix(w);
  }
  return static_cast<size_t>(h);
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.edge_count = g.edge_count();
  s.degree_list = g.degrees();
  for (int d : s.degree_list) s.max_degree = std::max(s.max_degree, d);
  s.is_connected = g.is_connected();
  return s;
}

std::vector<int> enumerate_triangle_vertices(const Graph& g) {
  int n = g.num_vertices();
  std::vector<char> in_tri(n, 0);
  for (int u = 0; u < n; ++u) {
    if (in_tri[u]) continue;
    auto ru = g.row(u);
    g.for_each_neighbor(u, [&](int v) {
      if (in_tri[u]) return;
      auto rv = g.row(v);
      for (int w = 0; w < g.words_per_row(); ++w) {
        if (ru[w] & rv[w]) {
          in_tri[u] = 1;
          return;
        }
      }
    });
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (in_tri[v]) out.push_back(v);
  }
  return out;
}

}  // namespace gsprep
