#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gsprep {

/// Simple undirected labeled graph over vertex ids 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex (64-bit words), so
/// neighborhood complement -- the hot loop of orbit search -- is a row-wise
/// XOR with the neighborhood mask. No self-loops; rows are kept symmetric.
/// All rewrite operations on graphs are pure and return new values; a Graph
/// is safe to share across threads once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  void add_edge(int u, int v);
  void toggle_edge(int u, int v);

  std::span<const uint64_t> row(int v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
  }
  std::span<uint64_t> row_mut(int v) {
    return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
  }

  int degree(int v) const;
  int edge_count() const;
  int max_degree() const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;

  template <typename F>
  void for_each_neighbor(int v, F&& f) const {
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  bool is_connected() const;

  /// Complements the edges among N(v) in place; the mutation core behind
  /// the pure local_complement.
  void complement_neighborhood(int v);

  /// Upper-triangular adjacency bit string; the canonical dedup key for
  /// labeled graphs (exact, cheap, order-independent).
  std::vector<uint64_t> canonical_key() const;
  void canonical_key_into(std::vector<uint64_t>& out) const;

  /// Edges as sorted (u,v) pairs with u < v.
  std::vector<std::pair<int, int>> edge_list() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  std::string to_string() const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

struct GraphHash {
  size_t operator()(const Graph& g) const;
};

struct GraphStats {
  int edge_count = 0;
  int max_degree = 0;
  std::vector<int> degree_list;
  bool is_connected = false;
};

GraphStats graph_stats(const Graph& g);

/// Vertices lying in at least one triangle, ascending.
std::vector<int> enumerate_triangle_vertices(const Graph& g);

void check_vertex(const Graph& g, int v, const char* what);

}  // namespace gsprep
