#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gsprep/graph.hpp"

namespace gsprep {

/// Named graph family constructors. Canonical labelings:
///  - Complete(n): vertices 0..n-1.
///  - Star(n): center 0, leaves 1..n (n = number of spokes).
///  - CompleteBipartite(n,m): part one 0..n-1, part two n..n+m-1.
///  - CompleteMultipartite(n_1..n_k): parts laid out in block order.
///  - CliqueStar(r, n_1..n_k): the central clique H_r is labeled first,
///    then the remaining cliques in ascending index order.
///  - Repeater(n): clique 0..n-1, leaf of clique vertex i is n+i.
///  - MultiLeafRepeater(n_1..n_k): block order; block i holds the clique
///    vertex followed by its n_i - 1 leaves.
struct FamilySpec {
  enum class Kind {
    Complete,
    Star,
    CompleteBipartite,
    CompleteMultipartite,
    CliqueStar,
    Repeater,
    MultiLeafRepeater,
  };
  Kind kind;
  std::vector<int> parts;  // single entry for Complete/Star/Repeater
  int r = 1;               // CliqueStar central clique index, 1-based

  static FamilySpec complete(int n) { return {Kind::Complete, {n}, 1}; }
  static FamilySpec star(int n) { return {Kind::Star, {n}, 1}; }
  static FamilySpec bipartite(int n, int m) { return {Kind::CompleteBipartite, {n, m}, 1}; }
  static FamilySpec multipartite(std::vector<int> p) {
    return {Kind::CompleteMultipartite, std::move(p), 1};
  }
  static FamilySpec clique_star(int r, std::vector<int> p) {
    return {Kind::CliqueStar, std::move(p), r};
  }
  static FamilySpec repeater(int n) { return {Kind::Repeater, {n}, 1}; }
  static FamilySpec multi_leaf_repeater(std::vector<int> p) {
    return {Kind::MultiLeafRepeater, std::move(p), 1};
  }
};

Graph build(const FamilySpec& spec);

using Rng = std::mt19937_64;  // the documented generator; seeds are the contract

/// Random distance-hereditary graph: grown from a single vertex by n-1
/// uniformly random one-vertex extensions (pendant leaf, true twin, false
/// twin) at a uniformly random existing vertex. Extending the one-vertex
/// graph always yields K_2, keeping the result connected.
Graph random_dh(int n, uint64_t seed);

/// Connected Erdos-Renyi graph: every edge present with probability p,
/// resampled until connected (default limit 10000 attempts).
Graph random_er_connected(int n, double p, uint64_t seed, int max_attempts = 10000);

/// Structural family detectors used by strategy comparison.
std::optional<std::vector<int>> detect_complete_multipartite(const Graph& g);
std::optional<std::vector<int>> detect_clique_star(const Graph& g);

}  // namespace gsprep
