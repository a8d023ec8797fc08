#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsprep/errors.hpp"
#include "gsprep/families.hpp"
#include "gsprep/local_ops.hpp"
#include "gsprep/orbit.hpp"
#include "gsprep/split_tree.hpp"
#include "test_util.hpp"

using namespace gsprep;
using namespace gsprep::testutil;

namespace {

// tree-edge bipartitions as canonical {smaller side set}
std::set<std::vector<int>> tree_cuts(const Qasst& q) {
  std::set<std::vector<int>> cuts;
  for (size_t e = 0; e < q.tree_edges.size(); ++e) {
    auto [a, b] = q.edge_bipartition(e);
    cuts.insert(std::min(a, b));
  }
  return cuts;
}

bool valid_qasst(const Qasst& q) {
  // leaf roles biject onto 0..n-1
  std::vector<char> seen(q.source_vertex_count, 0);
  int leaves = 0;
  for (const auto& quot : q.quotients) {
    for (const auto& r : quot.roles) {
      if (!r.is_leaf) continue;
      if (r.vertex < 0 || r.vertex >= q.source_vertex_count || seen[r.vertex]) return false;
      seen[r.vertex] = 1;
      ++leaves;
    }
  }
  if (leaves != q.source_vertex_count) return false;
  // every split node in exactly one tree edge; tree edge count = quotients-1
  if (q.tree_edges.size() + 1 != q.quotients.size()) return false;
  std::set<std::pair<int, int>> used;
  for (const auto& [a, b] : q.tree_edges) {
    for (auto end : {a, b}) {
      if (q.quotients[end.quotient].roles[end.node].is_leaf) return false;
      if (!used.emplace(end.quotient, end.node).second) return false;
    }
  }
  for (size_t qi = 0; qi < q.quotients.size(); ++qi) {
    int splits = q.quotients[qi].split_count();
    int used_here = 0;
    for (const auto& [a, b] : q.tree_edges) {
      used_here += (a.quotient == static_cast<int>(qi)) + (b.quotient == static_cast<int>(qi));
    }
    if (splits != used_here) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("brute-force splits: C_5 is prime") {
  CHECK(find_splits_bruteforce(cycle(5)).empty());
}

TEST_CASE("brute-force splits: K_{2,2} part bipartition") {
  Graph g = build(FamilySpec::bipartite(2, 2));
  auto splits = find_splits_bruteforce(g);
  bool found = false;
  for (const auto& s : splits) {
    if (sorted(s.side1) == std::vector<int>{0, 1} || sorted(s.side2) == std::vector<int>{0, 1}) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("brute-force splits: P_4 middle cut") {
  auto splits = find_splits_bruteforce(path(4));
  REQUIRE(splits.size() == 1);
  CHECK(sorted(splits[0].side1) == std::vector<int>{0, 1});
}

TEST_CASE("find_any_split agrees with brute force about primality") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_er_connected(8, 0.4, 500 + seed);
    bool brute_has = !find_splits_bruteforce(g).empty();
    auto found = find_any_split(g);
    CHECK(brute_has == found.has_value());
    if (found) {
      // crossing edges form a complete bipartite subgraph
      std::vector<char> in2(g.num_vertices(), 0);
      for (int v : found->side2) in2[v] = 1;
      for (int u : found->frontier1) {
        for (int v : found->frontier2) CHECK(g.has_edge(u, v));
      }
      int crossing = 0;
      for (auto [u, v] : g.edge_list()) crossing += in2[u] != in2[v];
      CHECK(crossing ==
            static_cast<int>(found->frontier1.size() * found->frontier2.size()));
    }
  }
}

TEST_CASE("decompose K_{n,m}: two star quotients joined at their centers") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 2}, {5, 3}}) {
    Qasst q = decompose(build(FamilySpec::bipartite(n, m)));
    REQUIRE(q.quotients.size() == 2);
    REQUIRE(q.tree_edges.size() == 1);
    CHECK(valid_qasst(q));
    for (const auto& quot : q.quotients) {
      CHECK(quot.cls == QuotientClass::Star);
      CHECK(quot.split_count() == 1);
    }
    // both ends of the tree edge are the star centers
    auto [a, b] = q.tree_edges[0];
    CHECK(q.quotients[a.quotient].star_center == a.node);
    CHECK(q.quotients[b.quotient].star_center == b.node);
  }
}

TEST_CASE("decompose complete multipartite and clique-star: k+1 quotients") {
  for (auto parts : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}}) {
    int k = static_cast<int>(parts.size());
    for (bool cs : {false, true}) {
      Graph g = build(cs ? FamilySpec::clique_star(1, parts) : FamilySpec::multipartite(parts));
      Qasst q = decompose(g);
      CHECK(valid_qasst(q));
      REQUIRE(q.quotients.size() == static_cast<size_t>(k) + 1);
      // one hub quotient of split nodes only, with degree k in the tree
      int hubs = 0;
      for (const auto& quot : q.quotients) {
        if (quot.leaf_count() == 0) {
          ++hubs;
          CHECK(quot.split_count() == k);
          CHECK(quot.cls == (cs ? QuotientClass::Star : QuotientClass::Complete));
        }
      }
      CHECK(hubs == 1);
    }
  }
}

TEST_CASE("decompose C_5: a single prime quotient") {
  Qasst q = decompose(cycle(5));
  REQUIRE(q.quotients.size() == 1);
  CHECK(q.quotients[0].cls == QuotientClass::Prime);
  CHECK(q.quotients[0].graph == cycle(5));
  CHECK(q.tree_edges.empty());
}

TEST_CASE("decompose small graphs") {
  Qasst one = decompose(Graph(1));
  CHECK(one.quotients.size() == 1);
  Qasst p3 = decompose(path(3));
  CHECK(p3.quotients.size() == 1);
  CHECK(p3.quotients[0].cls == QuotientClass::Star);
  CHECK_THROWS_AS(decompose(Graph(2)), InputError);  // disconnected
}

TEST_CASE("reconstruct is the inverse of decompose") {
  // named families
  std::vector<Graph> graphs = {
      build(FamilySpec::bipartite(3, 3)),       build(FamilySpec::multipartite({3, 2, 2})),
      build(FamilySpec::clique_star(2, {2, 3, 2})), build(FamilySpec::repeater(4)),
      build(FamilySpec::multi_leaf_repeater({3, 3, 3})), build(FamilySpec::complete(6)),
      build(FamilySpec::star(5)), path(7), cycle(5), cycle(6)};
  for (const auto& g : graphs) {
    CHECK(reconstruct(decompose(g)) == g);
  }
  // seeded random corpora
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Graph g = random_dh(3 + static_cast<int>(seed % 12), 7000 + seed);
    CHECK(reconstruct(decompose(g)) == g);
  }
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = random_er_connected(4 + static_cast<int>(seed % 7), 0.45, 8000 + seed);
    CHECK(reconstruct(decompose(g)) == g);
  }
}

TEST_CASE("single-quotient tree reconstructs to its own graph") {
  Qasst q = decompose(cycle(6));
  REQUIRE(q.quotients.size() == 1);
  CHECK(reconstruct(q) == cycle(6));
}

TEST_CASE("tree edges correspond to strong splits of the brute-force list") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = seed < 15 ? random_dh(9, 300 + seed) : random_er_connected(9, 0.4, 300 + seed);
    auto all = find_splits_bruteforce(g);
    Qasst q = decompose(g);
    for (size_t e = 0; e < q.tree_edges.size(); ++e) {
      auto [side_a, side_b] = q.edge_bipartition(e);
      // locate this bipartition among the brute-force splits
      const Split* match = nullptr;
      for (const auto& s : all) {
        if (sorted(s.side1) == side_a || sorted(s.side2) == side_a) match = &s;
      }
      REQUIRE(match != nullptr);
      for (const auto& other : all) {
        if (&other == match) continue;
        CHECK_FALSE(splits_cross(*match, other));
      }
    }
  }
}

TEST_CASE("the quotient tree is invariant under local complement") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = seed < 12 ? random_dh(10, 900 + seed) : random_er_connected(8, 0.45, 900 + seed);
    Qasst q = decompose(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      Qasst qc = decompose(local_complement(g, v));
      CHECK(q.quotients.size() == qc.quotients.size());
      CHECK(tree_cuts(q) == tree_cuts(qc));
    }
  }
}

TEST_CASE("quotients of LC-equivalent graphs are LC-equivalent") {
  Graph g = build(FamilySpec::multi_leaf_repeater({2, 3, 2}));
  Qasst q = decompose(g);
  for (int v : {0, 1, 3}) {
    Graph h = local_complement(g, v);
    Qasst qh = decompose(h);
    REQUIRE(q.quotients.size() == qh.quotients.size());
    // match quotients through their leaf sets
    for (const auto& quot : q.quotients) {
      std::vector<int> leaves;
      for (const auto& r : quot.roles) {
        if (r.is_leaf) leaves.push_back(r.vertex);
      }
      const Quotient* partner = nullptr;
      for (const auto& cand : qh.quotients) {
        std::vector<int> cl;
        for (const auto& r : cand.roles) {
          if (r.is_leaf) cl.push_back(r.vertex);
        }
        if (sorted(cl) == sorted(leaves)) partner = &cand;
      }
      REQUIRE(partner != nullptr);
      CHECK(partner->graph.num_vertices() == quot.graph.num_vertices());
      CHECK(enumerate_orbit(quot.graph).contains(partner->graph));
    }
  }
}

TEST_CASE("DH closure under local complement") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_dh(9, 40 + seed);
    for (int v = 0; v < g.num_vertices(); ++v) {
      CHECK(is_distance_hereditary(local_complement(g, v)));
    }
  }
}

TEST_CASE("is_distance_hereditary") {
  CHECK_FALSE(is_distance_hereditary(cycle(5)));
  CHECK(is_distance_hereditary(build(FamilySpec::multi_leaf_repeater({3, 3, 3, 3}))));
  CHECK(is_distance_hereditary(path(6)));
  CHECK_FALSE(is_distance_hereditary(cycle(6)));
}

TEST_CASE("quotient_substitute swaps a quotient in place") {
  Graph g = build(FamilySpec::bipartite(2, 2));
  Qasst q = decompose(g);
  // identity substitution
  Qasst same = quotient_substitute(q, 0, q.quotients[0].graph);
  CHECK(reconstruct(same) == g);

  // replace a star-center quotient by the complete graph on its nodes:
  // the rebuilt graph stays in O(K_{2,2})
  Graph k3 = build(FamilySpec::complete(3));
  Qasst swapped = quotient_substitute(q, 0, k3);
  Graph rebuilt = reconstruct(swapped);
  CHECK(enumerate_orbit(g).contains(rebuilt));

  CHECK_THROWS_AS(quotient_substitute(q, 0, build(FamilySpec::complete(4))), InputError);
}
