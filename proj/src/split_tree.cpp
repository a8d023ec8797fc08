#include "gsprep/split_tree.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "gsprep/errors.hpp"
#include "gsprep/local_ops.hpp"

namespace gsprep {

int Quotient::split_count() const {
  int c = 0;
  for (const auto& r : roles) c += r.is_leaf ? 0 : 1;
  return c;
}

int Quotient::leaf_count() const { return static_cast<int>(roles.size()) - split_count(); }

QuotientClass classify_quotient(const Graph& g, int* star_center_out) {
  int n = g.num_vertices();
  if (star_center_out) *star_center_out = -1;
  bool complete = true;
  for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
  if (complete) return QuotientClass::Complete;
  if (n >= 3) {
    int center = -1;
    bool star = true;
    for (int v = 0; v < n; ++v) {
      int d = g.degree(v);
      if (d == n - 1) {
        if (center >= 0) star = false;
        center = v;
      } else if (d != 1) {
        star = false;
      }
    }
    if (star && center >= 0) {
      if (star_center_out) *star_center_out = center;
      return QuotientClass::Star;
    }
  }
  return QuotientClass::Prime;
}

bool splits_cross(const Split& a, const Split& b) {
  auto intersects = [](const std::vector<int>& x, const std::vector<int>& y) {
    for (int v : x) {
      if (std::find(y.begin(), y.end(), v) != y.end()) return true;
    }
    return false;
  };
  return intersects(a.side1, b.side1) && intersects(a.side1, b.side2) &&
         intersects(a.side2, b.side1) && intersects(a.side2, b.side2);
}

std::vector<Split> find_splits_bruteforce(const Graph& g) {
  int n = g.num_vertices();
  if (n > 16) throw LimitError("find_splits_bruteforce: limited to 16 vertices");
  std::vector<Split> out;
  if (n < 4) return out;
  std::vector<uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    g.for_each_neighbor(v, [&](int u) { adj[v] |= uint32_t{1} << u; });
  }
  // vertex 0 always on side 1, so each bipartition appears once
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); mask += 2) {
    int sz = std::popcount(mask);
    if (sz < 2 || n - sz < 2) continue;
    uint32_t comp = ~mask & ((uint32_t{1} << n) - 1);
    uint32_t frontier1 = 0, frontier2 = 0;
    for (int v = 0; v < n; ++v) {
      if (comp & (uint32_t{1} << v)) {
        if (adj[v] & mask) frontier1 |= uint32_t{1} << v;
      } else if (adj[v] & comp) {
        frontier2 |= uint32_t{1} << v;
      }
    }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (frontier1 & (uint32_t{1} << v)) ok = (adj[v] & mask) == frontier2;
    }
    if (!ok) continue;
    Split s;
    for (int v = 0; v < n; ++v) {
      uint32_t bit = uint32_t{1} << v;
      (comp & bit ? s.side1 : s.side2).push_back(v);
      if (frontier1 & bit) s.frontier1.push_back(v);
      if (frontier2 & bit) s.frontier2.push_back(v);
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Two-sided forcing state for the anchored split search.
struct SideState {
  int n, words;
  std::vector<uint64_t> side1, side2;
  std::deque<std::pair<int, int>> queue;
  bool contradiction = false;

  SideState(int n_, int w) : n(n_), words(w), side1(w, 0), side2(w, 0) {}

  bool in(const std::vector<uint64_t>& s, int v) const { return (s[v >> 6] >> (v & 63)) & 1; }

  void assign(int v, int side) {
    auto& mine = side == 1 ? side1 : side2;
    auto& other = side == 1 ? side2 : side1;
    if (in(other, v)) {
      contradiction = true;
      return;
    }
    if (in(mine, v)) return;
    mine[v >> 6] |= uint64_t{1} << (v & 63);
    queue.emplace_back(v, side);
  }

  int count(const std::vector<uint64_t>& s) const {
    int c = 0;
    for (uint64_t w : s) c += std::popcount(w);
    return c;
  }
};

// Propagates the split constraints for anchors a (side 1) and b (side 2):
// a crossing edge must run from N(b) on side 1 to N(a) on side 2, and every
// such frontier pair must actually be an edge.
void propagate(SideState& st, const Graph& g, int a, int b) {
  auto na = g.row(a);
  auto nb = g.row(b);
  std::vector<uint64_t> forced(st.words);
  while (!st.queue.empty() && !st.contradiction) {
    auto [v, side] = st.queue.front();
    st.queue.pop_front();
    auto nv = g.row(v);
    bool v_in_nb = g.has_edge(v, b);
    bool v_in_na = g.has_edge(v, a);
    if (side == 1) {
      // neighbors that cannot take the crossing orientation
      for (int w = 0; w < st.words; ++w) forced[w] = v_in_nb ? (nv[w] & ~na[w]) : nv[w];
      for (int w = 0; w < st.words && !st.contradiction; ++w) {
        uint64_t bits = forced[w];
        while (bits && !st.contradiction) {
          st.assign(w * 64 + __builtin_ctzll(bits), 1);
          bits &= bits - 1;
        }
      }
      if (v_in_nb && !st.contradiction) {
        // completeness: non-neighbors of v inside N(a) cannot sit on side 2
        for (int w = 0; w < st.words; ++w) forced[w] = na[w] & ~nv[w];
        forced[v >> 6] &= ~(uint64_t{1} << (v & 63));
        for (int w = 0; w < st.words && !st.contradiction; ++w) {
          uint64_t bits = forced[w];
          while (bits && !st.contradiction) {
            st.assign(w * 64 + __builtin_ctzll(bits), 1);
            bits &= bits - 1;
          }
        }
      }
    } else {
      for (int w = 0; w < st.words; ++w) forced[w] = v_in_na ? (nv[w] & ~nb[w]) : nv[w];
      for (int w = 0; w < st.words && !st.contradiction; ++w) {
        uint64_t bits = forced[w];
        while (bits && !st.contradiction) {
          st.assign(w * 64 + __builtin_ctzll(bits), 2);
          bits &= bits - 1;
        }
      }
      if (v_in_na && !st.contradiction) {
        for (int w = 0; w < st.words; ++w) forced[w] = nb[w] & ~nv[w];
        forced[v >> 6] &= ~(uint64_t{1} << (v & 63));
        for (int w = 0; w < st.words && !st.contradiction; ++w) {
          uint64_t bits = forced[w];
          while (bits && !st.contradiction) {
            st.assign(w * 64 + __builtin_ctzll(bits), 2);
            bits &= bits - 1;
          }
        }
      }
    }
  }
}

std::optional<Split> split_from_state(const SideState& st, const Graph& g) {
  int n = g.num_vertices();
  int s2 = st.count(st.side2);
  if (s2 < 2 || n - s2 < 2) return std::nullopt;
  Split s;
  for (int v = 0; v < n; ++v) {
    (st.in(st.side2, v) ? s.side2 : s.side1).push_back(v);
  }
  for (int v : s.side1) {
    bool frontier = false;
    g.for_each_neighbor(v, [&](int u) { frontier |= st.in(st.side2, u); });
    if (frontier) s.frontier1.push_back(v);
  }
  for (int v : s.side2) {
    bool frontier = false;
    g.for_each_neighbor(v, [&](int u) { frontier |= !st.in(st.side2, u); });
    if (frontier) s.frontier2.push_back(v);
  }
  return s;
}

}  // namespace

std::optional<Split> find_any_split(const Graph& g) {
  int n = g.num_vertices();
  if (n < 4) return std::nullopt;
  int words = g.words_per_row();
  for (auto [e1, e2] : g.edge_list()) {
    for (int orient = 0; orient < 2; ++orient) {
      int a = orient ? e2 : e1;
      int b = orient ? e1 : e2;
      SideState base(n, words);
      base.assign(a, 1);
      base.assign(b, 2);
      propagate(base, g, a, b);
      if (base.contradiction) continue;
      if (auto s = split_from_state(base, g)) return s;
      if (base.count(base.side2) == 1) {
        // grow side 2 by one free vertex at a time
        for (int w = 0; w < n; ++w) {
          if (base.in(base.side1, w) || base.in(base.side2, w)) continue;
          SideState st = base;
          st.assign(w, 2);
          propagate(st, g, a, b);
          if (st.contradiction) continue;
          if (auto s = split_from_state(st, g)) return s;
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct RawTag {
  bool leaf;
  int id;  // original vertex id, or link id for markers
};

struct RawQuotient {
  Graph g;
  std::vector<RawTag> tags;
};

struct RawDecomposition {
  std::vector<RawQuotient> quotients;
  int next_link = 0;
};

void decompose_rec(RawDecomposition& out, Graph g, std::vector<RawTag> tags) {
  int n = g.num_vertices();
  if (n > 3 && classify_quotient(g) == QuotientClass::Prime) {
    if (auto split = find_any_split(g)) {
      int link = out.next_link++;
      auto cut = [&](const std::vector<int>& side, const std::vector<int>& frontier) {
        std::vector<int> map(n, -1);
        for (size_t i = 0; i < side.size(); ++i) map[side[i]] = static_cast<int>(i);
        Graph h(static_cast<int>(side.size()) + 1);
        std::vector<RawTag> htags;
        for (int v : side) htags.push_back(tags[v]);
        htags.push_back({false, link});
        for (auto [u, v] : g.edge_list()) {
          if (map[u] >= 0 && map[v] >= 0) h.add_edge(map[u], map[v]);
        }
        int marker = static_cast<int>(side.size());
        for (int v : frontier) h.add_edge(map[v], marker);
        decompose_rec(out, std::move(h), std::move(htags));
      };
      cut(split->side1, split->frontier1);
      cut(split->side2, split->frontier2);
      return;
    }
  }
  out.quotients.push_back({std::move(g), std::move(tags)});
}

// Rebuilds one quotient out of two adjacent ones by undoing the split
// between marker nodes mi and mj.
RawQuotient merge_pair(const RawQuotient& qi, int mi, const RawQuotient& qj, int mj) {
  int ni = qi.g.num_vertices(), nj = qj.g.num_vertices();
  std::vector<int> mapi(ni, -1), mapj(nj, -1);
  RawQuotient out;
  int next = 0;
  for (int v = 0; v < ni; ++v) {
    if (v == mi) continue;
    mapi[v] = next++;
    out.tags.push_back(qi.tags[v]);
  }
  for (int v = 0; v < nj; ++v) {
    if (v == mj) continue;
    mapj[v] = next++;
    out.tags.push_back(qj.tags[v]);
  }
  out.g = Graph(next);
  for (auto [u, v] : qi.g.edge_list()) {
    if (u != mi && v != mi) out.g.add_edge(mapi[u], mapi[v]);
  }
  for (auto [u, v] : qj.g.edge_list()) {
    if (u != mj && v != mj) out.g.add_edge(mapj[u], mapj[v]);
  }
  for (int u : qi.g.neighbors(mi)) {
    for (int v : qj.g.neighbors(mj)) out.g.add_edge(mapi[u], mapj[v]);
  }
  return out;
}

}  // namespace

Qasst decompose(const Graph& g) {
  if (g.num_vertices() < 1) throw InputError("decompose: graph must have at least one vertex");
  if (!g.is_connected()) throw InputError("decompose: graph must be connected");

  RawDecomposition raw;
  {
    std::vector<RawTag> tags;
    for (int v = 0; v < g.num_vertices(); ++v) tags.push_back({true, v});
    decompose_rec(raw, g, std::move(tags));
  }

  // Canonicalize: recombine adjacent complete quotients, and adjacent stars
  // joined center-to-spoke. What remains is the unique decomposition into
  // prime, star and complete quotients.
  auto find_marker = [](const RawQuotient& q, int link) {
    for (size_t i = 0; i < q.tags.size(); ++i) {
      if (!q.tags[i].leaf && q.tags[i].id == link) return static_cast<int>(i);
    }
    return -1;
  };
  bool merged = true;
  while (merged) {
    merged = false;
    for (int link = 0; link < raw.next_link && !merged; ++link) {
      int qa = -1, qb = -1, ma = -1, mb = -1;
      for (size_t qi = 0; qi < raw.quotients.size(); ++qi) {
        int m = find_marker(raw.quotients[qi], link);
        if (m < 0) continue;
        if (qa < 0) {
          qa = static_cast<int>(qi);
          ma = m;
        } else {
          qb = static_cast<int>(qi);
          mb = m;
        }
      }
      if (qb < 0) continue;
      int ca = -1, cb = -1;
      QuotientClass cla = classify_quotient(raw.quotients[qa].g, &ca);
      QuotientClass clb = classify_quotient(raw.quotients[qb].g, &cb);
      bool join = false;
      if (cla == QuotientClass::Complete && clb == QuotientClass::Complete) {
        join = true;
      } else if (cla == QuotientClass::Star && clb == QuotientClass::Star) {
        join = (ca == ma) != (cb == mb);  // center fused onto a spoke
      }
      if (!join) continue;
      RawQuotient m = merge_pair(raw.quotients[qa], ma, raw.quotients[qb], mb);
      raw.quotients[qa] = std::move(m);
      raw.quotients.erase(raw.quotients.begin() + qb);
      merged = true;
    }
  }

  // Node order inside each quotient: leaves ascending by original id, then
  // split nodes in link creation order.
  for (auto& q : raw.quotients) {
    int n = q.g.num_vertices();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      const RawTag& tx = q.tags[x];
      const RawTag& ty = q.tags[y];
      if (tx.leaf != ty.leaf) return tx.leaf;
      return tx.id < ty.id;
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    Graph h(n);
    for (auto [u, v] : q.g.edge_list()) h.add_edge(pos[u], pos[v]);
    std::vector<RawTag> tags(n);
    for (int i = 0; i < n; ++i) tags[i] = q.tags[order[i]];
    q.g = std::move(h);
    q.tags = std::move(tags);
  }

  // Quotient ids by breadth-first traversal from the quotient holding
  // vertex 0, following split nodes in node order.
  int nq = static_cast<int>(raw.quotients.size());
  std::map<int, std::vector<std::pair<int, int>>> link_ends;  // link -> (quotient, node)
  for (int qi = 0; qi < nq; ++qi) {
    const auto& q = raw.quotients[qi];
    for (size_t ni = 0; ni < q.tags.size(); ++ni) {
      if (!q.tags[ni].leaf) link_ends[q.tags[ni].id].emplace_back(qi, static_cast<int>(ni));
    }
  }
  int start = 0;
  for (int qi = 0; qi < nq; ++qi) {
    for (const auto& t : raw.quotients[qi].tags) {
      if (t.leaf && t.id == 0) start = qi;
    }
  }
  std::vector<int> bfs_id(nq, -1);
  std::deque<int> queue = {start};
  bfs_id[start] = 0;
  int next_id = 1;
  while (!queue.empty()) {
    int qi = queue.front();
    queue.pop_front();
    const auto& q = raw.quotients[qi];
    for (const auto& t : q.tags) {
      if (t.leaf) continue;
      for (auto [oq, on] : link_ends[t.id]) {
        if (bfs_id[oq] < 0) {
          bfs_id[oq] = next_id++;
          queue.push_back(oq);
        }
      }
    }
  }

  Qasst out;
  out.source_vertex_count = g.num_vertices();
  out.quotients.resize(nq);
  for (int qi = 0; qi < nq; ++qi) {
    Quotient& dst = out.quotients[bfs_id[qi]];
    dst.id = bfs_id[qi];
    dst.graph = raw.quotients[qi].g;
    for (const auto& t : raw.quotients[qi].tags) {
      dst.roles.push_back({t.leaf, t.leaf ? t.id : -1});
    }
    dst.cls = classify_quotient(dst.graph, &dst.star_center);
  }
  for (auto& [link, ends] : link_ends) {
    TreeEnd a{bfs_id[ends[0].first], ends[0].second};
    TreeEnd b{bfs_id[ends[1].first], ends[1].second};
    if (b < a) std::swap(a, b);
    out.tree_edges.emplace_back(a, b);
  }
  std::sort(out.tree_edges.begin(), out.tree_edges.end());
  return out;
}

std::pair<std::vector<int>, std::vector<int>> Qasst::edge_bipartition(size_t edge_index) const {
  int nq = static_cast<int>(quotients.size());
  std::vector<std::vector<int>> adj(nq);
  for (size_t e = 0; e < tree_edges.size(); ++e) {
    if (e == edge_index) continue;
    adj[tree_edges[e].first.quotient].push_back(tree_edges[e].second.quotient);
    adj[tree_edges[e].second.quotient].push_back(tree_edges[e].first.quotient);
  }
  std::vector<char> mark(nq, 0);
  std::deque<int> queue = {tree_edges[edge_index].first.quotient};
  mark[queue.front()] = 1;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int o : adj[q]) {
      if (!mark[o]) {
        mark[o] = 1;
        queue.push_back(o);
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int qi = 0; qi < nq; ++qi) {
    for (const auto& r : quotients[qi].roles) {
      if (r.is_leaf) (mark[qi] ? out.first : out.second).push_back(r.vertex);
    }
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

Graph reconstruct(const Qasst& q) {
  if (q.quotients.empty()) throw InputError("reconstruct: empty tree");
  // Sanity on the tree shape before contracting.
  if (q.tree_edges.size() + 1 != q.quotients.size()) {
    throw InputError("reconstruct: tree edge count must be quotient count - 1");
  }
  int total = 0;
  std::vector<int> base(q.quotients.size());
  for (size_t i = 0; i < q.quotients.size(); ++i) {
    base[i] = total;
    if (q.quotients[i].roles.size() != static_cast<size_t>(q.quotients[i].graph.num_vertices())) {
      throw InputError("reconstruct: role count mismatch");
    }
    total += q.quotients[i].graph.num_vertices();
  }
  Graph big(total);
  for (size_t i = 0; i < q.quotients.size(); ++i) {
    for (auto [u, v] : q.quotients[i].graph.edge_list()) big.add_edge(base[i] + u, base[i] + v);
  }
  std::vector<int> where(total);
  for (int i = 0; i < total; ++i) where[i] = i;
  for (const auto& [ea, eb] : q.tree_edges) {
    int ga = where[base[ea.quotient] + ea.node];
    int gb = where[base[eb.quotient] + eb.node];
    if (ga < 0 || gb < 0) throw InputError("reconstruct: split node reused by two tree edges");
    auto fused = fuse_type2_within(big, ga, gb);
    big = std::move(fused.graph);
    for (int i = 0; i < total; ++i) {
      if (where[i] >= 0) where[i] = fused.old_to_new[where[i]];
    }
  }
  Graph out(q.source_vertex_count);
  std::vector<int> vertex_of(big.num_vertices(), -1);
  for (size_t i = 0; i < q.quotients.size(); ++i) {
    for (size_t ni = 0; ni < q.quotients[i].roles.size(); ++ni) {
      const NodeRole& r = q.quotients[i].roles[ni];
      int gidx = where[base[i] + static_cast<int>(ni)];
      if (r.is_leaf) {
        if (gidx < 0) throw InputError("reconstruct: leaf node consumed by a fusion");
        vertex_of[gidx] = r.vertex;
      } else if (gidx >= 0) {
        throw InputError("reconstruct: split node not consumed by any tree edge");
      }
    }
  }
  for (auto [u, v] : big.edge_list()) {
    if (vertex_of[u] < 0 || vertex_of[v] < 0) throw std::logic_error("reconstruct: stray node");
    out.add_edge(vertex_of[u], vertex_of[v]);
  }
  return out;
}

bool is_distance_hereditary(const Graph& g) {
  Qasst q = decompose(g);
  for (const auto& quot : q.quotients) {
    if (quot.cls == QuotientClass::Prime) return false;
  }
  return true;
}

Qasst quotient_substitute(const Qasst& q, int quotient_id, const Graph& replacement) {
  if (quotient_id < 0 || quotient_id >= static_cast<int>(q.quotients.size())) {
    throw InputError("quotient_substitute: no such quotient");
  }
  if (replacement.num_vertices() != q.quotients[quotient_id].graph.num_vertices()) {
    throw InputError("quotient_substitute: node count mismatch");
  }
  Qasst out = q;
  Quotient& dst = out.quotients[quotient_id];
  dst.graph = replacement;
  dst.cls = classify_quotient(dst.graph, &dst.star_center);
  return out;
}

}  // namespace gsprep
