#pragma once

#include "chordal.hpp"

#include <array>

namespace vdel {

enum class ObstructionKind { house, gem, domino, long_hole };

inline const char* kind_name(ObstructionKind k) {
  switch (k) {
  case ObstructionKind::house: return "house";
  case ObstructionKind::gem: return "gem";
  case ObstructionKind::domino: return "domino";
  default: return "long-hole";
  }
}

struct DHObstruction {
  ObstructionKind kind;
  std::vector<Vertex> vertices; // cycle order for long holes, sorted otherwise

  VertexSet vertex_set() const {
    VertexSet s = vertices;
    normalize(s);
    return s;
  }
  bool operator<(const DHObstruction& o) const {
    if (kind != o.kind) return kind < o.kind;
    return vertex_set() < o.vertex_set();
  }
  bool operator==(const DHObstruction& o) const { return kind == o.kind && vertex_set() == o.vertex_set(); }
};

namespace detail {

using Pattern = std::vector<std::pair<int, int>>;

inline const Pattern& pattern(ObstructionKind k) {
  static const Pattern house{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}};
  static const Pattern gem{{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
  static const Pattern domino{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}};
  return k == ObstructionKind::house ? house : k == ObstructionKind::gem ? gem : domino;
}

// Is g[vs] isomorphic to the pattern on |vs| vertices? (permutation search)
inline bool induces_pattern(const Graph& g, VertexSet vs, const Pattern& p) {
  int k = int(vs.size());
  std::vector<std::vector<char>> want(k, std::vector<char>(k, 0));
  for (auto [a, b] : p) {
    if (a >= k || b >= k) return false;
    want[a][b] = want[b][a] = 1;
  }
  int edges = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges += g.adjacent(vs[i], vs[j]);
  if (edges != int(p.size())) return false;
  std::sort(vs.begin(), vs.end());
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j)
        if (bool(want[i][j]) != g.adjacent(vs[i], vs[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(vs.begin(), vs.end()));
  return false;
}

} // namespace detail

inline bool is_dh_obstruction(const Graph& g, const DHObstruction& o) {
  if (o.kind == ObstructionKind::long_hole) return is_hole(g, o.vertices, 5);
  auto s = o.vertex_set();
  if (s.size() != o.vertices.size()) return false;
  return detail::induces_pattern(g, s, detail::pattern(o.kind));
}

// All DH-obstructions on at most max_size vertices, each once, sorted.
inline std::vector<DHObstruction> enumerate_small_obstructions(const Graph& g, int max_size) {
  if (max_size < 5) throw InputError("enumerate_small_obstructions: max_size must be >= 5");
  std::vector<DHObstruction> out;
  auto holes = enumerate_short_holes(g, max_size);
  std::vector<Hole> squares;
  for (auto& h : holes) {
    if (h.size() == 4)
      squares.push_back(h);
    else
      out.push_back({ObstructionKind::long_hole, h});
  }
  // houses: a square plus a roof vertex seeing exactly one square edge
  for (auto& q : squares)
    for (int i = 0; i < 4; ++i) {
      Vertex a = q[i], b = q[(i + 1) % 4], c = q[(i + 2) % 4], d = q[(i + 3) % 4];
      Bitset roof = g.row(a) & g.row(b);
      roof.andnot(g.row(c));
      roof.andnot(g.row(d));
      roof.reset(c);
      roof.reset(d);
      roof.for_each([&](int e) {
        VertexSet s{a, b, c, d, e};
        normalize(s);
        out.push_back({ObstructionKind::house, s});
      });
    }
  // gems: induced P4 inside the neighbourhood of a hub
  if (max_size >= 5)
    for (int e = 0; e < g.n(); ++e) {
      auto& nb = g.neighbors(e);
      for (Vertex b : nb)
        for (Vertex c : nb) {
          if (c <= b || !g.adjacent(b, c)) continue;
          for (Vertex a : nb) {
            if (a == c || !g.adjacent(a, b) || g.adjacent(a, c)) continue;
            for (Vertex d : nb) {
              if (d == b || d == a || !g.adjacent(d, c) || g.adjacent(d, b) || g.adjacent(d, a)) continue;
              // P4 a-b-c-d; count each once via the pair orientation b < c
              VertexSet s{a, b, c, d, e};
              normalize(s);
              out.push_back({ObstructionKind::gem, s});
            }
          }
        }
    }
  // dominoes: two squares sharing exactly one edge, otherwise non-adjacent
  if (max_size >= 6)
    for (size_t i = 0; i < squares.size(); ++i)
      for (size_t j = i + 1; j < squares.size(); ++j) {
        VertexSet a = squares[i], b = squares[j];
        normalize(a);
        normalize(b);
        if (set_intersection(a, b).size() != 2) continue;
        VertexSet u = set_union(a, b);
        if (detail::induces_pattern(g, u, detail::pattern(ObstructionKind::domino)))
          out.push_back({ObstructionKind::domino, u});
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ------------------------------------------------------------ recognition

enum class PruneKind { isolated, pendant, true_twin, false_twin };

struct PruneStep {
  Vertex v;
  PruneKind kind;
  Vertex anchor; // the neighbour (pendant) or twin partner; -1 when isolated
};

struct DHResult {
  bool dh = true;
  std::vector<PruneStep> pruning; // full sequence when dh; last survivor is implicit
  Vertex last = -1;
  std::optional<DHObstruction> obstruction;
};

namespace detail {

// Greedy pruning; returns the set of vertices left when stuck (empty or one
// vertex means the graph is distance-hereditary).
inline Bitset prune(const Graph& g, std::vector<PruneStep>& steps) {
  Bitset alive(g.n());
  for (int v = 0; v < g.n(); ++v) alive.set(v);
  int left = g.n();
  while (left > 1) {
    bool done = false;
    int best_deg_v = -1;
    alive.for_each([&](int v) {
      if (best_deg_v >= 0) return;
      int d = (g.row(v) & alive).count();
      if (d <= 1) best_deg_v = v;
    });
    if (best_deg_v >= 0) {
      Vertex v = best_deg_v;
      Bitset nb = g.row(v) & alive;
      if (nb.none())
        steps.push_back({v, PruneKind::isolated, -1});
      else
        steps.push_back({v, PruneKind::pendant, nb.first()});
      alive.reset(v);
      --left;
      continue;
    }
    auto vs = alive.to_vector();
    for (size_t i = 0; i < vs.size() && !done; ++i)
      for (size_t j = i + 1; j < vs.size() && !done; ++j) {
        Vertex u = vs[i], v = vs[j];
        Bitset nu = g.row(u) & alive, nv = g.row(v) & alive;
        nu.reset(v);
        nv.reset(u);
        if (nu == nv) {
          // remove the larger index, keep u as the anchor
          steps.push_back({v, g.adjacent(u, v) ? PruneKind::true_twin : PruneKind::false_twin, u});
          alive.reset(v);
          --left;
          done = true;
        }
      }
    if (!done) break;
  }
  return alive;
}

} // namespace detail

inline DHResult is_distance_hereditary_with_witness(const Graph& g) {
  DHResult r;
  Bitset rest = detail::prune(g, r.pruning);
  if (rest.count() <= 1) {
    r.last = rest.any() ? rest.first() : -1;
    return r;
  }
  r.dh = false;
  r.pruning.clear();
  auto sub = induced_subgraph(g, rest.to_vector());
  auto small = enumerate_small_obstructions(sub.graph, 6);
  DHObstruction o;
  if (!small.empty()) {
    o = small.front();
  } else {
    FracSol unit(sub.graph.n(), Rational(1));
    auto h = min_weight_hole(sub.graph, unit, 5);
    VDEL_CHECK(bool(h), "stuck pruning without an obstruction");
    o = {ObstructionKind::long_hole, h->hole};
  }
  for (auto& v : o.vertices) v = sub.to_parent[v];
  if (o.kind == ObstructionKind::long_hole)
    o.vertices = canonical_hole(o.vertices);
  else
    normalize(o.vertices);
  VDEL_CHECK(is_dh_obstruction(g, o), "DH witness does not check out");
  r.obstruction = o;
  return r;
}

inline bool is_distance_hereditary(const Graph& g) {
  std::vector<PruneStep> steps;
  return detail::prune(g, steps).count() <= 1;
}

// Cograph test (no induced P4) by recursive (co-)component splitting.
inline bool is_cograph(const Graph& g, const VertexSet& s) {
  if (s.size() <= 1) return true;
  auto sub = induced_subgraph(g, s).graph;
  auto comps = connected_components(sub);
  if (comps.size() > 1) {
    for (auto& c : comps) {
      VertexSet m;
      for (Vertex v : c) m.push_back(s[v]);
      if (!is_cograph(g, m)) return false;
    }
    return true;
  }
  std::vector<Edge> co;
  for (int u = 0; u < sub.n(); ++u)
    for (int v = u + 1; v < sub.n(); ++v)
      if (!sub.adjacent(u, v)) co.emplace_back(u, v);
  auto cocomps = connected_components(Graph(sub.n(), co));
  if (cocomps.size() == 1) return false;
  for (auto& c : cocomps) {
    VertexSet m;
    for (Vertex v : c) m.push_back(s[v]);
    if (!is_cograph(g, m)) return false;
  }
  return true;
}

// --------------------------------------------------------------- bicliques

struct Biclique {
  VertexSet a, b; // canonical: a holds the smallest vertex of a u b

  VertexSet vertices() const { return set_union(a, b); }
  bool operator<(const Biclique& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
  bool operator==(const Biclique& o) const { return a == o.a && b == o.b; }
};

inline Biclique canonical_biclique(VertexSet a, VertexSet b) {
  normalize(a);
  normalize(b);
  if (!b.empty() && (a.empty() || b.front() < a.front())) std::swap(a, b);
  return {a, b};
}

// Maximal bicliques (parts need not be independent). They are exactly the
// maximal cliques with both sides nonempty of the graph on V x {A, B} where
// (u,A)~(v,A) for u != v, (u,A)~(v,B) iff uv in E, and (u,A) !~ (u,B).
inline std::vector<Biclique> enumerate_maximal_bicliques(const Graph& g, size_t limit = 2000000) {
  int n = g.n();
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      es.emplace_back(u, v);
      es.emplace_back(n + u, n + v);
      if (g.adjacent(u, v)) {
        es.emplace_back(u, n + v);
        es.emplace_back(v, n + u);
      }
    }
  Graph aux(2 * n, es);
  std::vector<VertexSet> cl;
  Bitset p(2 * n), x(2 * n);
  for (int v = 0; v < 2 * n; ++v) p.set(v);
  VertexSet r;
  detail::bron_kerbosch(aux, r, p, x, cl, 2 * limit + 2);
  std::vector<Biclique> out;
  for (auto& c : cl) {
    VertexSet a, b;
    for (Vertex v : c) (v < n ? a : b).push_back(v < n ? v : v - n);
    if (a.empty() || b.empty()) continue;
    auto bc = canonical_biclique(a, b);
    if (bc.a.front() == std::min(a.front(), b.front()) && a.front() < b.front()) out.push_back(bc);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_maximal_biclique(const Graph& g, const Biclique& bc) {
  if (bc.a.empty() || bc.b.empty() || !set_intersection(bc.a, bc.b).empty()) return false;
  for (Vertex u : bc.a)
    for (Vertex v : bc.b)
      if (!g.adjacent(u, v)) return false;
  auto in = g.mask(bc.vertices());
  for (int v = 0; v < g.n(); ++v) {
    if (in.test(v)) continue;
    bool all_a = true, all_b = true;
    for (Vertex u : bc.a) all_a &= g.adjacent(u, v);
    for (Vertex u : bc.b) all_b &= g.adjacent(u, v);
    if (all_a || all_b) return false;
  }
  return true;
}

// ------------------------------------------------- rank-width-1 decomposition

struct Rw1Decomposition {
  struct Node {
    int parent = -1;
    int left = -1, right = -1;
    Vertex leaf = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> leaf_of; // vertex -> node
  int root = -1;

  // Leaves below node t (the side of the tree edge t-parent(t)).
  VertexSet below(int t) const {
    VertexSet out;
    std::vector<int> st{t};
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      if (nodes[x].leaf >= 0) out.push_back(nodes[x].leaf);
      if (nodes[x].left >= 0) st.push_back(nodes[x].left);
      if (nodes[x].right >= 0) st.push_back(nodes[x].right);
    }
    normalize(out);
    return out;
  }
};

struct NotDistanceHereditary : InputError {
  DHObstruction obstruction;
  explicit NotDistanceHereditary(DHObstruction o)
      : InputError("graph is not distance-hereditary"), obstruction(std::move(o)) {}
};

// Replays the pruning backwards: each re-inserted vertex becomes the
// sibling of its anchor (isolated vertices: of the current root leaf).
inline Rw1Decomposition rankwidth1_decomposition(const Graph& g) {
  auto r = is_distance_hereditary_with_witness(g);
  if (!r.dh) throw NotDistanceHereditary(*r.obstruction);
  Rw1Decomposition d;
  d.leaf_of.assign(g.n(), -1);
  if (g.n() == 0) return d;
  d.nodes.push_back({-1, -1, -1, r.last});
  d.leaf_of[r.last] = 0;
  d.root = 0;
  for (auto it = r.pruning.rbegin(); it != r.pruning.rend(); ++it) {
    Vertex anchor = it->anchor >= 0 ? it->anchor : r.last;
    int old = d.leaf_of[anchor];
    int internal = int(d.nodes.size());
    d.nodes.push_back({d.nodes[old].parent, old, -1, -1});
    int fresh = int(d.nodes.size());
    d.nodes.push_back({internal, -1, -1, it->v});
    d.nodes[internal].right = fresh;
    int par = d.nodes[old].parent;
    if (par < 0)
      d.root = internal;
    else if (d.nodes[par].left == old)
      d.nodes[par].left = internal;
    else
      d.nodes[par].right = internal;
    d.nodes[old].parent = internal;
    d.leaf_of[it->v] = fresh;
  }
  return d;
}

struct Rw1Cut {
  int node = -1;     // tree edge node-parent(node)
  VertexSet side1;   // leaves below node
  VertexSet side2;   // the rest
  VertexSet m1, m2;  // endpoints of cross edges on each side
};

inline Rw1Cut cut_at(const Graph& g, const Rw1Decomposition& d, int t) {
  Rw1Cut c;
  c.node = t;
  c.side1 = d.below(t);
  Bitset in = g.mask(c.side1);
  for (int v = 0; v < g.n(); ++v)
    if (!in.test(v)) c.side2.push_back(v);
  for (Vertex u : c.side1)
    for (Vertex v : g.neighbors(u))
      if (!in.test(v)) {
        c.m1.push_back(u);
        c.m2.push_back(v);
      }
  normalize(c.m1);
  normalize(c.m2);
  return c;
}

// Every tree edge's cross edges form a complete bipartite graph.
inline std::string check_rw1(const Graph& g, const Rw1Decomposition& d) {
  for (int v = 0; v < g.n(); ++v) {
    if (d.leaf_of[v] < 0 || d.nodes[d.leaf_of[v]].leaf != v) return "vertex without leaf";
  }
  for (size_t t = 0; t < d.nodes.size(); ++t) {
    if (int(t) == d.root) continue;
    auto& nd = d.nodes[t];
    if (nd.leaf < 0 && (nd.left < 0 || nd.right < 0)) return "internal node is not binary";
    auto c = cut_at(g, d, int(t));
    for (Vertex u : c.m1)
      for (Vertex v : c.m2)
        if (!g.adjacent(u, v)) return "cut at node " + std::to_string(t) + " has rank > 1";
  }
  return "";
}

// Tree edge minimizing the heavier side (by leaf weight), ties by the
// larger side's vertex count, then node index.
inline Rw1Cut balancing_rw1_cut(const Graph& g, const Rw1Decomposition& d, const std::vector<long>& leaf_weight = {}) {
  if (g.n() < 2) throw InputError("balancing_rw1_cut: need at least two vertices");
  std::vector<long> w = leaf_weight.empty() ? std::vector<long>(g.n(), 1) : leaf_weight;
  std::vector<long> sub(d.nodes.size(), 0), cnt(d.nodes.size(), 0);
  // post-order accumulation
  std::vector<int> order{d.root};
  for (size_t i = 0; i < order.size(); ++i) {
    auto& nd = d.nodes[order[i]];
    if (nd.left >= 0) order.push_back(nd.left);
    if (nd.right >= 0) order.push_back(nd.right);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& nd = d.nodes[*it];
    if (nd.leaf >= 0) {
      sub[*it] = w[nd.leaf];
      cnt[*it] = 1;
    }
    if (nd.left >= 0) sub[*it] += sub[nd.left], cnt[*it] += cnt[nd.left];
    if (nd.right >= 0) sub[*it] += sub[nd.right], cnt[*it] += cnt[nd.right];
  }
  long total = sub[d.root], n = cnt[d.root];
  int best = -1;
  std::pair<long, long> key;
  for (size_t t = 0; t < d.nodes.size(); ++t) {
    if (int(t) == d.root) continue;
    std::pair<long, long> k{std::max(sub[t], total - sub[t]), std::max(cnt[t], n - cnt[t])};
    if (best < 0 || k < key) {
      best = int(t);
      key = k;
    }
  }
  return cut_at(g, d, best);
}

} // namespace vdel
