#pragma once

#include "paths.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace vdel {

// Cyclically ordered vertex list of a chordless cycle on >= 4 vertices.
using Hole = std::vector<Vertex>;

// Rotation/reflection canonical form: smallest vertex first, then the
// smaller of its two cycle neighbours.
inline Hole canonical_hole(Hole h) {
  if (h.size() < 3) return h;
  auto it = std::min_element(h.begin(), h.end());
  std::rotate(h.begin(), it, h.end());
  if (h.back() < h[1]) std::reverse(h.begin() + 1, h.end());
  return h;
}

inline bool is_hole(const Graph& g, const Hole& h, size_t min_len = 4) {
  size_t k = h.size();
  if (k < min_len || k < 4) return false;
  std::set<Vertex> distinct(h.begin(), h.end());
  if (distinct.size() != k) return false;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(h[i], h[j]) != consecutive) return false;
    }
  return true;
}

// ---------------------------------------------------------------- chordality

// Lexicographic BFS visit order (ties: smallest index).
inline std::vector<Vertex> lex_bfs(const Graph& g) {
  int n = g.n();
  std::vector<std::vector<int>> label(n);
  std::vector<char> done(n, 0);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || label[best] < label[v])) best = v;
    done[best] = 1;
    order.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!done[u]) label[u].push_back(n - step);
  }
  return order;
}

struct ChordalResult {
  bool chordal = true;
  std::vector<Vertex> peo; // elimination order when chordal
  Hole hole;               // witness otherwise
};

// Shortest hole (fewest vertices) containing v with v's hole neighbours u, w
// (u, w non-adjacent neighbours of v). Empty when none.
inline Hole shortest_hole_at(const Graph& g, Vertex v, Vertex u, Vertex w) {
  Bitset allowed(g.n());
  for (int x = 0; x < g.n(); ++x)
    if (x != v && !g.adjacent(v, x)) allowed.set(x);
  allowed.set(u);
  allowed.set(w);
  std::vector<int> par;
  Bitset from_u = allowed;
  from_u.reset(w);
  auto d = bfs(g, {u}, &from_u, &par);
  int best = -1;
  for (Vertex p : g.neighbors(w))
    if (p != v && d[p] >= 0 && (best < 0 || d[p] < d[best])) best = p;
  if (best < 0) return {};
  std::vector<Vertex> path;
  for (int x = best; x != -1; x = par[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  path.push_back(w);
  path = make_induced(g, path);
  Hole h{v};
  h.insert(h.end(), path.begin(), path.end());
  return h;
}

// Shortest hole of g overall, empty if chordal. Polynomial: every hole is
// some v plus a shortest path between two non-adjacent neighbours of v
// avoiding the rest of N[v].
inline Hole shortest_hole(const Graph& g) {
  Hole best;
  for (int v = 0; v < g.n(); ++v) {
    auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        Hole h = shortest_hole_at(g, v, nb[i], nb[j]);
        if (!h.empty() && (best.empty() || h.size() < best.size())) best = h;
        if (best.size() == 4) return canonical_hole(best);
      }
  }
  return best.empty() ? best : canonical_hole(best);
}

inline ChordalResult is_chordal_with_witness(const Graph& g) {
  ChordalResult r;
  auto order = lex_bfs(g);
  std::vector<Vertex> peo(order.rbegin(), order.rend());
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[peo[i]] = i;
  for (Vertex v : peo) {
    int p = -1;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && (p < 0 || pos[u] < pos[p])) p = u;
    if (p < 0) continue;
    for (Vertex u : g.neighbors(v)) {
      if (pos[u] <= pos[v] || u == p || g.adjacent(u, p)) continue;
      r.chordal = false;
      Hole h = shortest_hole_at(g, v, std::min(u, p), std::max(u, p));
      r.hole = h.empty() ? shortest_hole(g) : canonical_hole(h);
      VDEL_CHECK(is_hole(g, r.hole), "chordality witness is not a hole");
      return r;
    }
  }
  r.peo = std::move(peo);
  return r;
}

inline bool is_chordal(const Graph& g) { return is_chordal_with_witness(g).chordal; }

inline bool is_chordal_without(const Graph& g, const VertexSet& removed) {
  return is_chordal(remove_vertices(g, removed).graph);
}

// ------------------------------------------------------------ clique forest

struct CliqueForest {
  std::vector<VertexSet> bags;
  std::vector<int> parent; // -1 at tree roots
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> a(bags.size());
    for (auto [i, j] : edges) {
      a[i].push_back(j);
      a[j].push_back(i);
    }
    for (auto& l : a) std::sort(l.begin(), l.end());
    return a;
  }
};

struct NotChordal : InputError {
  Hole hole;
  explicit NotChordal(Hole h) : InputError("graph is not chordal"), hole(std::move(h)) {}
};

inline std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const std::vector<Vertex>& peo) {
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[peo[i]] = i;
  std::vector<VertexSet> cand;
  for (Vertex v : peo) {
    VertexSet c{v};
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v]) c.push_back(u);
    normalize(c);
    cand.push_back(std::move(c));
  }
  std::sort(cand.begin(), cand.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  std::vector<VertexSet> keep;
  for (auto& c : cand) {
    bool sub = false;
    for (auto& k : keep)
      if (std::includes(k.begin(), k.end(), c.begin(), c.end())) {
        sub = true;
        break;
      }
    if (!sub) keep.push_back(c);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

inline CliqueForest build_clique_forest(const Graph& g) {
  auto cr = is_chordal_with_witness(g);
  if (!cr.chordal) throw NotChordal(cr.hole);
  CliqueForest f;
  f.bags = maximal_cliques_chordal(g, cr.peo);
  int b = int(f.bags.size());
  struct Cand {
    int w, i, j;
  };
  std::vector<Cand> cs;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) {
      int w = int(set_intersection(f.bags[i], f.bags[j]).size());
      if (w > 0) cs.push_back({w, i, j});
    }
  std::stable_sort(cs.begin(), cs.end(), [](const Cand& a, const Cand& c) { return a.w > c.w; });
  std::vector<int> uf(b);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto& c : cs) {
    int a = find(c.i), d = find(c.j);
    if (a == d) continue;
    uf[a] = d;
    f.edges.emplace_back(c.i, c.j);
  }
  std::sort(f.edges.begin(), f.edges.end());
  f.parent.assign(b, -2);
  auto adj = f.adjacency();
  for (int r = 0; r < b; ++r) {
    if (f.parent[r] != -2) continue;
    f.parent[r] = -1;
    std::vector<int> q{r};
    for (size_t k = 0; k < q.size(); ++k)
      for (int y : adj[q[k]])
        if (f.parent[y] == -2) {
          f.parent[y] = q[k];
          q.push_back(y);
        }
  }
  return f;
}

inline bool is_maximal_clique(const Graph& g, const VertexSet& c) {
  if (c.empty() || !g.is_clique(c)) return false;
  Bitset common(g.n());
  for (int v = 0; v < g.n(); ++v) common.set(v);
  for (Vertex v : c) common &= g.row(v);
  return common.none();
}

// The three decomposition conditions plus maximality of every bag.
inline std::string check_clique_forest(const Graph& g, const CliqueForest& f) {
  std::vector<std::vector<int>> holding(g.n());
  for (size_t i = 0; i < f.bags.size(); ++i) {
    if (!is_maximal_clique(g, f.bags[i])) return "bag " + std::to_string(i) + " is not a maximal clique";
    for (Vertex v : f.bags[i]) holding[v].push_back(int(i));
  }
  for (int v = 0; v < g.n(); ++v)
    if (holding[v].empty()) return "vertex " + std::to_string(v) + " uncovered";
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (int i : holding[u])
      if (std::binary_search(f.bags[i].begin(), f.bags[i].end(), v)) ok = true;
    if (!ok) return "edge not inside a bag";
  }
  // forest: no cycles
  std::vector<int> uf(f.bags.size());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto [i, j] : f.edges) {
    if (find(i) == find(j)) return "forest has a cycle";
    uf[find(i)] = find(j);
  }
  auto adj = f.adjacency();
  for (int v = 0; v < g.n(); ++v) {
    std::set<int> mine(holding[v].begin(), holding[v].end());
    std::set<int> seen{holding[v][0]};
    std::vector<int> q{holding[v][0]};
    for (size_t k = 0; k < q.size(); ++k)
      for (int y : adj[q[k]])
        if (mine.count(y) && !seen.count(y)) {
          seen.insert(y);
          q.push_back(y);
        }
    if (seen.size() != mine.size()) return "bags of vertex " + std::to_string(v) + " not connected";
  }
  return "";
}

// ------------------------------------------------------ maximal cliques

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void bron_kerbosch(const Graph& g, VertexSet& r, Bitset p, Bitset x, std::vector<VertexSet>& out,
                          size_t limit) {
  if (p.none() && x.none()) {
    VertexSet c = r;
    normalize(c);
    out.push_back(std::move(c));
    if (out.size() > limit) throw BudgetExceeded("maximal clique budget exceeded");
    return;
  }
  int pivot = -1, best = -1;
  Bitset px = p | x;
  px.for_each([&](int u) {
    int c = (p & g.row(u)).count();
    if (c > best) {
      best = c;
      pivot = u;
    }
  });
  Bitset cand = p;
  cand.andnot(g.row(pivot));
  cand.for_each([&](int v) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g.row(v), x & g.row(v), out, limit);
    r.pop_back();
    p.reset(v);
    x.set(v);
  });
}
} // namespace detail

inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(n);
  std::vector<char> done(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> order;
  for (int k = 0; k < n; ++k) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || deg[v] < deg[best])) best = v;
    done[best] = 1;
    order.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!done[u]) --deg[u];
  }
  return order;
}

inline std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g, size_t limit = 5000000) {
  std::vector<VertexSet> out;
  auto order = degeneracy_order(g);
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    Bitset p(g.n()), x(g.n());
    for (Vertex u : g.neighbors(v)) (pos[u] > pos[v] ? p : x).set(u);
    VertexSet r{v};
    detail::bron_kerbosch(g, r, p, x, out, limit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ short holes

// All holes with 4 <= length <= max_len, each once, in canonical form.
inline std::vector<Hole> enumerate_short_holes(const Graph& g, int max_len, size_t limit = 2000000) {
  if (max_len < 4) throw InputError("enumerate_short_holes: max_len must be >= 4");
  std::vector<Hole> out;
  std::vector<Vertex> path;
  Bitset on(g.n());
  // blocked[v] counts path vertices among p1..p_{k-1} adjacent to v
  std::vector<int> blocked(g.n(), 0);
  std::function<void(Vertex)> extend = [&](Vertex s) {
    Vertex last = path.back();
    size_t k = path.size();
    for (Vertex q : g.neighbors(last)) {
      if (q <= s || on.test(q) || blocked[q] > 0) continue;
      bool closes = k >= 2 && g.adjacent(q, s);
      if (closes) {
        if (k + 1 >= 4 && path[1] < q) {
          Hole h = path;
          h.push_back(q);
          out.push_back(h);
          if (out.size() > limit) throw BudgetExceeded("hole enumeration budget exceeded");
        }
        continue;
      }
      if (int(k + 1) >= max_len) continue;
      // `last` becomes interior once q is appended (unless it is s itself)
      if (k >= 2)
        for (Vertex y : g.neighbors(last)) ++blocked[y];
      path.push_back(q);
      on.set(q);
      extend(s);
      on.reset(q);
      path.pop_back();
      if (k >= 2)
        for (Vertex y : g.neighbors(last)) --blocked[y];
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    on.set(s);
    for (Vertex p1 : g.neighbors(s)) {
      if (p1 <= s) continue;
      path.push_back(p1);
      on.set(p1);
      extend(s);
      on.reset(p1);
      path.pop_back();
    }
    on.reset(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------- min-weight hole oracle

struct WeightedHole {
  Rational value;
  Hole hole;
};

namespace detail {

// For each vertex v: the lightest hole through v (length >= 4).
inline void holes_through_vertices(const Graph& g, const FracSol& x, std::vector<WeightedHole>& out) {
  for (int v = 0; v < g.n(); ++v) {
    auto& nb = g.neighbors(v);
    if (nb.size() < 2) continue;
    Bitset region(g.n());
    for (int y = 0; y < g.n(); ++y)
      if (y != v && !g.adjacent(v, y)) region.set(y);
    std::optional<WeightedHole> best;
    for (Vertex u : nb) {
      bool any = false;
      for (Vertex w : nb)
        if (w > u && !g.adjacent(u, w)) any = true;
      if (!any) continue;
      Bitset allowed = region;
      allowed.set(u);
      auto sp = dijkstra(g, x, {u}, &allowed);
      for (Vertex w : nb) {
        if (w <= u || g.adjacent(u, w)) continue;
        int bp = -1;
        for (Vertex p : g.neighbors(w))
          if (p != v && allowed.test(p) && sp.reached[p] &&
              (bp < 0 || sp.dist[p] < sp.dist[bp]))
            bp = p;
        if (bp < 0) continue;
        Rational val = x[v] + sp.dist[bp] + x[w];
        if (best && !(val < best->value)) continue;
        auto path = sp.path_to(bp);
        path.push_back(w);
        path = make_induced(g, path);
        Hole h{v};
        h.insert(h.end(), path.begin(), path.end());
        best = WeightedHole{frac_sum(x, h), canonical_hole(h)};
      }
    }
    if (best) out.push_back(*best);
  }
}

// For each edge b-c: the lightest hole of length >= 5 using b-c, found via
// induced P4s a-b-c-d and a path d..a avoiding N[b] u N[c].
inline void long_holes_through_edges(const Graph& g, const FracSol& x, std::vector<WeightedHole>& out) {
  for (auto [b0, c0] : g.edges()) {
    Bitset region(g.n());
    for (int y = 0; y < g.n(); ++y)
      if (y != b0 && y != c0 && !g.adjacent(b0, y) && !g.adjacent(c0, y)) region.set(y);
    std::optional<WeightedHole> best;
    for (int orient = 0; orient < 2; ++orient) {
      Vertex b = orient ? c0 : b0, c = orient ? b0 : c0;
      for (Vertex d : g.neighbors(c)) {
        if (d == b || g.adjacent(d, b)) continue;
        bool any = false;
        for (Vertex a : g.neighbors(b))
          if (a != c && !g.adjacent(a, c) && a != d && !g.adjacent(a, d) && (orient == 0 || a > d)) any = true;
        if (!any) continue;
        Bitset allowed = region;
        allowed.set(d);
        auto sp = dijkstra(g, x, {d}, &allowed);
        for (Vertex a : g.neighbors(b)) {
          if (a == c || g.adjacent(a, c) || a == d || g.adjacent(a, d)) continue;
          int bp = -1;
          for (Vertex p : g.neighbors(a))
            if (allowed.test(p) && sp.reached[p] && (bp < 0 || sp.dist[p] < sp.dist[bp])) bp = p;
          if (bp < 0) continue;
          Rational val = x[b] + x[c] + sp.dist[bp] + x[a];
          if (best && !(val < best->value)) continue;
          auto path = sp.path_to(bp);
          path.push_back(a);
          path = make_induced(g, path);
          Hole h{b, c};
          h.insert(h.end(), path.begin(), path.end());
          best = WeightedHole{frac_sum(x, h), canonical_hole(h)};
        }
      }
    }
    if (best) out.push_back(*best);
  }
}

// Exhaustive DFS over chordless paths, used for min_len >= 6.
inline void holes_by_dfs(const Graph& g, const FracSol& x, int min_len, size_t budget,
                         std::vector<WeightedHole>& out, bool& exhausted) {
  size_t nodes = 0;
  exhausted = false;
  std::optional<WeightedHole> best;
  Hole path;
  Bitset on(g.n());
  std::vector<int> blocked(g.n(), 0);
  std::function<void(Vertex, const Rational&)> go = [&](Vertex s, const Rational& acc) {
    if (++nodes > budget) {
      exhausted = true;
      return;
    }
    if (best && !(acc < best->value)) return;
    Vertex last = path.back();
    size_t k = path.size();
    for (Vertex q : g.neighbors(last)) {
      if (exhausted) return;
      if (q <= s || on.test(q) || blocked[q] > 0) continue;
      Rational nacc = acc + x[q];
      if (k >= 2 && g.adjacent(q, s)) {
        if (int(k + 1) >= min_len && k + 1 >= 4 && path[1] < q && (!best || nacc < best->value)) {
          Hole h = path;
          h.push_back(q);
          best = WeightedHole{nacc, h};
        }
        continue;
      }
      if (k >= 2)
        for (Vertex y : g.neighbors(last)) ++blocked[y];
      path.push_back(q);
      on.set(q);
      go(s, nacc);
      on.reset(q);
      path.pop_back();
      if (k >= 2)
        for (Vertex y : g.neighbors(last)) --blocked[y];
    }
  };
  for (int s = 0; s < g.n() && !exhausted; ++s) {
    path = {s};
    on.set(s);
    go(s, x[s]);
    on.reset(s);
  }
  if (best) out.push_back(*best);
}

} // namespace detail

// Candidate light holes (one per anchor vertex / edge), deduplicated and
// sorted by x-weight. The first entry is a minimum-weight hole of length
// >= min_len.
inline std::vector<WeightedHole> light_holes(const Graph& g, const FracSol& x, int min_len,
                                             size_t dfs_budget = 20000000, bool* exhausted = nullptr) {
  std::vector<WeightedHole> c;
  if (exhausted) *exhausted = false;
  if (min_len <= 4)
    detail::holes_through_vertices(g, x, c);
  else if (min_len == 5)
    detail::long_holes_through_edges(g, x, c);
  else {
    bool ex = false;
    detail::holes_by_dfs(g, x, min_len, dfs_budget, c, ex);
    if (exhausted) *exhausted = ex;
  }
  std::sort(c.begin(), c.end(), [](const WeightedHole& a, const WeightedHole& b) {
    return a.value != b.value ? a.value < b.value : a.hole < b.hole;
  });
  std::vector<WeightedHole> out;
  std::set<Hole> seen;
  for (auto& h : c)
    if (seen.insert(h.hole).second) out.push_back(h);
  return out;
}

inline std::optional<WeightedHole> min_weight_hole(const Graph& g, const FracSol& x, int min_len = 4) {
  for (auto& v : x)
    if (v < 0) throw InputError("min_weight_hole: negative value");
  auto c = light_holes(g, x, min_len);
  if (c.empty()) return std::nullopt;
  return c.front();
}

} // namespace vdel
