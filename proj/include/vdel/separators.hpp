#pragma once

#include "dh.hpp"

#include <cstdint>

namespace vdel {

// A set W with every component of G - W of size <= 2/3 of `total` (the
// vertex count the balance is measured against; defaults to |V(G)|).
// Graphs with at most one vertex are balanced by the empty set.
struct BalancedSeparator {
  VertexSet sep;
  VertexSet a1, a2; // the remaining vertices, packed into two sides
  Rational weight;
};

struct SeparatorOptions {
  int exact_threshold = 14; // exhaustive search up to this many vertices
  int flow_samples = 12;    // sampled vertex pairs for min vertex cuts
  int swap_iters = 200;     // local-search improvement steps
  size_t set_budget = 4000;  // bounded_set_plus_separator: max candidate sets
  size_t screen_above = 64;  // more structures than this: screen with a cheap separator
  size_t screen_keep = 8;    // structures kept for the full search after screening
};

inline bool is_balanced(const Graph& g, const VertexSet& w, long total = -1) {
  if (total < 0) total = g.n();
  if (total <= 1) return true;
  Bitset alive(g.n());
  for (int v = 0; v < g.n(); ++v) alive.set(v);
  for (Vertex v : w) alive.reset(v);
  for (auto& c : connected_components(g, &alive))
    if (3 * long(c.size()) > 2 * total) return false;
  return true;
}

// Largest component first, into the side with fewer vertices (ties: a1).
inline std::pair<VertexSet, VertexSet> pack_components(std::vector<VertexSet> comps) {
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  VertexSet a1, a2;
  for (auto& c : comps) {
    auto& side = a2.size() < a1.size() ? a2 : a1;
    side.insert(side.end(), c.begin(), c.end());
  }
  normalize(a1);
  normalize(a2);
  return {a1, a2};
}

inline BalancedSeparator finish_separator(const Graph& g, VertexSet w, long total) {
  normalize(w);
  VDEL_CHECK(is_balanced(g, w, total), "separator is not balanced");
  BalancedSeparator s;
  Bitset alive(g.n());
  for (int v = 0; v < g.n(); ++v) alive.set(v);
  for (Vertex v : w) alive.reset(v);
  std::tie(s.a1, s.a2) = pack_components(connected_components(g, &alive));
  VDEL_CHECK(3 * long(s.a1.size()) <= 2 * std::max<long>(total, 1) || total <= 1, "packing side a1 too large");
  VDEL_CHECK(3 * long(s.a2.size()) <= 2 * std::max<long>(total, 1) || total <= 1, "packing side a2 too large");
  s.weight = g.weight(w);
  s.sep = std::move(w);
  return s;
}

namespace detail {

// (weight, size, lexicographic) order on candidate separators.
inline bool better_sep(const Graph& g, const VertexSet& a, const Rational& wa, const VertexSet& b,
                       const Rational& wb) {
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  // then the one leaving the smaller largest component
  auto largest = [&](const VertexSet& w) {
    Bitset alive(g.n());
    for (int v = 0; v < g.n(); ++v) alive.set(v);
    for (Vertex v : w) alive.reset(v);
    size_t m = 0;
    for (auto& c : connected_components(g, &alive)) m = std::max(m, c.size());
    return m;
  };
  size_t la = largest(a), lb = largest(b);
  if (la != lb) return la < lb;
  return a < b;
}

inline VertexSet exact_separator(const Graph& g, long total) {
  int n = g.n();
  std::vector<uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) adj[v] |= uint64_t(1) << u;
  long cap = 2 * total;
  std::optional<std::pair<Rational, VertexSet>> best;
  for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
    Rational w = 0;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) w += g.weight(v);
    if (best && w > best->first) continue;
    uint64_t rest = ((uint64_t(1) << n) - 1) & ~m;
    bool ok = true;
    while (rest && ok) {
      uint64_t comp = rest & -rest, frontier = comp;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        uint64_t nb = adj[v] & rest & ~comp;
        comp |= nb;
        frontier |= nb;
      }
      if (3 * long(std::popcount(comp)) > cap) ok = false;
      rest &= ~comp;
    }
    if (!ok) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    if (!best || better_sep(g, s, w, best->second, best->first)) best = std::make_pair(w, s);
  }
  return best->second;
}

// Min-weight s-t vertex cut (s, t non-adjacent, never cut themselves) via
// augmenting paths on the split graph. Capacities are the vertex weights;
// zero-weight vertices are treated as a tiny positive amount so the cut is
// still a vertex set.
inline VertexSet min_vertex_cut(const Graph& g, Vertex s, Vertex t) {
  int n = g.n();
  int N = 2 * n; // v_in = 2v, v_out = 2v + 1
  struct Arc {
    int to;
    Rational cap;
    int rev;
  };
  std::vector<std::vector<Arc>> a(N);
  auto add = [&](int u, int v, const Rational& c) {
    a[u].push_back({v, c, int(a[v].size())});
    a[v].push_back({u, 0, int(a[u].size()) - 1});
  };
  Rational big = 1;
  for (int v = 0; v < n; ++v) big += rmax(g.weight(v), ratio(1, 1000000));
  for (int v = 0; v < n; ++v) {
    Rational c = (v == s || v == t) ? big : rmax(g.weight(v), ratio(1, 1000000));
    add(2 * v, 2 * v + 1, c);
  }
  for (auto [u, v] : g.edges()) {
    add(2 * u + 1, 2 * v, big);
    add(2 * v + 1, 2 * u, big);
  }
  int src = 2 * s + 1, dst = 2 * t;
  while (true) {
    std::vector<std::pair<int, int>> par(N, {-1, -1});
    std::vector<int> q{src};
    par[src] = {src, -1};
    for (size_t i = 0; i < q.size() && par[dst].first < 0; ++i)
      for (size_t k = 0; k < a[q[i]].size(); ++k) {
        auto& e = a[q[i]][k];
        if (sgn(e.cap) > 0 && par[e.to].first < 0) {
          par[e.to] = {q[i], int(k)};
          q.push_back(e.to);
        }
      }
    if (par[dst].first < 0) break;
    Rational f = big;
    for (int v = dst; v != src; v = par[v].first) f = rmin(f, a[par[v].first][par[v].second].cap);
    for (int v = dst; v != src; v = par[v].first) {
      auto& e = a[par[v].first][par[v].second];
      e.cap -= f;
      a[v][e.rev].cap += f;
    }
  }
  std::vector<char> seen(N, 0);
  std::vector<int> q{src};
  seen[src] = 1;
  for (size_t i = 0; i < q.size(); ++i)
    for (auto& e : a[q[i]])
      if (sgn(e.cap) > 0 && !seen[e.to]) {
        seen[e.to] = 1;
        q.push_back(e.to);
      }
  VertexSet cut;
  for (int v = 0; v < n; ++v)
    if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
  return cut;
}

// Add BFS layers inside oversized components until balanced.
inline VertexSet complete_by_layers(const Graph& g, VertexSet w, long total) {
  normalize(w);
  while (!is_balanced(g, w, total)) {
    Bitset alive(g.n());
    for (int v = 0; v < g.n(); ++v) alive.set(v);
    for (Vertex v : w) alive.reset(v);
    VertexSet big;
    for (auto& c : connected_components(g, &alive))
      if (3 * long(c.size()) > 2 * total && c.size() > big.size()) big = c;
    Bitset in = g.mask(big);
    // pseudo-peripheral start: farthest vertex from the smallest one
    auto d0 = bfs(g, {big.front()}, &in);
    Vertex far = big.front();
    for (Vertex v : big)
      if (d0[v] > d0[far]) far = v;
    auto d = bfs(g, {far}, &in);
    int depth = 0;
    for (Vertex v : big) depth = std::max(depth, d[v]);
    if (depth == 0) {
      w.push_back(big.front());
      normalize(w);
      continue;
    }
    // lightest layer among those splitting near the middle first
    std::vector<VertexSet> layers(depth + 1);
    for (Vertex v : big) layers[d[v]].push_back(v);
    int best = -1;
    Rational bw;
    long before = 0;
    for (int L = 1; L <= depth; ++L) {
      before += long(layers[L - 1].size());
      long after = long(big.size()) - before - long(layers[L].size());
      bool useful = 3 * before <= 2 * total && 3 * after <= 2 * total;
      Rational lw = g.weight(layers[L]);
      if (useful && (best < 0 || lw < bw)) {
        best = L;
        bw = lw;
      }
    }
    if (best < 0) best = (depth + 1) / 2;
    w = set_union(w, layers[best]);
  }
  return w;
}

// Drop vertices (heaviest first) while the set stays balanced.
inline VertexSet minimalize(const Graph& g, VertexSet w, long total) {
  std::vector<Vertex> order = w;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.weight(b) < g.weight(a); });
  for (Vertex v : order) {
    VertexSet t = set_minus(w, {v});
    if (is_balanced(g, t, total)) w = t;
  }
  return w;
}

// Swap a separator vertex for its neighbours inside one adjacent component.
inline VertexSet local_search(const Graph& g, VertexSet w, long total, int iters) {
  Rational cur = g.weight(w);
  for (int it = 0; it < iters; ++it) {
    bool improved = false;
    Bitset alive(g.n());
    for (int v = 0; v < g.n(); ++v) alive.set(v);
    for (Vertex v : w) alive.reset(v);
    auto lab = component_labels(g, &alive);
    for (Vertex v : w) {
      std::map<int, VertexSet> by_comp;
      for (Vertex u : g.neighbors(v))
        if (lab[u] >= 0) by_comp[lab[u]].push_back(u);
      for (auto& [c, nb] : by_comp) {
        VertexSet t = set_union(set_minus(w, {v}), nb);
        Rational tw = g.weight(t);
        if (tw < cur && is_balanced(g, t, total)) {
          w = minimalize(g, t, total);
          cur = g.weight(w);
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) break;
  }
  return w;
}

// SplitMix64 step; fixed seeds keep the heuristic deterministic.
inline uint64_t splitmix(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline VertexSet heuristic_separator(const Graph& g, long total, const SeparatorOptions& opt) {
  int n = g.n();
  std::vector<VertexSet> cands;
  cands.push_back(complete_by_layers(g, {}, total));
  uint64_t seed = 0x5eedULL + uint64_t(n);
  for (int k = 0; k < opt.flow_samples && n >= 3; ++k) {
    Vertex s = Vertex(splitmix(seed) % uint64_t(n));
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    auto d = bfs(g, {s}, &all);
    Vertex t = -1;
    if (k % 2 == 0) {
      for (int v = 0; v < n; ++v)
        if (d[v] >= 2 && (t < 0 || d[v] > d[t])) t = v;
    } else {
      for (int tries = 0; tries < 8 && t < 0; ++tries) {
        Vertex c = Vertex(splitmix(seed) % uint64_t(n));
        if (d[c] >= 2) t = c;
      }
    }
    if (t < 0) continue;
    cands.push_back(complete_by_layers(g, min_vertex_cut(g, s, t), total));
  }
  VertexSet best;
  Rational bw;
  bool have = false;
  for (auto& c : cands) {
    auto w = local_search(g, minimalize(g, c, total), total, opt.swap_iters);
    Rational ww = g.weight(w);
    if (!have || better_sep(g, w, ww, best, bw)) {
      best = w;
      bw = ww;
      have = true;
    }
  }
  return best;
}

} // namespace detail

inline BalancedSeparator balanced_vertex_separator(const Graph& g, const SeparatorOptions& opt = {}, long total = -1) {
  if (total < 0) total = g.n();
  if (total <= 1 || is_balanced(g, {}, total)) return finish_separator(g, {}, total);
  VertexSet w = g.n() <= std::min(opt.exact_threshold, 22) ? detail::exact_separator(g, total)
                                                             : detail::heuristic_separator(g, total, opt);
  return finish_separator(g, w, total);
}

// Shared driver: for each structure M, separate G - M against |V(G)|.
struct StructureSeparator {
  VertexSet m;       // the structure (clique / bounded set / biclique vertices)
  VertexSet s;       // extra separator vertices
  VertexSet a1, a2;  // sides of G - (M u S)
  Rational weight;   // w(S)
  size_t candidates = 0;
};

namespace detail {

inline StructureSeparator best_structure(const Graph& g, std::vector<VertexSet> structures,
                                         const SeparatorOptions& opt) {
  if (structures.size() > opt.screen_above && opt.screen_keep > 0) {
    // cheap pass over all structures, full search on the best few (stable order)
    SeparatorOptions cheap = opt;
    cheap.flow_samples = std::min(opt.flow_samples, 1);
    cheap.swap_iters = std::min(opt.swap_iters, 10);
    std::vector<std::pair<Rational, size_t>> score;
    for (size_t i = 0; i < structures.size(); ++i) {
      auto rest = remove_vertices(g, structures[i]);
      score.emplace_back(balanced_vertex_separator(rest.graph, cheap, g.n()).weight, i);
    }
    std::stable_sort(score.begin(), score.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<size_t> keep;
    for (size_t i = 0; i < score.size() && i < opt.screen_keep; ++i) keep.push_back(score[i].second);
    std::sort(keep.begin(), keep.end());
    std::vector<VertexSet> kept;
    for (size_t i : keep) kept.push_back(std::move(structures[i]));
    structures = std::move(kept);
  }
  StructureSeparator best;
  bool have = false;
  for (auto& m : structures) {
    auto rest = remove_vertices(g, m);
    auto sep = balanced_vertex_separator(rest.graph, opt, g.n());
    VertexSet s;
    for (Vertex v : sep.sep) s.push_back(rest.to_parent[v]);
    normalize(s);
    ++best.candidates;
    if (have && !(sep.weight < best.weight)) continue;
    size_t c = best.candidates;
    best = {m, s, {}, {}, sep.weight, c};
    for (Vertex v : sep.a1) best.a1.push_back(rest.to_parent[v]);
    for (Vertex v : sep.a2) best.a2.push_back(rest.to_parent[v]);
    normalize(best.a1);
    normalize(best.a2);
    have = true;
    if (sgn(best.weight) == 0) break;
  }
  VDEL_CHECK(have, "no candidate structure");
  VDEL_CHECK(is_balanced(g, set_union(best.m, best.s)), "structure separator is not balanced");
  return best;
}

} // namespace detail

// A maximal clique M and a light S with M u S balanced.
inline StructureSeparator clique_plus_separator(const Graph& g, const SeparatorOptions& opt = {}) {
  auto cliques = enumerate_maximal_cliques(g);
  if (cliques.empty()) cliques.push_back({});
  return detail::best_structure(g, cliques, opt);
}

// |M| <= k. All subsets of size <= k when there are at most set_budget of
// them, otherwise a deterministic degree-biased sample of that many.
inline StructureSeparator bounded_set_plus_separator(const Graph& g, int k, const SeparatorOptions& opt = {}) {
  if (k < 0) throw InputError("bounded_set_plus_separator: negative k");
  int n = g.n();
  std::vector<VertexSet> sets;
  // count subsets of size <= k
  double count = 0, binom = 1;
  for (int i = 0; i <= k && i <= n; ++i) {
    count += binom;
    binom = binom * (n - i) / (i + 1);
  }
  if (count <= double(opt.set_budget)) {
    VertexSet cur;
    std::function<void(int)> rec = [&](int start) {
      sets.push_back(cur);
      if (int(cur.size()) == k) return;
      for (int v = start; v < n; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
  } else {
    std::vector<Vertex> by_deg(n);
    std::iota(by_deg.begin(), by_deg.end(), 0);
    std::stable_sort(by_deg.begin(), by_deg.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::set<VertexSet> seen;
    seen.insert({});
    uint64_t seed = 0xb0b0ULL + uint64_t(n);
    for (size_t tries = 0; seen.size() < opt.set_budget && tries < 20 * opt.set_budget; ++tries) {
      VertexSet s;
      for (int i = 0; i < k; ++i) {
        // squared uniform favours the front of the degree order
        double u = double(detail::splitmix(seed) >> 11) / double(1ULL << 53);
        s.push_back(by_deg[size_t(u * u * n)]);
      }
      normalize(s);
      seen.insert(s);
    }
    sets.assign(seen.begin(), seen.end());
  }
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return detail::best_structure(g, sets, opt);
}

struct BicliqueSeparator {
  std::optional<Biclique> k; // empty when the plain separator won
  StructureSeparator sep;
};

// The empty structure and every maximal biclique are tried.
inline BicliqueSeparator biclique_plus_separator(const Graph& g, const SeparatorOptions& opt = {}) {
  auto bcs = enumerate_maximal_bicliques(g);
  std::vector<VertexSet> structures{{}};
  for (auto& b : bcs) structures.push_back(b.vertices());
  BicliqueSeparator out;
  out.sep = detail::best_structure(g, structures, opt);
  if (!out.sep.m.empty())
    for (auto& b : bcs)
      if (b.vertices() == out.sep.m) {
        out.k = b;
        break;
      }
  return out;
}

} // namespace vdel
