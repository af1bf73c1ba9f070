#pragma once

#include "graph.hpp"

#include <optional>
#include <queue>

namespace vdel {

// x : V(g) -> Q>=0, indexed by local vertex.
using FracSol = std::vector<Rational>;

inline Rational frac_weight(const Graph& g, const FracSol& x) {
  Rational t = 0;
  for (int v = 0; v < g.n(); ++v)
    if (sgn(x[v]) != 0) t += g.weight(v) * x[v];
  return t;
}

inline Rational frac_sum(const FracSol& x, const VertexSet& s) {
  Rational t = 0;
  for (Vertex v : s) t += x[v];
  return t;
}

inline FracSol restrict_to(const FracSol& x, const std::vector<Vertex>& to_parent) {
  FracSol out;
  out.reserve(to_parent.size());
  for (Vertex p : to_parent) out.push_back(x[p]);
  return out;
}

struct ShortestPaths {
  std::vector<Rational> dist;
  std::vector<int> parent;
  std::vector<char> reached;

  std::vector<Vertex> path_to(Vertex t) const {
    std::vector<Vertex> p;
    for (int v = t; v != -1; v = parent[v]) p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
  }
};

// Vertex-weighted Dijkstra: the cost of a path is the sum over all its
// vertices, both endpoints included. Sources start at their own cost.
// Vertices outside `allowed` are never entered. Ties resolve by vertex index.
inline ShortestPaths dijkstra(const Graph& g, const FracSol& c, const std::vector<Vertex>& sources,
                              const Bitset* allowed = nullptr) {
  ShortestPaths sp;
  sp.dist.assign(g.n(), Rational(0));
  sp.parent.assign(g.n(), -1);
  sp.reached.assign(g.n(), 0);
  std::vector<char> done(g.n(), 0);
  using Item = std::pair<Rational, int>;
  auto later = [](const Item& a, const Item& b) {
    int k = mpq_cmp(a.first.get_mpq_t(), b.first.get_mpq_t());
    return k != 0 ? k > 0 : a.second > b.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> pq(later);
  for (Vertex s : sources) {
    if (allowed && !allowed->test(s)) continue;
    if (!sp.reached[s] || c[s] < sp.dist[s]) {
      sp.reached[s] = 1;
      sp.dist[s] = c[s];
      sp.parent[s] = -1;
      pq.emplace(c[s], s);
    }
  }
  Rational nd;
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u] || d != sp.dist[u]) continue;
    done[u] = 1;
    for (Vertex v : g.neighbors(u)) {
      if (done[v] || (allowed && !allowed->test(v))) continue;
      nd = d + c[v];
      if (!sp.reached[v] || nd < sp.dist[v] || (nd == sp.dist[v] && u < sp.parent[v])) {
        sp.reached[v] = 1;
        sp.dist[v] = nd;
        sp.parent[v] = u;
        pq.emplace(nd, v);
      }
    }
  }
  return sp;
}

struct PathResult {
  Rational cost;
  std::vector<Vertex> path;
};

inline std::optional<PathResult> vertex_weighted_shortest_path(const Graph& g, const FracSol& costs,
                                                               Vertex s, Vertex t) {
  if (s < 0 || t < 0 || s >= g.n() || t >= g.n()) throw InputError("shortest path: vertex not in graph");
  if (int(costs.size()) != g.n()) throw InputError("shortest path: cost vector size mismatch");
  for (auto& c : costs)
    if (c < 0) throw InputError("shortest path: negative cost");
  auto sp = dijkstra(g, costs, {s});
  if (!sp.reached[t]) return std::nullopt;
  return PathResult{sp.dist[t], sp.path_to(t)};
}

// Unweighted BFS distances from a source set inside `allowed`.
inline std::vector<int> bfs(const Graph& g, const std::vector<Vertex>& sources, const Bitset* allowed = nullptr,
                            std::vector<int>* parent = nullptr) {
  std::vector<int> d(g.n(), -1);
  if (parent) parent->assign(g.n(), -1);
  std::vector<Vertex> q;
  for (Vertex s : sources)
    if (d[s] < 0 && (!allowed || allowed->test(s))) {
      d[s] = 0;
      q.push_back(s);
    }
  for (size_t i = 0; i < q.size(); ++i) {
    Vertex u = q[i];
    for (Vertex v : g.neighbors(u))
      if (d[v] < 0 && (!allowed || allowed->test(v))) {
        d[v] = d[u] + 1;
        if (parent) (*parent)[v] = u;
        q.push_back(v);
      }
  }
  return d;
}

// Shortcut a walk into an induced path with the same endpoints whose vertex
// set is a subset of the walk's.
inline std::vector<Vertex> make_induced(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Vertex> out;
  size_t i = 0;
  while (true) {
    out.push_back(p[i]);
    if (i + 1 >= p.size()) break;
    size_t j = p.size() - 1;
    while (j > i + 1 && !g.adjacent(p[i], p[j])) --j;
    i = j;
  }
  return out;
}

} // namespace vdel
