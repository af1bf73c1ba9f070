#pragma once

#include "bitset.hpp"
#include "rational.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace vdel {

using Vertex = int;
// Sorted, duplicate-free list of local vertex indices of one graph.
using VertexSet = std::vector<Vertex>;
// Sorted list of root identities (labels); solver results travel in this form.
using IdSet = std::vector<int>;
using Edge = std::pair<Vertex, Vertex>;

inline void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Immutable undirected simple graph. Vertices are 0..n-1; each carries a
// nonnegative rational weight and an identity (label) in the root graph it
// was cut from, so results of nested recursions map back without chains.
class Graph {
public:
  Graph() = default;

  Graph(int n, const std::vector<Edge>& edges, std::vector<Rational> weights = {},
        std::vector<int> ids = {})
      : n_(n), adj_(n), rows_(n, Bitset(n)), w_(std::move(weights)), ids_(std::move(ids)) {
    if (n < 0) throw InputError("negative vertex count");
    if (w_.empty()) w_.assign(n, Rational(1));
    if (int(w_.size()) != n) throw InputError("weight vector length differs from n");
    for (auto& w : w_)
      if (w < 0) throw InputError("negative weight");
    if (ids_.empty()) {
      ids_.resize(n);
      std::iota(ids_.begin(), ids_.end(), 0);
    }
    if (int(ids_.size()) != n) throw InputError("identity vector length differs from n");
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
      if (u == v) throw InputError("self-loop");
      if (rows_[u].test(v)) continue;
      rows_[u].set(v);
      rows_[v].set(u);
      adj_[u].push_back(v);
      adj_[v].push_back(u);
      ++m_;
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    int mx = -1;
    for (int id : ids_) {
      if (id < 0) throw InputError("negative identity");
      mx = std::max(mx, id);
    }
    local_.assign(mx + 1, -1);
    for (int v = 0; v < n; ++v) {
      if (local_[ids_[v]] != -1) throw InputError("duplicate identity");
      local_[ids_[v]] = v;
    }
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return int(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  const Rational& weight(Vertex v) const { return w_[v]; }
  const std::vector<Rational>& weights() const { return w_; }
  int id(Vertex v) const { return ids_[v]; }
  const std::vector<int>& ids() const { return ids_; }
  int local(int id) const { return id >= 0 && id < int(local_.size()) ? local_[id] : -1; }

  Rational weight(const VertexSet& s) const {
    Rational t = 0;
    for (Vertex v : s) t += w_[v];
    return t;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  Bitset empty_set() const { return Bitset(n_); }
  Bitset mask(const VertexSet& s) const {
    Bitset b(n_);
    for (Vertex v : s) b.set(v);
    return b;
  }

  IdSet to_ids(const VertexSet& s) const {
    IdSet out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(ids_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }
  // Identities absent from this graph are skipped.
  VertexSet from_ids(const IdSet& s) const {
    VertexSet out;
    for (int id : s) {
      int v = local(id);
      if (v >= 0) out.push_back(v);
    }
    normalize(out);
    return out;
  }

  bool is_clique(const VertexSet& s) const {
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (!adjacent(s[i], s[j])) return false;
    return true;
  }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
  std::vector<Rational> w_;
  std::vector<int> ids_;
  std::vector<int> local_;
};

struct Induced {
  Graph graph;
  std::vector<Vertex> to_parent; // local index in the sub graph -> index in the parent
};

inline Induced induced_subgraph(const Graph& g, VertexSet u) {
  normalize(u);
  for (Vertex v : u)
    if (v < 0 || v >= g.n()) throw InputError("induced_subgraph: unknown vertex " + std::to_string(v));
  std::vector<int> pos(g.n(), -1);
  for (size_t i = 0; i < u.size(); ++i) pos[u[i]] = int(i);
  std::vector<Edge> es;
  std::vector<Rational> ws;
  std::vector<int> ids;
  for (size_t i = 0; i < u.size(); ++i) {
    Vertex v = u[i];
    ws.push_back(g.weight(v));
    ids.push_back(g.id(v));
    for (Vertex x : g.neighbors(v))
      if (pos[x] > int(i)) es.emplace_back(int(i), pos[x]);
  }
  return {Graph(int(u.size()), es, std::move(ws), std::move(ids)), std::move(u)};
}

inline Induced remove_vertices(const Graph& g, const VertexSet& s) {
  Bitset gone = g.mask(s);
  VertexSet keep;
  for (int v = 0; v < g.n(); ++v)
    if (!gone.test(v)) keep.push_back(v);
  return induced_subgraph(g, keep);
}

// Same graph, fresh identities 0..n-1 (used when a sub problem is solved as
// a stand-alone instance).
inline Graph relabel_identity(const Graph& g) { return Graph(g.n(), g.edges(), g.weights()); }

inline std::vector<VertexSet> connected_components(const Graph& g, const Bitset* alive = nullptr) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s] || (alive && !alive->test(s))) continue;
    VertexSet c{s};
    seen[s] = 1;
    for (size_t i = 0; i < c.size(); ++i)
      for (Vertex x : g.neighbors(c[i]))
        if (!seen[x] && (!alive || alive->test(x))) {
          seen[x] = 1;
          c.push_back(x);
        }
    normalize(c);
    comps.push_back(std::move(c));
  }
  return comps;
}

// Component label per vertex (-1 outside alive).
inline std::vector<int> component_labels(const Graph& g, const Bitset* alive = nullptr) {
  std::vector<int> lab(g.n(), -1);
  auto comps = connected_components(g, alive);
  for (size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) lab[v] = int(i);
  return lab;
}

inline int largest_component(const Graph& g, const Bitset& alive) {
  int best = 0;
  for (auto& c : connected_components(g, &alive)) best = std::max(best, int(c.size()));
  return best;
}

namespace detail {

// Subgraph-local sets to parent indices, and back via vertex ids.
inline VertexSet lift(const std::vector<Vertex>& to_parent, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out.push_back(to_parent[v]);
  normalize(out);
  return out;
}

inline VertexSet lower(const Graph& sub, const Graph& parent, const VertexSet& s) {
  return sub.from_ids(parent.to_ids(s));
}

} // namespace detail

} // namespace vdel
