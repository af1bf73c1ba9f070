#pragma once

#include "graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace vdel {

// Minor models for small patterns h: fast minor-free tests for the built-in
// families, model extraction by shrinking the host, and a memoized
// contraction search for other small patterns.

struct MinorModel {
  std::vector<VertexSet> branch; // branch[i] realizes vertex i of h

  VertexSet vertices() const {
    VertexSet out;
    for (auto& b : branch) out.insert(out.end(), b.begin(), b.end());
    normalize(out);
    return out;
  }
};

struct UnsupportedMinor : InputError {
  explicit UnsupportedMinor(const std::string& m) : InputError(m) {}
};

constexpr int kMaxPatternSize = 6;
constexpr int kMaxGeneralHost = 16;

// Contract every branch set and check that h embeds under the identity map.
inline bool verify_model(const Graph& g, const Graph& h, const MinorModel& m) {
  if (int(m.branch.size()) != h.n()) return false;
  std::vector<int> owner(g.n(), -1);
  for (int i = 0; i < h.n(); ++i) {
    if (m.branch[i].empty()) return false;
    for (Vertex v : m.branch[i]) {
      if (v < 0 || v >= g.n() || owner[v] >= 0) return false;
      owner[v] = i;
    }
    if (connected_components(induced_subgraph(g, m.branch[i]).graph).size() != 1) return false;
  }
  std::set<std::pair<int, int>> quotient;
  for (int u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v])
        quotient.insert({std::min(owner[u], owner[v]), std::max(owner[u], owner[v])});
  for (int a = 0; a < h.n(); ++a)
    for (Vertex b : h.neighbors(a))
      if (a < b && !quotient.count({a, int(b)})) return false;
  return true;
}

namespace detail {

// Mutable multigraph-free adjacency for reductions.
using AdjSets = std::vector<std::set<int>>;

inline AdjSets adj_sets(const Graph& g) {
  AdjSets a(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) a[u].insert(v);
  return a;
}

inline bool is_forest(const Graph& g) {
  long m = 0;
  for (int u = 0; u < g.n(); ++u) m += long(g.neighbors(u).size());
  m /= 2;
  return m == g.n() - long(connected_components(g).size());
}

// Series-parallel reduction: delete degree <= 1, suppress degree 2.
inline bool is_k4_minor_free(const Graph& g) {
  auto a = adj_sets(g);
  std::vector<char> gone(g.n(), 0);
  std::vector<int> work(g.n());
  std::iota(work.begin(), work.end(), 0);
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    if (gone[v] || a[v].size() > 2) continue;
    gone[v] = 1;
    std::vector<int> nb(a[v].begin(), a[v].end());
    for (int u : nb) a[u].erase(v);
    a[v].clear();
    if (nb.size() == 2) {
      a[nb[0]].insert(nb[1]);
      a[nb[1]].insert(nb[0]);
    }
    for (int u : nb) work.push_back(u);
  }
  for (int v = 0; v < g.n(); ++v)
    if (!gone[v]) return false;
  return true;
}

inline Graph from_adj(const AdjSets& a) {
  std::vector<Edge> es;
  for (int u = 0; u < int(a.size()); ++u)
    for (int v : a[u])
      if (u < v) es.emplace_back(u, v);
  return Graph(int(a.size()), es);
}

// h is K2, C3 (= K3) or K4 up to isomorphism.
inline int complete_pattern(const Graph& h) {
  long m = 0;
  for (int u = 0; u < h.n(); ++u) m += long(h.neighbors(u).size());
  m /= 2;
  if (h.n() >= 2 && h.n() <= 4 && m == long(h.n()) * (h.n() - 1) / 2) return h.n();
  return 0;
}

using MinorTest = std::function<bool(const Graph&)>; // true when g has the minor

inline std::optional<MinorTest> fast_test(const Graph& h) {
  switch (complete_pattern(h)) {
  case 2: return MinorTest([](const Graph& g) {
      for (int u = 0; u < g.n(); ++u)
        if (!g.neighbors(u).empty()) return true;
      return false;
    });
  case 3: return MinorTest([](const Graph& g) { return !is_forest(g); });
  case 4: return MinorTest([](const Graph& g) { return !is_k4_minor_free(g); });
  default: return std::nullopt;
  }
}

// Map a graph that equals h up to isomorphism onto h.
inline std::optional<std::vector<int>> isomorphism(const Graph& a, const Graph& h) {
  if (a.n() != h.n()) return std::nullopt;
  std::vector<int> p(a.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < h.n() && ok; ++i)
      for (int j = i + 1; j < h.n() && ok; ++j) ok = h.adjacent(i, j) == a.adjacent(p[i], p[j]);
    if (ok) return p; // h vertex i -> a vertex p[i]
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

// Working minor: adjacency plus the original vertices behind each vertex.
struct Contracted {
  AdjSets adj;
  std::vector<VertexSet> sets;
  std::vector<char> alive;

  Graph graph(std::vector<int>& ids) const {
    ids.clear();
    std::vector<int> loc(adj.size(), -1);
    for (int v = 0; v < int(adj.size()); ++v)
      if (alive[v]) {
        loc[v] = int(ids.size());
        ids.push_back(v);
      }
    std::vector<Edge> es;
    for (int u : ids)
      for (int v : adj[u])
        if (u < v) es.emplace_back(loc[u], loc[v]);
    return Graph(int(ids.size()), es);
  }
};

// Shrink by vertex deletions, edge deletions and edge contractions while
// the minor survives; what remains is h itself, and its vertices' original
// sets form the model.
inline MinorModel shrink_to_model(const Graph& g, const Graph& h, const MinorTest& has) {
  Contracted c{adj_sets(g), {}, std::vector<char>(g.n(), 1)};
  for (int v = 0; v < g.n(); ++v) c.sets.push_back({v});
  std::vector<int> ids;
  auto holds = [&]() { return has(c.graph(ids)); };
  for (int v = 0; v < g.n(); ++v) {
    c.alive[v] = 0;
    auto saved = c.adj[v];
    for (int u : saved) c.adj[u].erase(v);
    c.adj[v].clear();
    if (!holds()) {
      c.alive[v] = 1;
      c.adj[v] = saved;
      for (int u : saved) c.adj[u].insert(v);
    }
  }
  for (int u = 0; u < g.n(); ++u) {
    std::vector<int> nb(c.adj[u].begin(), c.adj[u].end());
    for (int v : nb) {
      if (v < u) continue;
      c.adj[u].erase(v);
      c.adj[v].erase(u);
      if (!holds()) {
        c.adj[u].insert(v);
        c.adj[v].insert(u);
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < g.n() && !changed; ++u) {
      if (!c.alive[u]) continue;
      for (int v : std::vector<int>(c.adj[u].begin(), c.adj[u].end())) {
        Contracted save = c;
        // merge v into u
        for (int w : c.adj[v]) {
          c.adj[w].erase(v);
          if (w != u) {
            c.adj[u].insert(w);
            c.adj[w].insert(u);
          }
        }
        c.adj[v].clear();
        c.alive[v] = 0;
        c.sets[u].insert(c.sets[u].end(), c.sets[v].begin(), c.sets[v].end());
        normalize(c.sets[u]);
        c.sets[v].clear();
        if (holds()) {
          changed = true;
          break;
        }
        c = std::move(save);
      }
    }
  }
  Graph left = c.graph(ids);
  auto iso = isomorphism(left, h);
  VDEL_CHECK(iso.has_value(), "shrunk host is not the pattern");
  MinorModel m;
  for (int i = 0; i < h.n(); ++i) m.branch.push_back(c.sets[ids[(*iso)[i]]]);
  return m;
}

// h as a subgraph of g (vertex map), small exhaustive search.
inline std::optional<std::vector<int>> subgraph_embedding(const Graph& g, const Graph& h) {
  std::vector<int> map(h.n(), -1);
  std::vector<char> used(g.n(), 0);
  std::function<bool(int)> go = [&](int i) {
    if (i == h.n()) return true;
    for (int c = 0; c < g.n(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (h.adjacent(i, j) && !g.adjacent(c, map[j])) ok = false;
      if (!ok) continue;
      used[c] = 1;
      map[i] = c;
      if (go(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

// Depth-first over vertex deletions and edge contractions, memoized on the
// adjacency structure; at each state h is tried as a subgraph.
inline std::optional<MinorModel> general_minor_search(const Graph& g, const Graph& h) {
  long hm = 0;
  for (int u = 0; u < h.n(); ++u) hm += long(h.neighbors(u).size());
  hm /= 2;
  std::set<std::vector<uint32_t>> failed;
  std::function<std::optional<MinorModel>(const Graph&, const std::vector<VertexSet>&)> go =
      [&](const Graph& cur, const std::vector<VertexSet>& sets) -> std::optional<MinorModel> {
    if (cur.n() < h.n()) return std::nullopt;
    long m = 0;
    for (int u = 0; u < cur.n(); ++u) m += long(cur.neighbors(u).size());
    if (m / 2 < hm) return std::nullopt;
    std::vector<uint32_t> key{uint32_t(cur.n())};
    for (int u = 0; u < cur.n(); ++u) {
      uint32_t row = 0;
      for (Vertex v : cur.neighbors(u)) row |= 1u << v;
      key.push_back(row);
    }
    if (failed.count(key)) return std::nullopt;
    if (auto emb = subgraph_embedding(cur, h)) {
      MinorModel mm;
      for (int i = 0; i < h.n(); ++i) mm.branch.push_back(sets[(*emb)[i]]);
      return mm;
    }
    for (int v = 0; v < cur.n(); ++v) {
      auto sub = remove_vertices(cur, {v});
      std::vector<VertexSet> ss;
      for (Vertex u : sub.to_parent) ss.push_back(sets[u]);
      if (auto r = go(sub.graph, ss)) return r;
    }
    for (int u = 0; u < cur.n(); ++u)
      for (Vertex v : cur.neighbors(u)) {
        if (v < u) continue;
        // contract v into u: vertices after v shift down by one
        std::vector<int> loc(cur.n());
        for (int w = 0, k = 0; w < cur.n(); ++w) loc[w] = w == v ? -1 : k++;
        loc[v] = loc[u];
        std::set<Edge> es;
        for (int a = 0; a < cur.n(); ++a)
          for (Vertex b : cur.neighbors(a))
            if (loc[a] != loc[b]) es.insert({std::min(loc[a], loc[b]), std::max(loc[a], loc[b])});
        std::vector<VertexSet> ss(cur.n() - 1);
        for (int w = 0; w < cur.n(); ++w) ss[loc[w]].insert(ss[loc[w]].end(), sets[w].begin(), sets[w].end());
        for (auto& s : ss) normalize(s);
        if (auto r = go(Graph(cur.n() - 1, std::vector<Edge>(es.begin(), es.end())), ss)) return r;
      }
    failed.insert(key);
    return std::nullopt;
  };
  std::vector<VertexSet> sets;
  for (int v = 0; v < g.n(); ++v) sets.push_back({v});
  return go(g, sets);
}

} // namespace detail

inline std::optional<MinorModel> has_minor(const Graph& g, const Graph& h) {
  if (h.n() > kMaxPatternSize) throw UnsupportedMinor("minor pattern larger than " + std::to_string(kMaxPatternSize));
  if (h.n() == 0) return MinorModel{};
  std::optional<MinorModel> out;
  if (auto test = detail::fast_test(h)) {
    if (!(*test)(g)) return std::nullopt;
    out = detail::shrink_to_model(g, h, *test);
  } else {
    if (g.n() > kMaxGeneralHost)
      throw UnsupportedMinor("general minor search limited to hosts with " + std::to_string(kMaxGeneralHost) +
                             " vertices");
    out = detail::general_minor_search(g, h);
  }
  if (out) VDEL_CHECK(verify_model(g, h, *out), "minor model failed the contraction check");
  return out;
}

// ------------------------------------------------------------ families

struct MinorFamily {
  std::string name;
  std::vector<Graph> members;
  int c = 0; // treewidth bound of member-minor-free graphs
};

inline Graph complete_graph(int k) {
  std::vector<Edge> es;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
  return Graph(k, es);
}

inline MinorFamily minor_family(const std::string& name) {
  if (name == "k2") return {"k2", {complete_graph(2)}, 0};
  if (name == "c3") return {"c3", {complete_graph(3)}, 1};
  if (name == "k4") return {"k4", {complete_graph(4)}, 2};
  throw InputError("unknown minor family '" + name + "' (expected k2, c3 or k4)");
}

inline bool is_minor_free(const Graph& g, const MinorFamily& f) {
  for (auto& h : f.members) {
    if (auto t = detail::fast_test(h)) {
      if ((*t)(g)) return false;
    } else if (has_minor(g, h)) {
      return false;
    }
  }
  return true;
}

// Some model of some member, as the set of its vertices.
inline std::optional<VertexSet> find_model_vertices(const Graph& g, const MinorFamily& f) {
  for (auto& h : f.members)
    if (auto m = has_minor(g, h)) return m->vertices();
  return std::nullopt;
}

} // namespace vdel
