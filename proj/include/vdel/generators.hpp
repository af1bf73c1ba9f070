#pragma once

#include "dh.hpp"
#include "multicut.hpp"
#include "rng.hpp"

#include <map>

namespace vdel {

// Seeded instance generators. The spec alone determines the instance.

struct InstanceSpec {
  std::string family = "cvd";      // cvd | dhvd | pmfd | multicut-chordal | multicut-general
  int n = 10;
  std::string generator = "clique-tree";
  uint64_t seed = 1;
  std::string weights = "unit";    // unit | uniform-int | exponential
  int w_max = 10;                  // uniform-int upper end
  int k = 2;                       // planted holes / terminal pairs
  int noise = 0;                   // extra random edges (pruning)
  Rational avg_degree = 3;         // erdos-renyi
  std::string minor = "c3";        // pmfd excluded family: k2 | c3 | k4
};

struct Instance {
  InstanceSpec spec;
  Graph graph;
  std::vector<TerminalPair> pairs; // multicut families only
};

inline const std::vector<std::string>& known_families() {
  static const std::vector<std::string> f{"cvd", "dhvd", "pmfd", "multicut-chordal", "multicut-general"};
  return f;
}
inline const std::vector<std::string>& known_generators() {
  static const std::vector<std::string> g{"clique-tree", "planted-holes", "pruning", "erdos-renyi"};
  return g;
}

inline Json spec_to_json(const InstanceSpec& s) {
  Json j;
  j["family"] = s.family;
  j["n"] = s.n;
  j["generator"] = s.generator;
  j["seed"] = s.seed;
  j["weights"] = s.weights;
  j["w_max"] = s.w_max;
  j["k"] = s.k;
  j["noise"] = s.noise;
  j["avg_degree"] = to_string(s.avg_degree);
  if (s.family == "pmfd") j["minor"] = s.minor;
  return j;
}

inline void validate_spec(const InstanceSpec& s) {
  auto in = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  if (!in(known_families(), s.family)) throw InputError("unknown family: " + s.family);
  if (!in(known_generators(), s.generator)) throw InputError("unknown generator: " + s.generator);
  if (s.weights != "unit" && s.weights != "uniform-int" && s.weights != "exponential")
    throw InputError("unknown weight distribution: " + s.weights);
  if (s.n < 0 || s.n > 100000) throw InputError("n out of range");
  if (s.w_max < 1) throw InputError("w_max must be >= 1");
  if (s.k < 0 || s.noise < 0) throw InputError("k and noise must be >= 0");
  if (s.avg_degree < 0) throw InputError("avg_degree must be >= 0");
  if (s.minor != "k2" && s.minor != "c3" && s.minor != "k4") throw InputError("unknown minor family: " + s.minor);
}

inline InstanceSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("instance spec must be an object");
  static const std::vector<std::string> keys{"family", "n", "generator", "seed", "weights",
                                             "w_max", "k", "noise", "avg_degree", "minor"};
  for (auto& [key, v] : j.items())
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw InputError("unknown spec key: " + key);
  InstanceSpec s;
  auto str = [&](const char* k, std::string& out) {
    if (!j.contains(k)) return;
    if (!j[k].is_string()) throw InputError(std::string("spec.") + k + " must be a string");
    out = j[k].get<std::string>();
  };
  str("family", s.family);
  str("generator", s.generator);
  str("weights", s.weights);
  str("minor", s.minor);
  if (j.contains("n")) s.n = json_int(j["n"], "spec.n");
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) throw InputError("spec.seed must be an integer");
    s.seed = j["seed"].get<uint64_t>();
  }
  if (j.contains("w_max")) s.w_max = json_int(j["w_max"], "spec.w_max");
  if (j.contains("k")) s.k = json_int(j["k"], "spec.k");
  if (j.contains("noise")) s.noise = json_int(j["noise"], "spec.noise");
  if (j.contains("avg_degree")) s.avg_degree = json_rational(j["avg_degree"]);
  validate_spec(s);
  return s;
}

namespace gen {

// Simplicial growth: each new vertex joins a nonempty subset of a random
// bag of the current clique tree, so the result is chordal.
inline std::vector<Edge> clique_tree(Rng& r, int n) {
  std::vector<Edge> es;
  std::vector<VertexSet> bags;
  for (int v = 0; v < n; ++v) {
    if (bags.empty()) {
      bags.push_back({v});
      continue;
    }
    int b = int(r.below(bags.size()));
    VertexSet bag = bags[b];
    VertexSet s;
    for (Vertex u : bag)
      if (r.chance(2, 3)) s.push_back(u);
    if (s.empty()) s.push_back(bag[r.below(bag.size())]);
    for (Vertex u : s) es.emplace_back(u, v);
    s.push_back(v);
    if (s.size() == bag.size() + 1)
      bags[b] = s;
    else
      bags.push_back(s);
  }
  return es;
}

// Random chordal core with k gadgets: each closes a path of new vertices
// onto an edge of the core (a hole of length 4..15), or onto a single vertex
// when that vertex is isolated in the core.
inline std::vector<Edge> planted_holes(Rng& r, int n, int k) {
  std::vector<int> lens;
  int used = 0;
  for (int i = 0; i < k; ++i) {
    int room = n - used - 2; // keep a core of at least two vertices
    if (room < 2) break;
    int len = r.range(4, std::min(15, room + 2));
    int extra = len - 2; // path vertices when closed onto an edge
    lens.push_back(len);
    used += extra;
  }
  int core = n - used;
  auto es = clique_tree(r, core);
  int next = core;
  for (int len : lens) {
    int extra = len - 2;
    Vertex a = Vertex(r.below(core)), b = a;
    std::vector<Vertex> cand;
    for (auto [u, v] : es)
      if (u == a && v < core) cand.push_back(v);
      else if (v == a && u < core) cand.push_back(u);
    if (!cand.empty()) b = cand[r.below(cand.size())];
    Vertex prev = a;
    for (int i = 0; i < extra; ++i) {
      es.emplace_back(prev, next);
      prev = next++;
    }
    // onto a lone vertex the cycle is one shorter; a triangle is left open
    if (b != a || extra >= 3) es.emplace_back(prev, b);
  }
  return es;
}

// Distance-hereditary growth by pendant / true twin / false twin steps,
// then `noise` random extra edges.
inline std::vector<Edge> pruning(Rng& r, int n, int noise) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int v = 1; v < n; ++v) {
    int u = int(r.below(v));
    int op = int(r.below(3));
    if (op == 0) {
      adj[u][v] = adj[v][u] = true;
    } else {
      for (int w = 0; w < v; ++w)
        if (adj[u][w]) adj[v][w] = adj[w][v] = true;
      if (op == 1) adj[u][v] = adj[v][u] = true;
    }
  }
  for (int i = 0; i < noise && n >= 2; ++i) {
    int a = int(r.below(n)), b = int(r.below(n));
    if (a != b) adj[a][b] = adj[b][a] = true;
  }
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u][v]) es.emplace_back(u, v);
  return es;
}

// G(n, p) with p = avg_degree / (n-1), drawn exactly.
inline std::vector<Edge> erdos_renyi(Rng& r, int n, const Rational& avg_degree) {
  std::vector<Edge> es;
  if (n < 2) return es;
  Rational p = rmin(Rational(1), avg_degree / (n - 1));
  const uint64_t q = 1u << 20;
  Rational scaled = p * q;
  uint64_t pp = mpz_class(scaled.get_num() / scaled.get_den()).get_ui();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (r.chance(pp, q)) es.emplace_back(u, v);
  return es;
}

inline std::vector<Rational> weights(Rng& r, const InstanceSpec& s) {
  std::vector<Rational> w(s.n, Rational(1));
  if (s.weights == "uniform-int")
    for (auto& x : w) x = Rational(r.range(1, s.w_max));
  else if (s.weights == "exponential") // m / 2^e: magnitudes spread over five octaves
    for (auto& x : w) x = ratio(r.range(1, 16), 1L << r.range(0, 4));
  return w;
}

// k distinct pairs (s < t) of non-adjacent vertices in the same component.
inline std::vector<TerminalPair> pairs(Rng& r, const Graph& g, int k) {
  auto lab = component_labels(g);
  std::vector<TerminalPair> cand;
  for (int s = 0; s < g.n(); ++s)
    for (int t = s + 1; t < g.n(); ++t)
      if (lab[s] == lab[t] && !g.adjacent(s, t)) cand.emplace_back(s, t);
  std::vector<TerminalPair> out;
  while (int(out.size()) < k && !cand.empty()) {
    size_t i = r.below(cand.size());
    out.push_back(cand[i]);
    cand.erase(cand.begin() + long(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace gen

inline Instance gen_instance(const InstanceSpec& s) {
  validate_spec(s);
  Rng r(s.seed);
  std::vector<Edge> es;
  if (s.generator == "clique-tree")
    es = gen::clique_tree(r, s.n);
  else if (s.generator == "planted-holes")
    es = gen::planted_holes(r, s.n, s.k);
  else if (s.generator == "pruning")
    es = gen::pruning(r, s.n, s.noise);
  else
    es = gen::erdos_renyi(r, s.n, s.avg_degree);
  // weights and pairs use their own streams so edge draws do not shift them
  Rng rw(Rng::mix(s.seed ^ 0x5745494748545321ull));
  Instance inst{s, Graph(s.n, es, gen::weights(rw, s)), {}};
  if (s.family.rfind("multicut", 0) == 0) {
    Rng rp(Rng::mix(s.seed ^ 0x5041495253212121ull));
    inst.pairs = gen::pairs(rp, inst.graph, s.k);
  }
  return inst;
}

inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["rng"] = Rng::kAlgorithm;
  j["spec"] = spec_to_json(inst.spec);
  j["graph"] = graph_to_json(inst.graph);
  if (inst.spec.family.rfind("multicut", 0) == 0) {
    Json ps = Json::array();
    for (auto [s, t] : inst.pairs) ps.push_back({s, t});
    j["pairs"] = ps;
  }
  return j;
}

} // namespace vdel
