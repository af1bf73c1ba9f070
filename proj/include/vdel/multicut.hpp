#pragma once

#include "certificate.hpp"
#include "chordal.hpp"
#include "lp.hpp"

#include <cmath>

namespace vdel {

using TerminalPair = std::pair<Vertex, Vertex>;

struct MulticutInstance {
  Graph graph;
  std::vector<TerminalPair> pairs; // s < t, sorted, unique
};

inline MulticutInstance make_multicut(Graph g, std::vector<TerminalPair> pairs) {
  for (auto& [s, t] : pairs) {
    if (s < 0 || t < 0 || s >= g.n() || t >= g.n()) throw InputError("multicut: terminal not in graph");
    if (s == t) throw InputError("multicut: pair with s == t");
    if (s > t) std::swap(s, t);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return {std::move(g), std::move(pairs)};
}

inline MulticutInstance multicut_from_json(const Json& j) {
  if (!j.contains("graph")) throw InputError("multicut json: missing \"graph\"");
  Graph g = graph_from_json(j["graph"]);
  std::vector<TerminalPair> ps;
  if (j.contains("pairs")) {
    if (!j["pairs"].is_array()) throw InputError("multicut json: pairs must be an array");
    for (auto& p : j["pairs"]) {
      if (!p.is_array() || p.size() != 2) throw InputError("multicut json: pair must be [s,t]");
      ps.emplace_back(json_int(p[0], "pair"), json_int(p[1], "pair"));
    }
  }
  return make_multicut(std::move(g), std::move(ps));
}

inline Json multicut_to_json(const MulticutInstance& inst) {
  Json j;
  j["graph"] = graph_to_json(inst.graph);
  Json ps = Json::array();
  for (auto [s, t] : inst.pairs) ps.push_back({s, t});
  j["pairs"] = ps;
  return j;
}

// True iff no pair is connected in G - s (a deleted terminal cuts its pairs).
inline bool verify_multicut(const Graph& g, const std::vector<TerminalPair>& pairs, const VertexSet& s) {
  Bitset alive(g.n());
  for (int v = 0; v < g.n(); ++v) alive.set(v);
  for (Vertex v : s) alive.reset(v);
  auto lab = component_labels(g, &alive);
  for (auto [a, b] : pairs)
    if (lab[a] >= 0 && lab[a] == lab[b]) return false;
  return true;
}

inline bool verify_multicut(const MulticutInstance& inst, const VertexSet& s) {
  return verify_multicut(inst.graph, inst.pairs, s);
}

// Separation: a lightest s-t path of x-weight < 1 per violated pair.
inline ObstructionOracle multicut_oracle(const Graph& g, const std::vector<TerminalPair>& pairs) {
  return [&g, pairs](const FracSol& x) {
    std::vector<VertexSet> out;
    size_t i = 0;
    while (i < pairs.size()) {
      Vertex s = pairs[i].first;
      auto sp = dijkstra(g, x, {s});
      for (; i < pairs.size() && pairs[i].first == s; ++i) {
        Vertex t = pairs[i].second;
        if (sp.reached[t] && sp.dist[t] < 1) {
          auto p = sp.path_to(t);
          normalize(p);
          out.push_back(p);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
}

inline LpResult multicut_lp(const MulticutInstance& inst, const LpOptions& opt = {}) {
  return solve_cover_lp(inst.graph, multicut_oracle(inst.graph, inst.pairs), opt);
}

struct MulticutResult {
  VertexSet solution; // local to inst.graph
  Certificate cert;
};

struct BinTrace {
  int component_root = -1; // local vertex of the input graph
  int chosen = 0;
  Rational chosen_weight;
  Rational comp_x_weight;
};

// Bin membership: exists j >= 0 with d - x < (i/N + 2j)/c <= d.
inline bool in_bin(const Rational& d, const Rational& x, long i, long big_n, long c) {
  Rational base = ratio(i, big_n);
  Rational top = c * d - base; // need 2j <= top
  if (sgn(top) < 0) return false;
  mpz_class jmax;
  Rational half = top / 2;
  mpz_fdiv_q(jmax.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
  return base + 2 * Rational(jmax) > c * (d - x);
}

struct ChordalMulticutDetail {
  Rational lp_weight, nice_weight;
  VertexSet stripped;
  std::vector<BinTrace> bins;
};

// Constant-factor rounding on chordal graphs: LP -> nicify -> strip at 1/c
// -> per component pick the lightest distance bin from a clique-forest root.
inline MulticutResult solve_multicut_chordal(const MulticutInstance& inst, const LpOptions& lpo = {},
                                             ChordalMulticutDetail* detail = nullptr,
                                             const LpResult* given_lp = nullptr) {
  const Graph& g = inst.graph;
  const long c = 8;
  auto cr = is_chordal_with_witness(g);
  if (!cr.chordal) throw NotChordal(cr.hole);
  MulticutResult res;
  res.cert.problem = "multicut-chordal";
  res.cert.factor_formula = "32*lp";
  res.cert.constants["c"] = "8";
  if (inst.pairs.empty()) {
    res.cert.feasible = res.cert.bound_ok = true;
    return res;
  }
  LpResult lp = given_lp ? *given_lp : multicut_lp(inst, lpo);
  long big_n = std::max(1, g.n());
  FracSol xn = nicify(lp.x, big_n);
  VDEL_CHECK(is_nice(xn, big_n), "nicify produced a non-multiple of 1/n");
  VDEL_CHECK(frac_weight(g, xn) <= 4 * lp.value, "nicify weight bound");
  VDEL_CHECK(multicut_oracle(g, inst.pairs)(xn).empty(), "nicify broke feasibility");
  auto st = strip_high(g, xn, ratio(1, c));
  const Graph& h = st.residual.graph;
  VertexSet sol = st.removed;
  for (auto& comp : connected_components(h)) {
    auto sub = induced_subgraph(h, comp);
    const Graph& cg = sub.graph;
    FracSol cx = restrict_to(st.x, sub.to_parent);
    auto forest = build_clique_forest(cg);
    int root_bag = -1;
    for (size_t b = 0; b < forest.bags.size() && root_bag < 0; ++b)
      if (std::binary_search(forest.bags[b].begin(), forest.bags[b].end(), 0)) root_bag = int(b);
    VDEL_CHECK(root_bag >= 0, "root vertex not in any bag");
    Vertex r = forest.bags[root_bag].front();
    auto sp = dijkstra(cg, cx, {r});
    BinTrace tr;
    tr.component_root = sub.to_parent[r];
    tr.comp_x_weight = frac_weight(cg, cx);
    VertexSet best;
    Rational best_w;
    for (long i = 0; i <= big_n; ++i) {
      VertexSet bin;
      Rational bw = 0;
      for (int v = 0; v < cg.n(); ++v)
        if (in_bin(sp.dist[v], cx[v], i, big_n, c)) {
          bin.push_back(v);
          bw += cg.weight(v);
        }
      if (i == 0 || bw < best_w) {
        best_w = bw;
        best = bin;
        tr.chosen = int(i);
      }
    }
    tr.chosen_weight = best_w;
    VDEL_CHECK(best_w <= c * tr.comp_x_weight, "no bin within c * w(x)");
    for (Vertex v : best) sol.push_back(st.residual.to_parent[sub.to_parent[v]]);
    if (detail) detail->bins.push_back(tr);
  }
  normalize(sol);
  res.solution = sol;
  res.cert.solution = g.to_ids(sol);
  res.cert.weight = g.weight(sol);
  res.cert.lp_bound = lp.value;
  res.cert.claimed_bound = 32 * lp.value;
  res.cert.feasible = verify_multicut(inst, sol);
  res.cert.bound_ok = res.cert.weight <= res.cert.claimed_bound;
  res.cert.add_phase("stripped", g.weight(st.removed));
  res.cert.add_phase("bins", res.cert.weight - g.weight(st.removed));
  VDEL_CHECK(res.cert.feasible, "chordal multicut rounding left a pair connected");
  VDEL_CHECK(res.cert.bound_ok, "chordal multicut weight exceeds 32 * LP");
  if (detail) {
    detail->lp_weight = lp.value;
    detail->nice_weight = frac_weight(g, xn);
    detail->stripped = st.removed;
  }
  return res;
}

// Region growing on general graphs. Each round grows a ball around the
// first still-connected pair's source, picks the radius in [0, 1/2)
// minimizing boundary weight / ball volume, deletes the boundary and the
// ball. Analysis constant: w(S) <= 4 ln(k+1) w(y).
inline MulticutResult solve_multicut_general(const MulticutInstance& inst, const LpOptions& lpo = {},
                                             const LpResult* given_lp = nullptr) {
  const Graph& g = inst.graph;
  MulticutResult res;
  res.cert.problem = "multicut-general";
  res.cert.factor_formula = "4*ln(k+1)*lp";
  res.cert.constants["k"] = std::to_string(inst.pairs.size());
  if (inst.pairs.empty()) {
    res.cert.feasible = res.cert.bound_ok = true;
    return res;
  }
  LpResult lp = given_lp ? *given_lp : multicut_lp(inst, lpo);
  const FracSol& y = lp.x;
  Rational total = frac_weight(g, y);
  Rational seed = total / long(inst.pairs.size());
  Bitset alive(g.n());
  for (int v = 0; v < g.n(); ++v) alive.set(v);
  VertexSet sol;
  const Rational half = ratio(1, 2);
  while (true) {
    auto lab = component_labels(g, &alive);
    int pick = -1;
    for (size_t i = 0; i < inst.pairs.size() && pick < 0; ++i) {
      auto [s, t] = inst.pairs[i];
      if (lab[s] >= 0 && lab[s] == lab[t]) pick = int(i);
    }
    if (pick < 0) break;
    Vertex s = inst.pairs[pick].first;
    auto sp = dijkstra(g, y, {s}, &alive);
    VDEL_CHECK(sp.dist[inst.pairs[pick].second] >= 1, "LP path constraint violated");
    std::vector<Rational> bps{Rational(0), half};
    std::vector<Vertex> ball;
    alive.for_each([&](int v) {
      if (!sp.reached[v]) return;
      ball.push_back(v);
      Rational lo = sp.dist[v] - y[v];
      if (lo < half) bps.push_back(lo);
      if (sp.dist[v] < half) bps.push_back(sp.dist[v]);
    });
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    int best_k = -1;
    Rational best_ratio, best_cost;
    for (size_t k = 0; k + 1 < bps.size(); ++k) {
      const Rational& r = bps[k];
      const Rational& right = bps[k + 1];
      Rational cost = 0, vol = seed;
      for (Vertex v : ball) {
        Rational lo = sp.dist[v] - y[v];
        if (sp.dist[v] <= r)
          vol += g.weight(v) * y[v];
        else if (lo <= r) {
          cost += g.weight(v);
          vol += g.weight(v) * (right - lo);
        }
      }
      if (sgn(vol) == 0) continue;
      Rational q = cost / vol;
      if (best_k < 0 || q < best_ratio) {
        best_k = int(k);
        best_ratio = q;
        best_cost = cost;
      }
    }
    VDEL_CHECK(best_k >= 0, "region growing found no radius");
    const Rational& r = bps[best_k];
    for (Vertex v : ball) {
      if (sp.dist[v] - y[v] > r) continue;
      if (sp.dist[v] > r) sol.push_back(v);
      alive.reset(v); // ball interior and boundary leave the graph
    }
    res.cert.bump("balls");
  }
  normalize(sol);
  res.solution = sol;
  res.cert.solution = g.to_ids(sol);
  res.cert.weight = g.weight(sol);
  res.cert.lp_bound = lp.value;
  double factor = 4.0 * std::log(double(inst.pairs.size()) + 1.0);
  res.cert.claimed_bound = total * Rational(factor);
  res.cert.feasible = verify_multicut(inst, sol);
  res.cert.bound_ok = to_double(res.cert.weight) <= factor * to_double(total) * (1 + 1e-9) + 1e-12;
  VDEL_CHECK(res.cert.feasible, "region growing left a pair connected");
  return res;
}

} // namespace vdel
