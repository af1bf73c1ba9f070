#pragma once

#include "exact.hpp"
#include "multicut.hpp"
#include "separators.hpp"

#include <set>

namespace vdel {

// Weighted chordal vertex deletion: short-hole preprocessing, recursion on
// clique + separator splits, and the clique+chordal special case solved by
// alpha-halving recursion with multicuts for cycles that cross the split.

struct CvdOptions {
  int short_hole_len = 12;   // L: holes up to this length are hit by LP rounding
  long c = 9;                // special case strips values >= 1/(c log n)
  long d = 96;               // certified factor D in D log^2 n
  int exact_below = 64;      // special case tries exact search below this n
  size_t exact_budget = 20000;
  LpOptions lp{40, 256};
  SeparatorOptions sep;
  bool strict = false;       // throw when the repair safety net fires
};

struct CvdResult {
  VertexSet solution; // local to the input graph
  Certificate cert;
};

// ------------------------------------------------------------------ LPs

// Separation by lightest holes (one candidate per anchor vertex).
inline ObstructionOracle hole_oracle(const Graph& g, int min_len = 4) {
  return [&g, min_len](const FracSol& x) {
    std::vector<VertexSet> out;
    for (auto& h : light_holes(g, x, min_len)) {
      if (!(h.value < 1)) continue;
      VertexSet s = h.hole;
      normalize(s);
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
}

// Rows from an explicit list; the most violated first, at most `cap` per round.
inline ObstructionOracle list_oracle(std::vector<VertexSet> rows, size_t cap = 200) {
  return [rows = std::move(rows), cap](const FracSol& x) {
    std::vector<std::pair<Rational, size_t>> viol;
    for (size_t i = 0; i < rows.size(); ++i) {
      Rational s = frac_sum(x, rows[i]);
      if (s < 1) viol.emplace_back(s, i);
    }
    std::sort(viol.begin(), viol.end());
    if (viol.size() > cap) viol.resize(cap);
    std::vector<VertexSet> out;
    for (auto& [s, i] : viol) out.push_back(rows[i]);
    return out;
  };
}

inline LpResult hole_lp(const Graph& g, const LpOptions& lpo, int min_len = 4) {
  return solve_cover_lp(g, hole_oracle(g, min_len), lpo);
}

// Hitting-set preprocessing shared by the chordal and DH solvers.
struct HitResult {
  VertexSet removed;
  Induced residual;
  Rational lp_value;
  size_t obstructions = 0;
};

inline HitResult hit_by_rounding(const Graph& g, std::vector<VertexSet> rows, int max_size, const LpOptions& lpo) {
  for (auto& r : rows) normalize(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  HitResult res;
  res.obstructions = rows.size();
  if (!rows.empty()) {
    LpOptions o = lpo;
    o.min_rows = std::max(o.min_rows, rows.size() + 1);
    auto lp = solve_cover_lp(g, list_oracle(rows), o);
    res.lp_value = lp.value;
    Rational thr = ratio(1, max_size);
    for (int v = 0; v < g.n(); ++v)
      if (lp.x[v] >= thr) res.removed.push_back(v);
    VDEL_CHECK(g.weight(res.removed) <= max_size * lp.value, "hitting-set rounding exceeds its factor");
    auto dead = g.mask(res.removed);
    for (auto& r : rows) {
      bool hit = false;
      for (Vertex v : r) hit |= dead.test(v);
      VDEL_CHECK(hit, "rounding left a short obstruction");
    }
  }
  res.residual = remove_vertices(g, res.removed);
  return res;
}

inline HitResult hit_short_holes(const Graph& g, int max_len, const LpOptions& lpo = {}) {
  if (max_len < 4) throw InputError("hit_short_holes: max_len must be >= 4");
  auto holes = enumerate_short_holes(g, max_len);
  return hit_by_rounding(g, std::vector<VertexSet>(holes.begin(), holes.end()), max_len, lpo);
}

// ----------------------------------------------------- clique+chordal case

struct CliqueChordalInstance {
  Graph graph;
  VertexSet clique; // C; the rest is the chordal part H
  FracSol x;
  int depth = 1;

  VertexSet chordal_part() const {
    VertexSet all(graph.n());
    std::iota(all.begin(), all.end(), 0);
    return set_minus(all, clique);
  }
};

// Maximum independent set size of a chordal graph: greedy along a PEO.
inline int chordal_alpha(const Graph& h) {
  auto cr = is_chordal_with_witness(h);
  if (!cr.chordal) throw NotChordal(cr.hole);
  std::vector<char> blocked(h.n(), 0);
  int a = 0;
  for (Vertex v : cr.peo) {
    if (blocked[v]) continue;
    ++a;
    for (Vertex u : h.neighbors(v)) blocked[u] = 1;
  }
  return a;
}

inline int compute_alpha(const Graph& g, const VertexSet& clique) {
  VertexSet all(g.n());
  std::iota(all.begin(), all.end(), 0);
  VertexSet h = set_minus(all, clique);
  int best = chordal_alpha(induced_subgraph(g, h).graph);
  for (Vertex v : clique) {
    VertexSet rest;
    for (Vertex u : h)
      if (!g.adjacent(u, v)) rest.push_back(u);
    best = std::max(best, chordal_alpha(induced_subgraph(g, rest).graph) + 1);
  }
  return best;
}

inline int compute_alpha(const CliqueChordalInstance& in) { return compute_alpha(in.graph, in.clique); }

struct BalancingClique {
  VertexSet m;
  VertexSet side1, side2;
  int alpha = 0, alpha1 = 0, alpha2 = 0;
};

// Over all maximal cliques M: components of h - M split into two sides with
// the larger side's independence number as small as possible (exact subset
// sum). Ties: smaller w(M), then lexicographic M.
inline BalancingClique find_balancing_clique(const Graph& h) {
  auto cr = is_chordal_with_witness(h);
  if (!cr.chordal) throw NotChordal(cr.hole);
  BalancingClique best;
  best.alpha = chordal_alpha(h);
  bool have = false;
  Rational best_w;
  for (auto& m : maximal_cliques_chordal(h, cr.peo)) {
    auto rest = remove_vertices(h, m);
    auto comps = connected_components(rest.graph);
    std::vector<int> a(comps.size());
    int total = 0;
    for (size_t j = 0; j < comps.size(); ++j) {
      a[j] = chordal_alpha(induced_subgraph(rest.graph, comps[j]).graph);
      total += a[j];
    }
    std::vector<int> from(total + 1, -2);
    from[0] = -1;
    for (size_t j = 0; j < comps.size(); ++j)
      for (int s = total; s >= a[j]; --s)
        if (from[s] == -2 && from[s - a[j]] != -2) from[s] = int(j);
    int pick = -1;
    for (int s = 0; s <= total; ++s)
      if (from[s] != -2 && (pick < 0 || std::max(s, total - s) < std::max(pick, total - pick))) pick = s;
    std::vector<char> in1(comps.size(), 0);
    for (int s = pick; s > 0; s -= a[from[s]]) in1[from[s]] = 1;
    BalancingClique cand;
    cand.m = m;
    cand.alpha = best.alpha;
    for (size_t j = 0; j < comps.size(); ++j) {
      auto& side = in1[j] ? cand.side1 : cand.side2;
      (in1[j] ? cand.alpha1 : cand.alpha2) += a[j];
      for (Vertex v : comps[j]) side.push_back(rest.to_parent[v]);
    }
    normalize(cand.side1);
    normalize(cand.side2);
    int key = std::max(cand.alpha1, cand.alpha2);
    Rational w = h.weight(m);
    if (!have || key < std::max(best.alpha1, best.alpha2) ||
        (key == std::max(best.alpha1, best.alpha2) && (w < best_w || (w == best_w && m < best.m)))) {
      best = cand;
      best_w = w;
      have = true;
    }
  }
  return best;
}

// Any hole of the alive part, as a vertex set.
inline ObstructionFinder hole_finder(const Graph& g) {
  return [&g](const Bitset& alive) -> std::optional<VertexSet> {
    auto sub = induced_subgraph(g, alive.to_vector());
    auto cr = is_chordal_with_witness(sub.graph);
    if (cr.chordal) return std::nullopt;
    VertexSet s;
    for (Vertex v : cr.hole) s.push_back(sub.to_parent[v]);
    normalize(s);
    return s;
  };
}

inline VertexSet repair_holes(const Graph& g, VertexSet s) {
  normalize(s);
  while (true) {
    auto rest = remove_vertices(g, s);
    auto cr = is_chordal_with_witness(rest.graph);
    if (cr.chordal) return s;
    Vertex pick = -1;
    for (Vertex v : cr.hole) {
      Vertex p = rest.to_parent[v];
      if (pick < 0 || g.weight(p) < g.weight(pick) || (g.weight(p) == g.weight(pick) && p < pick)) pick = p;
    }
    s.push_back(pick);
    normalize(s);
  }
}

namespace detail {

// Depth cap implied by the alpha decay rule, starting from alpha <= n.
inline int alpha_depth_cap(long n, int base_alpha) {
  int d = 1;
  long a = n;
  while (a > base_alpha) {
    a = a >= 24 ? (3 * a) / 4 : (2 * a) / 3 + 2;
    ++d;
  }
  return d;
}

struct CcCtx {
  const CvdOptions& opt;
  Certificate& cert;
  Rational t;       // strip threshold
  Rational growth;  // low-value growth per level
  int base_alpha;
  int depth_cap;
};

// The crossing-cycle terminal pairs of one side.
struct SideCut {
  Induced side;                       // G^_i, local to the level graph
  FracSol x2;                         // 2 x* on it
  std::vector<ShortestPaths> sp;      // from every vertex
  std::vector<int> comp;
};

inline SideCut make_side(const Graph& g, const FracSol& x, const VertexSet& side) {
  SideCut s;
  s.side = induced_subgraph(g, side);
  s.x2 = restrict_to(x, s.side.to_parent);
  for (auto& v : s.x2) v *= 2;
  s.comp = component_labels(s.side.graph);
  for (int a = 0; a < s.side.graph.n(); ++a) s.sp.push_back(dijkstra(s.side.graph, s.x2, {a}));
  return s;
}

inline VertexSet cc_rec(CcCtx& ctx, const Graph& g, const VertexSet& clique, const FracSol& x, int depth);

// Pairs (a, b) of G^_i attached to an eligible (v', u'): a ~ v', b ~ u',
// a and b connected in G^_i. Also the lightest 2x* distance among them.
struct PairBlock {
  std::vector<std::pair<int, int>> pairs; // local to the side graph
  Rational min_dist;
};

inline PairBlock block_for(const Graph& g, const SideCut& s, Vertex vp, Vertex up) {
  PairBlock b;
  const Graph& sg = s.side.graph;
  std::vector<int> na, nb;
  for (int a = 0; a < sg.n(); ++a) {
    if (g.adjacent(s.side.to_parent[a], vp)) na.push_back(a);
    if (g.adjacent(s.side.to_parent[a], up)) nb.push_back(a);
  }
  bool have = false;
  for (int a : na)
    for (int c : nb) {
      if (s.comp[a] != s.comp[c]) continue;
      b.pairs.emplace_back(std::min(a, c), std::max(a, c));
      const Rational& d = s.sp[a].dist[c];
      if (!have || d < b.min_dist) b.min_dist = d;
      have = true;
    }
  return b;
}

// Cut every crossing cycle: choose per (v, u) the side where all of its
// attachment pairs are 2x*-separated, then multicut each side.
inline VertexSet cut_crossing(CcCtx& ctx, const Graph& g, const VertexSet& clique, const VertexSet& m,
                              const FracSol& x, const VertexSet& side1, const VertexSet& side2) {
  SideCut sides[2] = {make_side(g, x, side1), make_side(g, x, side2)};
  int nc = int(clique.size()), nm = int(m.size());
  // blocks[i][vi][ui]
  std::vector<std::vector<PairBlock>> blocks[2];
  for (int i = 0; i < 2; ++i) {
    blocks[i].assign(nc, std::vector<PairBlock>(nm));
    for (int a = 0; a < nc; ++a)
      for (int b = 0; b < nm; ++b)
        if (!g.adjacent(clique[a], m[b])) blocks[i][a][b] = block_for(g, sides[i], clique[a], m[b]);
  }
  std::set<std::pair<int, int>> terms[2];
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nm; ++b) {
      Vertex v = clique[a], u = m[b];
      if (g.adjacent(v, u)) continue;
      bool nonempty[2] = {false, false}, separated[2] = {true, true};
      std::vector<std::pair<int, int>> elig;
      for (int ap = 0; ap < nc; ++ap)
        for (int bp = 0; bp < nm; ++bp) {
          Vertex vp = clique[ap], up = m[bp];
          if (g.adjacent(vp, up) || g.adjacent(v, up) || g.adjacent(u, vp)) continue;
          elig.emplace_back(ap, bp);
          for (int i = 0; i < 2; ++i) {
            auto& bl = blocks[i][ap][bp];
            if (bl.pairs.empty()) continue;
            nonempty[i] = true;
            if (bl.min_dist < 1) separated[i] = false;
          }
        }
      if (!nonempty[0] || !nonempty[1]) continue; // no crossing cycle through (v, u)
      std::vector<int> use;
      if (separated[0])
        use = {0};
      else if (separated[1])
        use = {1};
      else {
        ctx.cert.bump("special_index_fallback");
        use = {0, 1};
      }
      for (int i : use)
        for (auto [ap, bp] : elig)
          for (auto& pr : blocks[i][ap][bp].pairs) terms[i].insert(pr);
    }
  VertexSet out;
  for (int i = 0; i < 2; ++i) {
    if (terms[i].empty()) continue;
    const Graph& sg = sides[i].side.graph;
    VertexSet forced;
    std::vector<TerminalPair> pairs;
    for (auto [a, b] : terms[i]) {
      if (a == b)
        forced.push_back(a);
      else
        pairs.emplace_back(a, b);
    }
    normalize(forced);
    ctx.cert.bump("special_multicut_pairs", long(terms[i].size()));
    if (!forced.empty()) ctx.cert.bump("special_forced_terminals", long(forced.size()));
    // forced terminals leave first; pairs touching them are cut already
    auto rest = remove_vertices(sg, forced);
    std::vector<TerminalPair> rp;
    for (auto [a, b] : pairs) {
      int la = -1, lb = -1;
      for (int k = 0; k < rest.graph.n(); ++k) {
        if (rest.to_parent[k] == a) la = k;
        if (rest.to_parent[k] == b) lb = k;
      }
      if (la >= 0 && lb >= 0) rp.emplace_back(la, lb);
    }
    VertexSet r = forced;
    if (!rp.empty()) {
      auto inst = make_multicut(rest.graph, rp);
      auto mc = solve_multicut_chordal(inst, ctx.opt.lp);
      if (forced.empty() && ctx.cert.count("special_index_fallback") == 0)
        VDEL_CHECK(mc.cert.lp_bound <= frac_weight(sg, sides[i].x2), "2x* does not bound the multicut LP");
      for (Vertex v : mc.solution) r.push_back(rest.to_parent[v]);
    }
    normalize(r);
    ctx.cert.add_phase("special_multicut", sg.weight(r));
    out = set_union(out, lift(sides[i].side.to_parent, r));
  }
  return out;
}

inline VertexSet cc_rec(CcCtx& ctx, const Graph& g, const VertexSet& clique, const FracSol& x, int depth) {
  auto& cert = ctx.cert;
  cert.bump("special_calls");
  if (depth > cert.count("special_max_depth")) cert.counters["special_max_depth"] = depth;
  VDEL_CHECK(depth <= ctx.depth_cap, "special-case recursion deeper than its cap");
  VDEL_CHECK(g.is_clique(clique), "clique part is not a clique");
  Rational bound = ctx.t;
  for (int i = 0; i < depth; ++i) bound *= ctx.growth;
  for (Vertex v : clique) VDEL_CHECK(sgn(x[v]) == 0, "zero-clique invariant violated");
  for (int v = 0; v < g.n(); ++v) VDEL_CHECK(x[v] < bound, "low-value invariant violated");
  cert.bump("invariant_checks");
  if (is_chordal(g)) return {};
  VertexSet hset;
  {
    VertexSet all(g.n());
    std::iota(all.begin(), all.end(), 0);
    hset = set_minus(all, clique);
  }
  auto hh = induced_subgraph(g, hset);
  VDEL_CHECK(is_chordal(hh.graph), "chordal part has a hole");
  int a = compute_alpha(g, clique);
  if (a <= ctx.base_alpha) {
    // every hole has at most 2a+1 vertices, so some vertex carries 1/(2a+1)
    cert.bump("special_base");
    VertexSet s;
    Rational thr = ratio(1, 2 * a + 1);
    for (int v = 0; v < g.n(); ++v)
      if (x[v] >= thr) s.push_back(v);
    VDEL_CHECK(is_chordal_without(g, s), "small-alpha rounding left a hole");
    cert.add_phase("special_base", g.weight(s));
    return s;
  }
  cert.bump("special_splits");
  auto bc = find_balancing_clique(hh.graph);
  VDEL_CHECK(3 * std::max(bc.alpha1, bc.alpha2) <= 2 * bc.alpha, "balancing clique sides exceed 2/3 alpha");
  VertexSet m = lift(hh.to_parent, bc.m);
  VertexSet s1 = lift(hh.to_parent, bc.side1), s2 = lift(hh.to_parent, bc.side2);
  FracSol xs = zero_out_clique(g, x, m);
  auto st = strip_high(g, xs, ctx.t);
  cert.add_phase("special_strip", g.weight(st.removed));
  const Graph& g2 = st.residual.graph;
  const FracSol& x2 = st.x;
  VertexSet c2 = lower(g2, g, clique), m2 = lower(g2, g, m);
  VDEL_CHECK(c2.size() == clique.size() && m2.size() == m.size(), "strip removed a zeroed vertex");
  VertexSet sd[2] = {lower(g2, g, s1), lower(g2, g, s2)};
  VertexSet core = set_union(c2, m2);
  Induced gi[2];
  FracSol xi[2];
  for (int i = 0; i < 2; ++i) {
    gi[i] = induced_subgraph(g2, set_union(sd[i], core));
    xi[i] = restrict_to(x2, gi[i].to_parent);
  }
  VDEL_CHECK(frac_weight(gi[0].graph, xi[0]) + frac_weight(gi[1].graph, xi[1]) == frac_weight(g2, x2),
             "additivity w(x1*) + w(x2*) = w(x*) violated");
  VertexSet sol = st.removed;
  VertexSet removed2;
  for (int i = 0; i < 2; ++i) {
    VertexSet ci = lower(gi[i].graph, g2, c2);
    int ai = compute_alpha(gi[i].graph, ci);
    VDEL_CHECK(3 * ai <= 2 * a + 6, "alpha decay 2/3 alpha + 2 violated");
    if (a >= 24) VDEL_CHECK(4 * ai <= 3 * a, "alpha decay 3/4 violated");
    VDEL_CHECK(ai < a, "alpha did not decrease");
    cert.bump("alpha_checks");
    auto si = cc_rec(ctx, gi[i].graph, ci, xi[i], depth + 1);
    removed2 = set_union(removed2, lift(gi[i].to_parent, si));
  }
  removed2 = set_union(removed2, cut_crossing(ctx, g2, c2, m2, x2, sd[0], sd[1]));
  sol = set_union(sol, lift(st.residual.to_parent, removed2));
  if (!is_chordal_without(g, sol)) cert.bump("special_level_not_chordal");
  return sol;
}

} // namespace detail

inline CvdResult solve_cvd_clique_chordal(const Graph& g, const VertexSet& clique_in, const CvdOptions& opt = {},
                                          const LpResult* given_lp = nullptr) {
  VertexSet clique = clique_in;
  normalize(clique);
  if (!g.is_clique(clique)) throw InputError("clique+chordal: C is not a clique");
  if (!is_chordal(remove_vertices(g, clique).graph)) throw InputError("clique+chordal: G - C is not chordal");
  CvdResult res;
  Certificate& cert = res.cert;
  cert.problem = "cvd-clique-chordal";
  long nlog = std::max(2, g.n());
  Rational logn = log2_bounds(nlog).first;
  Rational t = 1 / (opt.c * logn);
  int base_alpha = std::max(6, opt.short_hole_len / 2);
  cert.constants["c"] = std::to_string(opt.c);
  cert.constants["strip_threshold"] = to_string(t);
  cert.constants["base_alpha"] = std::to_string(base_alpha);
  cert.factor_formula = "empirical (c*log n*lp)";
  VertexSet sol;
  if (is_chordal(g)) {
    // nothing to do
  } else {
    bool done = false;
    if (g.n() < opt.exact_below) {
      try {
        BranchOptions bo;
        bo.node_budget = opt.exact_budget;
        auto ex = exact_by_branching(g, hole_finder(g), bo);
        sol = ex.solution;
        cert.exact_opt = ex.weight;
        cert.bump("special_exact");
        cert.add_phase("special_exact", ex.weight);
        done = true;
      } catch (const ExactBudgetExceeded&) {
        cert.bump("special_exact_budget");
      }
    }
    if (!done) {
      LpResult lp = given_lp ? *given_lp : hole_lp(g, opt.lp);
      cert.lp_bound = lp.value;
      auto st = strip_high(g, lp.x, t);
      cert.add_phase("special_strip", g.weight(st.removed));
      const Graph& g1 = st.residual.graph;
      VertexSet c1 = detail::lower(g1, g, clique);
      FracSol x1 = zero_out_clique(g1, st.x, c1);
      Rational growth = (opt.c * logn + 9) / (opt.c * logn);
      detail::CcCtx ctx{opt, cert, t, growth, base_alpha, detail::alpha_depth_cap(g.n(), base_alpha)};
      cert.constants["depth_cap"] = std::to_string(ctx.depth_cap);
      auto s = detail::cc_rec(ctx, g1, c1, x1, 1);
      sol = set_union(st.removed, detail::lift(st.residual.to_parent, s));
    }
  }
  normalize(sol);
  res.solution = sol;
  cert.solution = g.to_ids(sol);
  cert.weight = g.weight(sol);
  cert.feasible = is_chordal_without(g, sol);
  cert.claimed_bound = cert.weight;
  cert.bound_ok = true;
  return res;
}

inline CvdResult solve_cvd_clique_chordal(const CliqueChordalInstance& in, const CvdOptions& opt = {}) {
  return solve_cvd_clique_chordal(in.graph, in.clique, opt);
}

namespace detail {

// x is the retained fractional solution, local to g.
inline VertexSet cvd_gen(const Graph& g, const FracSol& x, const CvdOptions& opt, Certificate& cert, int depth) {
  cert.bump("gen_calls");
  if (depth > cert.count("gen_max_depth")) cert.counters["gen_max_depth"] = depth;
  if (is_chordal(g)) return {};
  auto special = [&](const Graph& h, const FracSol& xh, const VertexSet& c) {
    LpResult lp;
    lp.x = xh;
    lp.value = frac_weight(h, xh);
    auto r = solve_cvd_clique_chordal(h, c, opt, &lp);
    for (auto& [k, v] : r.cert.counters)
      if (k == "special_max_depth")
        cert.counters[k] = std::max(cert.count(k), v);
      else
        cert.counters[k] += v;
    for (auto& [k, v] : r.cert.phases) cert.phases[k] += v;
    cert.constants.insert(r.cert.constants.begin(), r.cert.constants.end());
    return r.solution;
  };
  for (auto& m : enumerate_maximal_cliques(g))
    if (is_chordal(remove_vertices(g, m).graph)) {
      cert.bump("gen_clique_chordal");
      return special(g, x, m);
    }
  auto sep = clique_plus_separator(g, opt.sep);
  cert.bump("gen_splits");
  cert.add_phase("separators", g.weight(sep.s));
  auto side = [&](const VertexSet& part) {
    auto sub = induced_subgraph(g, part);
    return lift(sub.to_parent, cvd_gen(sub.graph, restrict_to(x, sub.to_parent), opt, cert, depth + 1));
  };
  VertexSet t1 = side(sep.a1), t2 = side(sep.a2);
  VertexSet keep = set_minus(set_union(set_union(sep.a1, sep.a2), sep.m), set_union(t1, t2));
  auto j = induced_subgraph(g, keep);
  VertexSet c = j.graph.from_ids(g.to_ids(sep.m));
  VertexSet sh = lift(j.to_parent, special(j.graph, restrict_to(x, j.to_parent), c));
  return set_union(set_union(sep.s, set_union(t1, t2)), sh);
}

} // namespace detail

inline CvdResult solve_cvd(const Graph& g, const CvdOptions& opt = {}) {
  CvdResult res;
  Certificate& cert = res.cert;
  cert.problem = "cvd";
  auto hit = hit_short_holes(g, opt.short_hole_len, opt.lp);
  cert.hitting_lp = hit.lp_value;
  cert.add_phase("hitting_set", g.weight(hit.removed));
  cert.counters["short_holes"] = long(hit.obstructions);
  const Graph& gp = hit.residual.graph;
  LpResult lp;
  lp.x.assign(gp.n(), Rational(0));
  if (!is_chordal(gp)) lp = hole_lp(gp, opt.lp);
  Rational main_lp = lp.value;
  cert.lp_bound = main_lp;
  VertexSet t = detail::cvd_gen(gp, lp.x, opt, cert, 1);
  VertexSet sol = set_union(hit.removed, detail::lift(hit.residual.to_parent, t));
  cert.counters["repairs"] = 0;
  if (!is_chordal_without(g, sol)) {
    VertexSet fixed = repair_holes(g, sol);
    cert.bump("repairs", long(fixed.size() - sol.size()));
    cert.add_phase("repair", g.weight(fixed) - g.weight(sol));
    if (opt.strict) throw RepairUsed("cvd: repair safety net fired");
    sol = fixed;
  }
  normalize(sol);
  res.solution = sol;
  cert.solution = g.to_ids(sol);
  cert.weight = g.weight(sol);
  cert.feasible = is_chordal_without(g, sol);
  Rational logn = log2_bounds(std::max(2, g.n())).second;
  cert.claimed_bound = opt.d * logn * logn * main_lp + opt.short_hole_len * hit.lp_value;
  cert.factor_formula = "D*log2(n)^2*lp + L*hitting_lp";
  cert.constants["D"] = std::to_string(opt.d);
  cert.constants["L"] = std::to_string(opt.short_hole_len);
  cert.bound_ok = cert.weight <= cert.claimed_bound;
  return res;
}

} // namespace vdel
