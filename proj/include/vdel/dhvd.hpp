#pragma once

#include "cvd.hpp"
#include "dh.hpp"

namespace vdel {

// Weighted distance-hereditary vertex deletion: small-obstruction hitting,
// recursion on biclique + separator splits, and the biclique+DH special
// case solved by halving the LP support along rank-width-1 cuts.

struct DhvdOptions {
  int obstruction_size = 8; // DH-obstructions up to this size are hit by rounding
  long d = 96;              // certified factor D in D log^3 n
  LpOptions lp{40, 256};
  SeparatorOptions sep;
  bool strict = false;
};

using DhvdResult = CvdResult;

inline HitResult hit_small_obstructions(const Graph& g, int max_size, const LpOptions& lpo = {}) {
  if (max_size < 5) throw InputError("hit_small_obstructions: max_size must be >= 5");
  std::vector<VertexSet> rows;
  for (auto& o : enumerate_small_obstructions(g, max_size)) rows.push_back(o.vertex_set());
  return hit_by_rounding(g, std::move(rows), max_size, lpo);
}

// LP over all DH-obstructions: houses, gems and dominoes from a list, holes
// of length >= 5 by separation.
inline LpResult dh_lp(const Graph& g, const LpOptions& lpo) {
  std::vector<VertexSet> small;
  for (auto& o : enumerate_small_obstructions(g, 6))
    if (o.kind != ObstructionKind::long_hole) small.push_back(o.vertex_set());
  auto holes = hole_oracle(g, 5);
  auto listed = list_oracle(small);
  LpOptions o = lpo;
  o.min_rows = std::max(o.min_rows, small.size() + 1);
  return solve_cover_lp(g, [&](const FracSol& x) {
    auto rows = listed(x);
    auto more = holes(x);
    rows.insert(rows.end(), more.begin(), more.end());
    return rows;
  }, o);
}

struct BicliqueDHInstance {
  Graph graph;
  VertexSet a, b; // the biclique C = (a, b); the rest is the DH part H
  FracSol x;
  int depth = 1;
};

// LP support inside the DH part.
inline int alpha_dh(const Graph& g, const VertexSet& biclique, const FracSol& x) {
  auto in = g.mask(biclique);
  int a = 0;
  for (int v = 0; v < g.n(); ++v) a += !in.test(v) && sgn(x[v]) > 0;
  return a;
}

inline int alpha_dh(const BicliqueDHInstance& in) { return alpha_dh(in.graph, set_union(in.a, in.b), in.x); }

inline VertexSet repair_dh(const Graph& g, VertexSet s) {
  normalize(s);
  while (true) {
    auto rest = remove_vertices(g, s);
    auto r = is_distance_hereditary_with_witness(rest.graph);
    if (r.dh) return s;
    Vertex pick = -1;
    for (Vertex v : r.obstruction->vertices) {
      Vertex p = rest.to_parent[v];
      if (pick < 0 || g.weight(p) < g.weight(pick) || (g.weight(p) == g.weight(pick) && p < pick)) pick = p;
    }
    s.push_back(pick);
    normalize(s);
  }
}

inline bool is_dh_without(const Graph& g, const VertexSet& s) {
  return is_distance_hereditary(remove_vertices(g, s).graph);
}

namespace detail {

struct DhCtx {
  const DhvdOptions& opt;
  Certificate& cert;
  long n_eff;
  Rational t;     // strip threshold
  Rational scale; // biclique zero-out scale
  int depth_cap;
};

inline int support_depth_cap(long n) {
  int d = 1;
  for (long w = n; w > 1; w = std::min(w - 1, (2 * w + 2) / 3)) ++d;
  return d;
}

struct PortPairs {
  std::vector<std::pair<int, int>> closed, open; // local to the side graph
};

// Pairs (a, b) of the side with a ~ c, b ~ m, connected in the side; split
// by whether the 2x* distance between them reaches 1.
inline PortPairs port_pairs(const Graph& g, const SideCut& s, Vertex c, Vertex m) {
  PortPairs out;
  const Graph& sg = s.side.graph;
  std::vector<int> na, nb;
  for (int a = 0; a < sg.n(); ++a) {
    if (g.adjacent(s.side.to_parent[a], c)) na.push_back(a);
    if (g.adjacent(s.side.to_parent[a], m)) nb.push_back(a);
  }
  for (int a : na)
    for (int b : nb) {
      if (s.comp[a] != s.comp[b]) continue;
      auto pr = std::make_pair(std::min(a, b), std::max(a, b));
      (s.sp[a].dist[b] >= 1 ? out.closed : out.open).push_back(pr);
    }
  return out;
}

// Equal, adjacent, or with a common neighbour inside `within`.
inline bool close_in(const Graph& g, Vertex u, Vertex v, const VertexSet& within) {
  if (u == v || g.adjacent(u, v)) return true;
  for (Vertex w : within)
    if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w)) return true;
  return false;
}

// A crossing hole runs C-block, path in side 1, M-block, path in side 2.
// Paths whose end pair is 2x*-separated go to the multicut; when both paths
// of a possible frame are open, the side-1 one is cut as well.
inline VertexSet dh_cut_crossing(DhCtx& ctx, const Graph& g, const VertexSet& k, const VertexSet& m,
                                 const FracSol& x, const VertexSet& hat1, const VertexSet& hat2) {
  SideCut sides[2] = {make_side(g, x, hat1), make_side(g, x, hat2)};
  struct Port {
    Vertex c, m;
    PortPairs pp[2];
  };
  std::vector<Port> ports;
  for (Vertex c : k)
    for (Vertex u : m) {
      if (g.adjacent(c, u)) continue;
      Port p{c, u, {port_pairs(g, sides[0], c, u), port_pairs(g, sides[1], c, u)}};
      ports.push_back(std::move(p));
    }
  std::set<std::pair<int, int>> terms[2];
  for (auto& p : ports)
    for (int i = 0; i < 2; ++i) terms[i].insert(p.pp[i].closed.begin(), p.pp[i].closed.end());
  for (auto& p1 : ports) {
    if (p1.pp[0].open.empty()) continue;
    for (auto& p2 : ports) {
      if (p2.pp[1].open.empty()) continue;
      if (g.adjacent(p1.c, p2.m) || g.adjacent(p2.c, p1.m)) continue;
      if (!close_in(g, p1.c, p2.c, k) || !close_in(g, p1.m, p2.m, m)) continue;
      size_t before = terms[0].size();
      terms[0].insert(p1.pp[0].open.begin(), p1.pp[0].open.end());
      if (terms[0].size() > before) ctx.cert.bump("dh_frame_fallback");
      break;
    }
  }
  VertexSet out;
  for (int i = 0; i < 2; ++i) {
    if (terms[i].empty()) continue;
    const Graph& sg = sides[i].side.graph;
    VertexSet forced;
    for (auto [a, b] : terms[i])
      if (a == b) forced.push_back(a);
    normalize(forced);
    auto rest = remove_vertices(sg, forced);
    std::vector<int> loc(sg.n(), -1);
    for (int v = 0; v < rest.graph.n(); ++v) loc[rest.to_parent[v]] = v;
    std::vector<TerminalPair> rp;
    for (auto [a, b] : terms[i])
      if (a != b && loc[a] >= 0 && loc[b] >= 0) rp.emplace_back(loc[a], loc[b]);
    ctx.cert.bump("special_multicut_pairs", long(terms[i].size()));
    if (!forced.empty()) ctx.cert.bump("special_forced_terminals", long(forced.size()));
    VertexSet r = forced;
    if (!rp.empty()) {
      auto mc = solve_multicut_general(make_multicut(rest.graph, rp), ctx.opt.lp);
      for (Vertex v : mc.solution) r.push_back(rest.to_parent[v]);
    }
    normalize(r);
    ctx.cert.add_phase("special_multicut", sg.weight(r));
    out = set_union(out, lift(sides[i].side.to_parent, r));
  }
  return out;
}

inline VertexSet dh_rec(DhCtx& ctx, const Graph& g, const VertexSet& ka, const VertexSet& kb, const FracSol& x,
                        int depth) {
  auto& cert = ctx.cert;
  cert.bump("special_calls");
  if (depth > cert.count("special_max_depth")) cert.counters["special_max_depth"] = depth;
  VDEL_CHECK(depth <= ctx.depth_cap, "special-case recursion deeper than its cap");
  VertexSet k = set_union(ka, kb);
  for (Vertex v : k) VDEL_CHECK(sgn(x[v]) == 0, "zero-biclique invariant violated");
  for (int v = 0; v < g.n(); ++v) VDEL_CHECK(x[v] < ctx.t * ctx.scale, "low-value invariant violated");
  cert.bump("invariant_checks");
  if (is_distance_hereditary(g)) return {};
  int alpha = alpha_dh(g, k, x);
  // a surviving obstruction is a long hole: it needs 1/max x support vertices
  VDEL_CHECK(alpha * ctx.t * ctx.scale >= 1, "non-DH instance with too little LP support");
  auto hh = remove_vertices(g, k);
  auto dec = rankwidth1_decomposition(hh.graph);
  std::vector<long> lw(hh.graph.n());
  for (int v = 0; v < hh.graph.n(); ++v) lw[v] = sgn(x[hh.to_parent[v]]) > 0;
  auto cut = balancing_rw1_cut(hh.graph, dec, lw);
  cert.bump("special_splits");
  VertexSet side[2] = {lift(hh.to_parent, cut.side1), lift(hh.to_parent, cut.side2)};
  VertexSet m1 = lift(hh.to_parent, cut.m1), m2 = lift(hh.to_parent, cut.m2);
  VertexSet m = set_union(m1, m2);
  if (!m.empty()) VDEL_CHECK(is_cograph(g, m), "cut biclique induces a P4");
  FracSol xs = m.empty() ? x : zero_out(x, m, ctx.scale);
  if (!m.empty()) VDEL_CHECK(is_biclique(g, m1, m2), "rank-1 cut is not a biclique");
  auto st = strip_high(g, xs, ctx.t);
  cert.add_phase("special_strip", g.weight(st.removed));
  const Graph& g2 = st.residual.graph;
  const FracSol& x2 = st.x;
  VertexSet a2 = lower(g2, g, ka), b2 = lower(g2, g, kb), mm = lower(g2, g, m);
  VDEL_CHECK(a2.size() == ka.size() && b2.size() == kb.size() && mm.size() == m.size(),
             "strip removed a zeroed vertex");
  VertexSet sd[2] = {lower(g2, g, side[0]), lower(g2, g, side[1])};
  VertexSet core = set_union(set_union(a2, b2), mm);
  Induced gi[2];
  FracSol xi[2];
  for (int i = 0; i < 2; ++i) {
    gi[i] = induced_subgraph(g2, set_union(sd[i], core));
    xi[i] = restrict_to(x2, gi[i].to_parent);
  }
  VDEL_CHECK(frac_weight(gi[0].graph, xi[0]) + frac_weight(gi[1].graph, xi[1]) == frac_weight(g2, x2),
             "additivity w(x1*) + w(x2*) = w(x*) violated");
  VertexSet removed2;
  for (int i = 0; i < 2; ++i) {
    VertexSet ai = lower(gi[i].graph, g2, a2), bi = lower(gi[i].graph, g2, b2);
    int alpha_i = alpha_dh(gi[i].graph, set_union(ai, bi), xi[i]);
    VDEL_CHECK(3 * alpha_i <= 2 * alpha + 2 && alpha_i < alpha, "support did not shrink along the rank-1 cut");
    cert.bump("alpha_checks");
    auto si = dh_rec(ctx, gi[i].graph, ai, bi, xi[i], depth + 1);
    removed2 = set_union(removed2, lift(gi[i].to_parent, si));
  }
  VertexSet hat[2] = {set_minus(sd[0], mm), set_minus(sd[1], mm)};
  removed2 = set_union(removed2, dh_cut_crossing(ctx, g2, set_union(a2, b2), mm, x2, hat[0], hat[1]));
  VertexSet sol = set_union(st.removed, lift(st.residual.to_parent, removed2));
  if (!is_dh_without(g, sol)) cert.bump("special_level_not_dh");
  return sol;
}

} // namespace detail

inline DhvdResult solve_dhvd_biclique_dh(const Graph& g, const VertexSet& a_in, const VertexSet& b_in,
                                         const DhvdOptions& opt = {}, const LpResult* given_lp = nullptr) {
  VertexSet a = a_in, b = b_in;
  normalize(a);
  normalize(b);
  if (!is_biclique(g, a, b)) throw InputError("biclique+DH: C is not a biclique");
  VertexSet k = set_union(a, b);
  if (!is_distance_hereditary(remove_vertices(g, k).graph))
    throw InputError("biclique+DH: G - C is not distance-hereditary");
  DhvdResult res;
  Certificate& cert = res.cert;
  cert.problem = "dhvd-biclique-dh";
  long n_eff = std::max(16, g.n());
  Rational logn = log2_bounds(n_eff).first;
  Rational t = rmin(1 / logn, Rational(4) / (3 * (logn + 4)));
  Rational scale = biclique_zero_out_scale(n_eff);
  cert.constants["strip_threshold"] = to_string(t);
  cert.constants["zero_out_scale"] = to_string(scale);
  cert.factor_formula = "empirical (log^2 n*lp)";
  VertexSet sol;
  if (!is_distance_hereditary(g)) {
    LpResult lp = given_lp ? *given_lp : dh_lp(g, opt.lp);
    cert.lp_bound = frac_weight(g, lp.x);
    auto st = strip_high(g, lp.x, t);
    cert.add_phase("special_strip", g.weight(st.removed));
    const Graph& g1 = st.residual.graph;
    VertexSet a1 = detail::lower(g1, g, a), b1 = detail::lower(g1, g, b);
    FracSol x1 = zero_out(st.x, set_union(a1, b1), scale);
    detail::DhCtx ctx{opt, cert, n_eff, t, scale, detail::support_depth_cap(g.n())};
    cert.constants["depth_cap"] = std::to_string(ctx.depth_cap);
    auto s = detail::dh_rec(ctx, g1, a1, b1, x1, 1);
    sol = set_union(st.removed, detail::lift(st.residual.to_parent, s));
  }
  normalize(sol);
  res.solution = sol;
  cert.solution = g.to_ids(sol);
  cert.weight = g.weight(sol);
  cert.feasible = is_dh_without(g, sol);
  cert.claimed_bound = cert.weight;
  cert.bound_ok = true;
  return res;
}

inline DhvdResult solve_dhvd_biclique_dh(const BicliqueDHInstance& in, const DhvdOptions& opt = {}) {
  return solve_dhvd_biclique_dh(in.graph, in.a, in.b, opt);
}

namespace detail {

inline void absorb_special(Certificate& into, const Certificate& from) {
  for (auto& [k, v] : from.counters)
    if (k == "special_max_depth")
      into.counters[k] = std::max(into.count(k), v);
    else
      into.counters[k] += v;
  for (auto& [k, v] : from.phases) into.phases[k] += v;
  into.constants.insert(from.constants.begin(), from.constants.end());
}

// x is the retained fractional solution, local to g.
inline VertexSet dhvd_gen(const Graph& g, const FracSol& x, const DhvdOptions& opt, Certificate& cert, int depth) {
  cert.bump("gen_calls");
  if (depth > cert.count("gen_max_depth")) cert.counters["gen_max_depth"] = depth;
  if (is_distance_hereditary(g)) return {};
  auto special = [&](const Graph& h, const FracSol& xh, const Biclique& k) {
    LpResult lp;
    lp.x = xh;
    lp.value = frac_weight(h, xh);
    auto r = solve_dhvd_biclique_dh(h, k.a, k.b, opt, &lp);
    absorb_special(cert, r.cert);
    return r.solution;
  };
  auto bcs = enumerate_maximal_bicliques(g);
  for (auto& k : bcs)
    if (is_distance_hereditary(remove_vertices(g, k.vertices()).graph)) {
      cert.bump("gen_biclique_dh");
      return special(g, x, k);
    }
  auto sep = biclique_plus_separator(g, opt.sep);
  cert.bump("gen_splits");
  cert.add_phase("separators", g.weight(sep.sep.s));
  auto side = [&](const VertexSet& part) {
    auto sub = induced_subgraph(g, part);
    return lift(sub.to_parent, dhvd_gen(sub.graph, restrict_to(x, sub.to_parent), opt, cert, depth + 1));
  };
  VertexSet t1 = side(sep.sep.a1), t2 = side(sep.sep.a2);
  VertexSet out = set_union(sep.sep.s, set_union(t1, t2));
  if (!sep.k) return out;
  VertexSet keep = set_minus(set_union(set_union(sep.sep.a1, sep.sep.a2), sep.k->vertices()), set_union(t1, t2));
  auto j = induced_subgraph(g, keep);
  Biclique kj{j.graph.from_ids(g.to_ids(sep.k->a)), j.graph.from_ids(g.to_ids(sep.k->b))};
  return set_union(out, lift(j.to_parent, special(j.graph, restrict_to(x, j.to_parent), kj)));
}

} // namespace detail

inline DhvdResult solve_dhvd(const Graph& g, const DhvdOptions& opt = {}) {
  DhvdResult res;
  Certificate& cert = res.cert;
  cert.problem = "dhvd";
  auto hit = hit_small_obstructions(g, opt.obstruction_size, opt.lp);
  cert.hitting_lp = hit.lp_value;
  cert.add_phase("hitting_set", g.weight(hit.removed));
  cert.counters["small_obstructions"] = long(hit.obstructions);
  const Graph& gp = hit.residual.graph;
  LpResult lp;
  lp.x.assign(gp.n(), Rational(0));
  if (!is_distance_hereditary(gp)) lp = dh_lp(gp, opt.lp);
  cert.lp_bound = lp.value;
  VertexSet t = detail::dhvd_gen(gp, lp.x, opt, cert, 1);
  VertexSet sol = set_union(hit.removed, detail::lift(hit.residual.to_parent, t));
  cert.counters["repairs"] = 0;
  if (!is_dh_without(g, sol)) {
    VertexSet fixed = repair_dh(g, sol);
    cert.bump("repairs", long(fixed.size() - sol.size()));
    cert.add_phase("repair", g.weight(fixed) - g.weight(sol));
    if (opt.strict) throw RepairUsed("dhvd: repair safety net fired");
    sol = fixed;
  }
  normalize(sol);
  res.solution = sol;
  cert.solution = g.to_ids(sol);
  cert.weight = g.weight(sol);
  cert.feasible = is_dh_without(g, sol);
  Rational logn = log2_bounds(std::max(2, g.n())).second;
  cert.claimed_bound = opt.d * logn * logn * logn * lp.value + opt.obstruction_size * hit.lp_value;
  cert.factor_formula = "D*log2(n)^3*lp + s*hitting_lp";
  cert.constants["D"] = std::to_string(opt.d);
  cert.constants["obstruction_size"] = std::to_string(opt.obstruction_size);
  cert.bound_ok = cert.weight <= cert.claimed_bound;
  return res;
}

} // namespace vdel
