#pragma once

#include "certificate.hpp"
#include "exact.hpp"
#include "minor.hpp"
#include "separators.hpp"

namespace vdel {

// Weighted deletion to a minor-closed family with a planar excluded minor:
// bounded-set + separator recursion with an exact special case.

struct PmfdOptions {
  long d = 96;                     // certified factor D in D log^2 n
  size_t m_candidates = 200000;    // cap on |M| <= c+1 candidates tried per call
  size_t special_budget = 2000000; // branch-and-bound nodes in the special case
  SeparatorOptions sep;
  bool strict = false;
};

struct PmfdResult {
  VertexSet solution;
  Certificate cert;
};

inline ObstructionFinder model_finder(const Graph& g, const MinorFamily& f) {
  return [&g, &f](const Bitset& alive) -> std::optional<VertexSet> {
    auto sub = induced_subgraph(g, alive.to_vector());
    auto m = find_model_vertices(sub.graph, f);
    if (!m) return std::nullopt;
    VertexSet s;
    for (Vertex v : *m) s.push_back(sub.to_parent[v]);
    normalize(s);
    return s;
  };
}

// Greedy packing of vertex-disjoint models: sum of their lightest vertices.
inline Rational model_packing_bound(const Graph& g, const MinorFamily& f) {
  Bitset alive(g.n());
  for (int v = 0; v < g.n(); ++v) alive.set(v);
  auto find = model_finder(g, f);
  Rational lb = 0;
  while (auto m = find(alive)) {
    Rational mn = g.weight(m->front());
    for (Vertex v : *m) {
      mn = rmin(mn, g.weight(v));
      alive.reset(v);
    }
    lb += mn;
  }
  return lb;
}

struct SpecialBudgetExceeded : std::runtime_error {
  ExactResult best;
  explicit SpecialBudgetExceeded(ExactResult b)
      : std::runtime_error("pmfd special case: search budget exhausted"), best(std::move(b)) {}
};

// Exact minimum-weight deletion when g - m is minor-free.
inline PmfdResult solve_pmfd_special(const Graph& g, const VertexSet& m_in, const MinorFamily& f,
                                     const PmfdOptions& opt = {}) {
  VertexSet m = m_in;
  normalize(m);
  if (int(m.size()) > f.c + 1)
    throw InputError("pmfd special: |M| = " + std::to_string(m.size()) + " exceeds c+1 = " + std::to_string(f.c + 1));
  auto rest = remove_vertices(g, m);
  if (auto w = find_model_vertices(rest.graph, f)) {
    std::string ids;
    for (Vertex v : *w) ids += (ids.empty() ? "" : " ") + std::to_string(rest.graph.ids()[v]);
    throw InputError("pmfd special: G - M still has a " + f.name + " minor on {" + ids + "}");
  }
  PmfdResult res;
  Certificate& cert = res.cert;
  cert.problem = "pmfd-special";
  BranchOptions bo;
  bo.node_budget = opt.special_budget;
  ExactResult ex;
  try {
    ex = exact_by_branching(g, model_finder(g, f), bo);
  } catch (const ExactBudgetExceeded& e) {
    throw SpecialBudgetExceeded(e.best);
  }
  res.solution = ex.solution;
  cert.exact_opt = ex.weight;
  cert.counters["search_nodes"] = long(ex.nodes);
  cert.solution = g.to_ids(ex.solution);
  cert.weight = ex.weight;
  cert.feasible = is_minor_free(remove_vertices(g, ex.solution).graph, f);
  cert.claimed_bound = ex.weight;
  cert.factor_formula = "exact";
  cert.bound_ok = true;
  return res;
}

inline VertexSet repair_minors(const Graph& g, const MinorFamily& f, VertexSet s) {
  normalize(s);
  while (true) {
    auto rest = remove_vertices(g, s);
    auto m = find_model_vertices(rest.graph, f);
    if (!m) return s;
    Vertex pick = -1;
    for (Vertex v : *m) {
      Vertex p = rest.to_parent[v];
      if (pick < 0 || g.weight(p) < g.weight(pick) || (g.weight(p) == g.weight(pick) && p < pick)) pick = p;
    }
    s.push_back(pick);
    normalize(s);
  }
}

namespace detail {

// Some M with |M| <= k and g - M minor-free; smallest size first, then
// lexicographic over vertices ordered by degree (high first).
inline std::optional<VertexSet> small_modulator(const Graph& g, const MinorFamily& f, int k, size_t cap,
                                                Certificate& cert) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.neighbors(a).size() > g.neighbors(b).size(); });
  size_t tried = 0;
  for (int s = 0; s <= std::min(k, g.n()); ++s) {
    std::vector<int> c(s);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
      if (++tried > cap) {
        cert.bump("pmfd_modulator_capped");
        return std::nullopt;
      }
      VertexSet m;
      for (int i : c) m.push_back(order[i]);
      normalize(m);
      if (is_minor_free(remove_vertices(g, m).graph, f)) return m;
      int i = s - 1;
      while (i >= 0 && c[i] == g.n() - s + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return std::nullopt;
}

inline VertexSet pmfd_special_or_greedy(const Graph& g, const VertexSet& m, const MinorFamily& f,
                                        const PmfdOptions& opt, Certificate& cert) {
  cert.bump("special_calls");
  try {
    auto r = solve_pmfd_special(g, m, f, opt);
    cert.bump("search_nodes", r.cert.count("search_nodes"));
    cert.add_phase("special", r.cert.weight);
    return r.solution;
  } catch (const SpecialBudgetExceeded& e) {
    cert.bump("special_budget");
    VertexSet s = repair_minors(g, f, e.best.solution);
    cert.add_phase("special", g.weight(s));
    return s;
  }
}

inline VertexSet pmfd_gen(const Graph& g, const MinorFamily& f, const PmfdOptions& opt, Certificate& cert,
                          int depth) {
  cert.bump("gen_calls");
  if (depth > cert.count("gen_max_depth")) cert.counters["gen_max_depth"] = depth;
  if (is_minor_free(g, f)) return {};
  if (auto m = small_modulator(g, f, f.c + 1, opt.m_candidates, cert)) {
    cert.bump("gen_small_modulator");
    return pmfd_special_or_greedy(g, *m, f, opt, cert);
  }
  auto sep = bounded_set_plus_separator(g, f.c + 1, opt.sep);
  cert.bump("gen_splits");
  cert.add_phase("separators", g.weight(sep.s));
  auto side = [&](const VertexSet& part) {
    auto sub = induced_subgraph(g, part);
    return lift(sub.to_parent, pmfd_gen(sub.graph, f, opt, cert, depth + 1));
  };
  VertexSet t1 = side(sep.a1), t2 = side(sep.a2);
  VertexSet keep = set_minus(set_union(set_union(sep.a1, sep.a2), sep.m), set_union(t1, t2));
  auto j = induced_subgraph(g, keep);
  VertexSet mj = j.graph.from_ids(g.to_ids(sep.m));
  VertexSet sh = lift(j.to_parent, pmfd_special_or_greedy(j.graph, mj, f, opt, cert));
  return set_union(set_union(sep.s, set_union(t1, t2)), sh);
}

} // namespace detail

inline PmfdResult solve_pmfd(const Graph& g, const MinorFamily& f, const PmfdOptions& opt = {}) {
  PmfdResult res;
  Certificate& cert = res.cert;
  cert.problem = "pmfd";
  cert.constants["family"] = f.name;
  cert.constants["c"] = std::to_string(f.c);
  VertexSet sol = detail::pmfd_gen(g, f, opt, cert, 1);
  cert.counters["repairs"] = 0;
  if (!is_minor_free(remove_vertices(g, sol).graph, f)) {
    VertexSet fixed = repair_minors(g, f, sol);
    cert.bump("repairs", long(fixed.size() - sol.size()));
    cert.add_phase("repair", g.weight(fixed) - g.weight(sol));
    if (opt.strict) throw RepairUsed("pmfd: repair safety net fired");
    sol = fixed;
  }
  normalize(sol);
  res.solution = sol;
  cert.solution = g.to_ids(sol);
  cert.weight = g.weight(sol);
  cert.feasible = is_minor_free(remove_vertices(g, sol).graph, f);
  cert.lp_bound = model_packing_bound(g, f);
  Rational logn = log2_bounds(std::max(2, g.n())).second;
  cert.claimed_bound = opt.d * logn * logn * cert.lp_bound;
  cert.factor_formula = "D*log2(n)^2*packing_bound";
  cert.constants["D"] = std::to_string(opt.d);
  cert.bound_ok = cert.weight <= cert.claimed_bound;
  return res;
}

} // namespace vdel
