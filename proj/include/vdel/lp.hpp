#pragma once

#include "paths.hpp"

#include <functional>
#include <map>
#include <set>

namespace vdel {

// Covering LP  min w.x  s.t.  x(R) >= 1 for every generated row R, x >= 0.
//
// Solved through its dual  max 1.y  s.t.  sum_{R ni v} y_R <= w_v, y >= 0,
// with a revised simplex carrying an explicit rational B^-1. The all-slack
// basis is feasible, a new cutting plane is just a new dual column (warm
// start for free), and the optimal simplex multipliers are the primal x.
class CoverLp {
public:
  explicit CoverLp(std::vector<Rational> w) : w_(std::move(w)), n_(int(w_.size())) {
    binv_.assign(n_, std::vector<Rational>(n_));
    for (int i = 0; i < n_; ++i) binv_[i][i] = 1;
    basis_.resize(n_);
    std::iota(basis_.begin(), basis_.end(), 0);
    beta_ = w_;
  }

  // Returns false if the row was already present.
  bool add_row(VertexSet r) {
    normalize(r);
    if (r.empty()) throw InputError("cover LP: empty row is infeasible");
    for (Vertex v : r)
      if (v < 0 || v >= n_) throw InputError("cover LP: row vertex out of range");
    if (!index_.emplace(r, int(rows_.size())).second) return false;
    rows_.push_back(std::move(r));
    return true;
  }

  void solve() {
    int degenerate = 0;
    while (true) {
      auto pi = multipliers();
      int enter = choose_entering(pi, degenerate > 2 * n_ + 10);
      if (enter < 0) break;
      auto d = ftran(enter);
      int leave = -1;
      Rational best;
      for (int i = 0; i < n_; ++i) {
        if (sgn(d[i]) <= 0) continue;
        Rational r = beta_[i] / d[i];
        if (leave < 0 || r < best || (r == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = r;
        }
      }
      VDEL_CHECK(leave >= 0, "cover LP dual unbounded");
      degenerate = sgn(best) == 0 ? degenerate + 1 : 0;
      pivot(leave, enter, d);
      ++pivots_;
    }
  }

  // Optimal primal solution of the restricted LP (the simplex multipliers).
  FracSol x() const { return multipliers(); }
  Rational value() const {
    Rational t = 0;
    for (int i = 0; i < n_; ++i)
      if (basis_[i] >= n_) t += beta_[i];
    return t;
  }
  // Dual (packing) values per row; with x() they certify optimality.
  std::vector<Rational> dual() const {
    std::vector<Rational> y(rows_.size());
    for (int i = 0; i < n_; ++i)
      if (basis_[i] >= n_) y[basis_[i] - n_] = beta_[i];
    return y;
  }
  const std::vector<VertexSet>& rows() const { return rows_; }
  size_t pivots() const { return pivots_; }

private:
  std::vector<Rational> w_;
  int n_;
  std::vector<VertexSet> rows_;
  std::map<VertexSet, int> index_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<int> basis_; // variable ids: v < n slack of vertex v, n + k column of row k
  std::vector<Rational> beta_;
  size_t pivots_ = 0;

  FracSol multipliers() const {
    FracSol pi(n_);
    for (int i = 0; i < n_; ++i) {
      if (basis_[i] < n_) continue; // slack basics have zero cost
      for (int j = 0; j < n_; ++j)
        if (sgn(binv_[i][j]) != 0) pi[j] += binv_[i][j];
    }
    return pi;
  }

  // Dantzig's rule; Bland's rule (smallest index) once stalling.
  int choose_entering(const FracSol& pi, bool bland) const {
    std::vector<char> basic(n_ + rows_.size(), 0);
    for (int b : basis_) basic[b] = 1;
    int best = -1;
    Rational best_rc = 0;
    for (int v = 0; v < n_; ++v) { // slack reduced cost = -pi_v
      if (basic[v] || sgn(pi[v]) >= 0) continue;
      Rational rc = -pi[v];
      if (bland) return v;
      if (rc > best_rc) {
        best_rc = rc;
        best = v;
      }
    }
    for (size_t k = 0; k < rows_.size(); ++k) {
      int var = n_ + int(k);
      if (basic[var]) continue;
      Rational rc = 1;
      for (Vertex v : rows_[k]) rc -= pi[v];
      if (sgn(rc) <= 0) continue;
      if (bland) return best >= 0 ? best : var;
      if (rc > best_rc) {
        best_rc = rc;
        best = var;
      }
    }
    return best;
  }

  std::vector<Rational> ftran(int var) const {
    std::vector<Rational> d(n_);
    if (var < n_) {
      for (int i = 0; i < n_; ++i) d[i] = binv_[i][var];
    } else {
      for (int i = 0; i < n_; ++i)
        for (Vertex v : rows_[var - n_])
          if (sgn(binv_[i][v]) != 0) d[i] += binv_[i][v];
    }
    return d;
  }

  void pivot(int r, int var, const std::vector<Rational>& d) {
    Rational p = d[r];
    for (int j = 0; j < n_; ++j) binv_[r][j] /= p;
    beta_[r] /= p;
    for (int i = 0; i < n_; ++i) {
      if (i == r || sgn(d[i]) == 0) continue;
      const Rational f = d[i];
      for (int j = 0; j < n_; ++j)
        if (sgn(binv_[r][j]) != 0) binv_[i][j] -= f * binv_[r][j];
      beta_[i] -= f * beta_[r];
    }
    basis_[r] = var;
  }
};

// Given x, returns violated rows (x-sum < 1); empty means x is feasible.
using ObstructionOracle = std::function<std::vector<VertexSet>(const FracSol&)>;

struct LpResult {
  FracSol x;
  Rational value; // = w(x), a lower bound on every integral solution
  std::vector<VertexSet> rows;
  std::vector<Rational> row_duals;
  size_t rounds = 0;
  size_t pivots = 0;
};

struct LpBudgetExceeded : std::runtime_error {
  LpResult partial; // restricted optimum: its value is still a valid lower bound
  explicit LpBudgetExceeded(LpResult p)
      : std::runtime_error("cover LP row budget exhausted"), partial(std::move(p)) {}
};

struct LpOptions {
  size_t row_budget_factor = 10; // budget = factor * n rows (at least min_rows)
  size_t min_rows = 64;
};

inline LpResult solve_cover_lp(const Graph& g, const ObstructionOracle& oracle, const LpOptions& opt = {},
                               const std::vector<VertexSet>& seed_rows = {}) {
  CoverLp lp(g.weights());
  for (auto& r : seed_rows) lp.add_row(r);
  size_t budget = std::max(opt.min_rows, opt.row_budget_factor * size_t(g.n()));
  LpResult res;
  while (true) {
    lp.solve();
    ++res.rounds;
    FracSol x = lp.x();
    auto viol = oracle(x);
    bool added = false;
    for (auto& r : viol) {
      VDEL_CHECK(frac_sum(x, [&] { auto s = r; normalize(s); return s; }()) < 1,
                 "oracle returned a satisfied row");
      added |= lp.add_row(r);
    }
    res.x = std::move(x);
    res.value = frac_weight(g, res.x);
    res.rows = lp.rows();
    res.row_duals = lp.dual();
    res.pivots = lp.pivots();
    if (viol.empty()) break;
    VDEL_CHECK(added, "oracle repeated an existing row");
    if (lp.rows().size() > budget) {
      lp.solve();
      res.x = lp.x();
      res.value = frac_weight(g, res.x);
      res.rows = lp.rows();
      res.row_duals = lp.dual();
      res.pivots = lp.pivots();
      throw LpBudgetExceeded(res);
    }
  }
  VDEL_CHECK(res.value == lp.value(), "primal and dual objective differ");
  return res;
}

// Lightweight feasibility check through an oracle.
inline bool lp_feasible(const FracSol& x, const ObstructionOracle& oracle) { return oracle(x).empty(); }

// ------------------------------------------------------------- transforms

// Every value to the smallest multiple of 1/n that is >= 2x; values below
// 1/(2n) drop to 0.
inline FracSol nicify(const FracSol& x, long n) {
  if (n < 1) throw InputError("nicify: n must be positive");
  FracSol out(x.size());
  Rational half = ratio(1, 2 * n);
  for (size_t v = 0; v < x.size(); ++v) {
    if (x[v] < half) continue;
    Rational t = 2 * x[v] * n;
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    out[v] = Rational(c) / n;
    out[v].canonicalize();
  }
  return out;
}

inline bool is_nice(const FracSol& x, long n) {
  for (auto& v : x) {
    Rational t = v * n;
    if (t.get_den() != 1) return false;
  }
  return true;
}

struct Stripped {
  VertexSet removed;    // h(x), local to the input graph
  Induced residual;     // G - h(x)
  FracSol x;            // x restricted to the residual
};

inline Stripped strip_high(const Graph& g, const FracSol& x, const Rational& threshold) {
  if (sgn(threshold) <= 0) throw InputError("strip_high: threshold must be positive");
  Stripped s;
  for (int v = 0; v < g.n(); ++v)
    if (x[v] >= threshold) s.removed.push_back(v);
  s.residual = remove_vertices(g, s.removed);
  s.x = restrict_to(x, s.residual.to_parent);
  Rational lhs = frac_weight(s.residual.graph, s.x) / threshold + g.weight(s.removed);
  VDEL_CHECK(lhs <= frac_weight(g, x) / threshold, "strip_high accounting inequality");
  return s;
}

// Clique mode: zero on m, everything else times 1 + 3 max_v x(v).
inline Rational clique_zero_out_scale(const FracSol& x) {
  Rational mx = 0;
  for (auto& v : x) mx = rmax(mx, v);
  return 1 + 3 * mx;
}

// Biclique mode: 1 + 4/log n (log from below, so never larger than stated).
inline Rational biclique_zero_out_scale(long n) { return 1 + Rational(4) / log2_bounds(n).first; }

inline FracSol zero_out(const FracSol& x, const VertexSet& m, const Rational& scale) {
  FracSol out(x.size());
  std::vector<char> in(x.size(), 0);
  for (Vertex v : m) in[v] = 1;
  for (size_t v = 0; v < x.size(); ++v)
    if (!in[v]) out[v] = x[v] * scale;
  return out;
}

inline FracSol zero_out_clique(const Graph& g, const FracSol& x, const VertexSet& m) {
  if (!g.is_clique(m)) throw InputError("zero_out: structure is not a clique");
  return zero_out(x, m, clique_zero_out_scale(x));
}

inline bool is_biclique(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty() || !set_intersection(a, b).empty()) return false;
  for (Vertex u : a)
    for (Vertex v : b)
      if (!g.adjacent(u, v)) return false;
  return true;
}

inline FracSol zero_out_biclique(const Graph& g, const FracSol& x, const VertexSet& a, const VertexSet& b,
                                 long n_for_log) {
  if (!(a.empty() && b.empty()) && !is_biclique(g, a, b)) throw InputError("zero_out: structure is not a biclique");
  return zero_out(x, set_union(a, b), biclique_zero_out_scale(n_for_log));
}

} // namespace vdel
