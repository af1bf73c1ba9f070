#pragma once

#include "graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace vdel {

// Exact minimum-weight deletion by exhaustive search. Used as the oracle
// at small n and as the branch-and-bound engine of exact subroutines.
// Ties: minimum weight, then fewest vertices, then lexicographically smallest.

struct ExactResult {
  VertexSet solution;
  Rational weight;
  size_t nodes = 0; // subsets tested / search nodes
};

struct ExactRefused : InputError {
  explicit ExactRefused(const std::string& m) : InputError(m) {}
};

struct ExactBudgetExceeded : std::runtime_error {
  ExactResult best; // best feasible solution seen so far (maybe non-optimal)
  explicit ExactBudgetExceeded(ExactResult b)
      : std::runtime_error("exact search node budget exhausted"), best(std::move(b)) {}
};

// `feasible(S)` tells whether G - S belongs to the target class.
using DeletionPredicate = std::function<bool(const VertexSet&)>;

namespace detail {

inline bool better_solution(const Rational& wa, const VertexSet& a, const Rational& wb, const VertexSet& b) {
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline VertexSet mask_to_set(uint64_t m, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (m >> v & 1) s.push_back(v);
  return s;
}

} // namespace detail

// All 2^n subsets sorted by (weight, size, lex); the first feasible wins.
inline ExactResult exact_by_weight_order(const Graph& g, const DeletionPredicate& feasible, int max_n = 16) {
  int n = g.n();
  if (n > max_n) throw ExactRefused("exact oracle refuses n = " + std::to_string(n));
  std::vector<std::pair<Rational, uint64_t>> all;
  all.reserve(size_t(1) << n);
  for (uint64_t m = 0; m < (uint64_t(1) << n); ++m) {
    Rational w = 0;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) w += g.weight(v);
    all.emplace_back(w, m);
  }
  std::vector<VertexSet> sets(all.size());
  for (size_t i = 0; i < all.size(); ++i) sets[i] = detail::mask_to_set(all[i].second, n);
  std::vector<size_t> idx(all.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return detail::better_solution(all[a].first, sets[a], all[b].first, sets[b]);
  });
  ExactResult r;
  for (size_t i : idx) {
    ++r.nodes;
    if (feasible(sets[i])) {
      r.solution = sets[i];
      r.weight = all[i].first;
      return r;
    }
  }
  VDEL_CHECK(false, "deleting everything must be feasible");
  return r;
}

// Subsets of each cardinality in turn (revolving combinations), testing only
// those lighter than the incumbent.
inline ExactResult exact_by_cardinality(const Graph& g, const DeletionPredicate& feasible, int max_n = 16) {
  int n = g.n();
  if (n > max_n) throw ExactRefused("exact oracle refuses n = " + std::to_string(n));
  ExactResult r;
  bool have = false;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
      VertexSet s(c.begin(), c.end());
      Rational w = g.weight(s);
      if (!have || detail::better_solution(w, s, r.weight, r.solution)) {
        ++r.nodes;
        if (feasible(s)) {
          r.solution = s;
          r.weight = w;
          have = true;
        }
      }
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  VDEL_CHECK(have, "deleting everything must be feasible");
  return r;
}

// Returns an obstruction (vertex set every solution must meet) inside the
// alive part, or nullopt when the alive part is obstruction-free.
using ObstructionFinder = std::function<std::optional<VertexSet>(const Bitset& alive)>;

struct BranchOptions {
  size_t node_budget = 2000000;
  int packing = 6; // disjoint obstructions used for the lower bound
};

// Branch and bound: take an obstruction, branch on deleting each of its
// vertices (earlier siblings become undeletable), prune with a lower bound
// from greedily packed disjoint obstructions.
inline ExactResult exact_by_branching(const Graph& g, const ObstructionFinder& find,
                                      const BranchOptions& opt = {},
                                      const std::optional<VertexSet>& incumbent = std::nullopt) {
  int n = g.n();
  ExactResult best;
  bool have = false;
  if (incumbent) {
    best.solution = *incumbent;
    normalize(best.solution);
    best.weight = g.weight(best.solution);
    have = true;
  }
  Bitset alive(n), locked(n);
  for (int v = 0; v < n; ++v) alive.set(v);
  VertexSet cur;
  Rational cur_w = 0;
  size_t nodes = 0;

  std::function<void()> go = [&]() {
    if (++nodes > opt.node_budget) {
      best.nodes = nodes;
      throw ExactBudgetExceeded(best);
    }
    auto o = find(alive);
    if (!o) {
      VertexSet s = cur;
      normalize(s);
      if (!have || detail::better_solution(cur_w, s, best.weight, best.solution)) {
        best.solution = s;
        best.weight = cur_w;
        have = true;
      }
      return;
    }
    VertexSet cand;
    for (Vertex v : *o)
      if (!locked.test(v)) cand.push_back(v);
    if (cand.empty()) return;
    std::stable_sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
      return g.weight(a) != g.weight(b) ? g.weight(a) < g.weight(b) : a < b;
    });
    if (have) {
      // lower bound: this obstruction plus further disjoint ones
      Rational lb = cur_w + g.weight(cand.front());
      Bitset rest = alive;
      for (Vertex v : *o) rest.reset(v);
      for (int k = 1; k < opt.packing && lb <= best.weight; ++k) {
        auto more = find(rest);
        if (!more) break;
        std::optional<Rational> m;
        for (Vertex v : *more)
          if (!locked.test(v) && (!m || g.weight(v) < *m)) m = g.weight(v);
        if (!m) return; // an obstruction made only of undeletable vertices
        lb += *m;
        for (Vertex v : *more) rest.reset(v);
      }
      if (lb > best.weight) return;
    }
    std::vector<Vertex> locked_here;
    for (Vertex v : cand) {
      if (!have || cur_w + g.weight(v) <= best.weight) {
        alive.reset(v);
        cur.push_back(v);
        cur_w += g.weight(v);
        go();
        cur_w -= g.weight(v);
        cur.pop_back();
        alive.set(v);
      }
      locked.set(v);
      locked_here.push_back(v);
    }
    for (Vertex v : locked_here) locked.reset(v);
  };
  go();
  VDEL_CHECK(have, "branching found no solution");
  best.nodes = nodes;
  return best;
}

} // namespace vdel
