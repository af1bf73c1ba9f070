#include <gtest/gtest.h>

#include <vdel/pmfd.hpp>

#include "oracles.hpp"

using namespace vdel;

namespace {

// Independent membership: K2 -> no edges, C3 -> no cycle, K4 -> treewidth <= 2.
bool free_of(const Graph& g, const std::string& fam) {
  if (fam == "k2") {
    for (int u = 0; u < g.n(); ++u)
      if (!g.neighbors(u).empty()) return false;
    return true;
  }
  if (fam == "c3") return oracle::treewidth(g) <= 1;
  return oracle::treewidth(g) <= 2;
}

Rational brute_pmfd(const Graph& g, const std::string& fam) {
  return oracle::min_deletion(g, [&](const Graph& h) { return free_of(h, fam); }).first;
}

Graph weighted(const Graph& g, std::mt19937_64& rng, int max_w) {
  std::vector<Edge> es;
  for (int u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) es.emplace_back(u, v);
  std::vector<Rational> w(g.n());
  for (auto& x : w) x = 1 + long(rng() % max_w);
  return Graph(g.n(), es, w);
}

} // namespace

TEST(PmfdSpecial, Examples) {
  auto c3 = minor_family("c3");
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}}, {3, 2, 5});
  auto r = solve_pmfd_special(tri, {0, 1}, c3);
  EXPECT_EQ(r.cert.weight, 2);
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {4, 1, 3, 2});
  EXPECT_EQ(solve_pmfd_special(k4, {0, 1}, c3).cert.weight, 3);
  std::mt19937_64 rng(71);
  Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_TRUE(solve_pmfd_special(path, {}, c3).solution.empty());
  EXPECT_THROW(solve_pmfd_special(k4, {0}, c3), InputError);         // K4 - {0} has a cycle
  EXPECT_THROW(solve_pmfd_special(k4, {0, 1, 2}, c3), InputError);   // |M| > c+1
}

TEST(PmfdSpecial, ExactOnSmallInstances) {
  std::mt19937_64 rng(72);
  for (const std::string fam : {"k2", "c3", "k4"}) {
    auto f = minor_family(fam);
    for (int it = 0; it < 25; ++it) {
      int n = 3 + int(rng() % 9);
      auto g = weighted(oracle::random_graph(rng, n, 0.3 + 0.3 * double(rng() % 100) / 100), rng, 6);
      // any M of size <= c+1 leaving g - M free; skip when none exists
      VertexSet m;
      bool found = false;
      for (unsigned long long mask = 0; mask < (1ull << n) && !found; ++mask) {
        if (__builtin_popcountll(mask) > f.c + 1) continue;
        m = oracle::bits_to_set(mask, n);
        found = free_of(remove_vertices(g, m).graph, fam);
      }
      if (!found) continue;
      auto r = solve_pmfd_special(g, m, f);
      EXPECT_EQ(r.cert.weight, brute_pmfd(g, fam)) << fam << " " << it;
      EXPECT_TRUE(free_of(remove_vertices(g, r.solution).graph, fam));
    }
  }
}

TEST(Pmfd, Examples) {
  Graph tri(3, {{0, 1}, {1, 2}, {0, 2}}, {3, 2, 5});
  EXPECT_EQ(solve_pmfd(tri, minor_family("c3")).cert.weight, 2);
  auto k4 = complete_graph(4);
  EXPECT_EQ(solve_pmfd(k4, minor_family("c3")).cert.weight, 2);
  EXPECT_EQ(solve_pmfd(k4, minor_family("k4")).cert.weight, 1);
  EXPECT_EQ(solve_pmfd(k4, minor_family("k2")).cert.weight, 3);
  EXPECT_TRUE(solve_pmfd(Graph(0, {}), minor_family("k4")).solution.empty());
}

TEST(Pmfd, FeasibleAndNotBelowOptimum) {
  std::mt19937_64 rng(73);
  for (const std::string fam : {"k2", "c3", "k4"}) {
    auto f = minor_family(fam);
    for (int it = 0; it < 15; ++it) {
      int n = 4 + int(rng() % 8);
      auto g = weighted(oracle::random_graph(rng, n, 0.25 + 0.4 * double(rng() % 100) / 100), rng, 5);
      auto r = solve_pmfd(g, f);
      EXPECT_TRUE(r.cert.feasible);
      EXPECT_TRUE(free_of(remove_vertices(g, r.solution).graph, fam)) << fam << " " << it;
      EXPECT_EQ(r.cert.count("repairs"), 0);
      EXPECT_TRUE(r.cert.bound_ok);
      Rational opt = brute_pmfd(g, fam);
      EXPECT_GE(r.cert.weight, opt);
      EXPECT_LE(r.cert.lp_bound, opt); // disjoint-model packing is a lower bound
    }
  }
}

TEST(Pmfd, LargerInstancesUseSeparators) {
  std::mt19937_64 rng(74);
  long splits = 0;
  for (const std::string fam : {"c3", "k4"}) {
    auto f = minor_family(fam);
    for (int it = 0; it < 4; ++it) {
      int n = 30 + int(rng() % 11);
      auto g = weighted(oracle::random_graph(rng, n, 2.5 / n), rng, 4);
      auto r = solve_pmfd(g, f);
      EXPECT_TRUE(r.cert.feasible);
      EXPECT_EQ(r.cert.count("repairs"), 0);
      splits += r.cert.count("gen_splits");
      EXPECT_EQ(solve_pmfd(g, f).solution, r.solution);
    }
  }
  EXPECT_GT(splits, 0);
}
