#include "oracles.hpp"

#include <vdel/multicut.hpp>

#include <gtest/gtest.h>

using namespace vdel;

namespace {

// Random chordal graph: each new vertex joins a random clique of the current graph.
Graph random_chordal(std::mt19937_64& rng, int n, int max_w) {
  std::vector<Edge> es;
  std::vector<std::vector<int>> cliques{{0}};
  for (int v = 1; v < n; ++v) {
    auto& c = cliques[rng() % cliques.size()];
    std::vector<int> nb;
    for (int u : c)
      if (rng() % 3) nb.push_back(u);
    if (nb.empty() && rng() % 4) nb.push_back(c[0]);
    for (int u : nb) es.emplace_back(u, v);
    nb.push_back(v);
    cliques.push_back(nb);
  }
  std::vector<Rational> w;
  for (int v = 0; v < n; ++v) w.emplace_back(long(1 + rng() % max_w));
  return Graph(n, es, w);
}

std::vector<TerminalPair> random_pairs(std::mt19937_64& rng, int n, int k) {
  std::vector<TerminalPair> ps;
  for (int i = 0; i < k; ++i) {
    int a = int(rng() % n), b = int(rng() % n);
    if (a != b) ps.emplace_back(a, b);
  }
  return ps;
}

} // namespace

TEST(Multicut, InstanceValidation) {
  EXPECT_THROW(make_multicut(Graph(2, {{0, 1}}), {{0, 0}}), InputError);
  EXPECT_THROW(make_multicut(Graph(2, {{0, 1}}), {{0, 2}}), InputError);
  auto inst = make_multicut(Graph(3, {{0, 1}}), {{1, 0}, {0, 1}});
  EXPECT_EQ(inst.pairs.size(), 1u);
}

TEST(Multicut, VerifyExamples) {
  Graph p(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(verify_multicut(p, {{0, 2}}, {1}));
  EXPECT_FALSE(verify_multicut(p, {{0, 2}}, {}));
  EXPECT_TRUE(verify_multicut(p, {{0, 2}}, {2}));
}

TEST(Multicut, LpExamples) {
  EXPECT_EQ(multicut_lp(make_multicut(Graph(3, {{0, 1}, {1, 2}}), {{0, 2}})).value, 1);
  EXPECT_EQ(multicut_lp(make_multicut(Graph(2, {{0, 1}}, {Rational(1), Rational(3)}), {{0, 1}})).value, 1);
  auto r = multicut_lp(make_multicut(Graph(3, {{0, 1}}), {}));
  EXPECT_EQ(r.value, 0);
}

TEST(MulticutChordal, SpecExamples) {
  // star: center 0, leaves 1, 2
  auto star = make_multicut(Graph(3, {{0, 1}, {0, 2}}), {{1, 2}});
  auto r = solve_multicut_chordal(star);
  EXPECT_EQ(r.cert.weight, 1);
  std::vector<Rational> w{10, 10, 1, 10};
  auto path = make_multicut(Graph(4, {{0, 1}, {1, 2}, {2, 3}}, w), {{0, 3}, {1, 3}});
  r = solve_multicut_chordal(path);
  EXPECT_TRUE(verify_multicut(path, r.solution));
  EXPECT_LE(r.cert.weight, 32 * oracle::min_multicut(path.graph, path.pairs));
  auto none = make_multicut(Graph(3, {{0, 1}}), {});
  EXPECT_TRUE(solve_multicut_chordal(none).solution.empty());
  EXPECT_THROW(solve_multicut_chordal(make_multicut(oracle::cycle(4), {{0, 2}})), NotChordal);
}

TEST(MulticutChordal, InBinMatchesDefinition) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 2000; ++it) {
    long n = 1 + long(rng() % 12);
    Rational x = ratio(long(rng() % 3), n);
    Rational d = x + ratio(long(rng() % 40), n);
    long i = long(rng() % (n + 1));
    bool brute = false;
    for (long j = 0; j < 1000; ++j) {
      Rational v = (ratio(i, n) + 2 * j) / 8;
      if (d - x < v && v <= d) brute = true;
    }
    EXPECT_EQ(in_bin(d, x, i, n, 8), brute);
  }
}

TEST(MulticutChordal, CertifiedOnRandom) {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 80; ++it) {
    int n = 4 + int(rng() % 9);
    Graph g = random_chordal(rng, n, 5);
    auto inst = make_multicut(g, random_pairs(rng, n, 1 + int(rng() % 4)));
    ChordalMulticutDetail det;
    auto r = solve_multicut_chordal(inst, {}, &det);
    EXPECT_TRUE(oracle::pairs_cut(g, inst.pairs, r.solution));
    EXPECT_LE(r.cert.weight, 32 * r.cert.lp_bound);
    Rational opt = oracle::min_multicut(g, inst.pairs);
    EXPECT_LE(r.cert.lp_bound, opt);
    EXPECT_LE(opt, r.cert.weight);
    for (auto& b : det.bins) EXPECT_LE(b.chosen_weight, 8 * b.comp_x_weight);
  }
}

TEST(MulticutGeneral, SpecExamples) {
  auto p = make_multicut(Graph(3, {{0, 1}, {1, 2}}), {{0, 2}});
  auto r = solve_multicut_general(p);
  EXPECT_TRUE(verify_multicut(p, r.solution));
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto kk = make_multicut(k4, {{0, 1}});
  r = solve_multicut_general(kk);
  EXPECT_TRUE(verify_multicut(kk, r.solution));
  EXPECT_TRUE(solve_multicut_general(make_multicut(k4, {})).solution.empty());
}

TEST(MulticutGeneral, CertifiedOnRandom) {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 80; ++it) {
    int n = 4 + int(rng() % 9);
    Graph g = oracle::random_graph(rng, n, 0.3, 5);
    auto inst = make_multicut(g, random_pairs(rng, n, 1 + int(rng() % 5)));
    auto r = solve_multicut_general(inst);
    EXPECT_TRUE(oracle::pairs_cut(g, inst.pairs, r.solution));
    EXPECT_TRUE(r.cert.bound_ok);
    EXPECT_LE(oracle::min_multicut(g, inst.pairs), r.cert.weight);
  }
}
