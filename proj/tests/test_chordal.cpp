#include "oracles.hpp"

#include <vdel/chordal.hpp>

#include <gtest/gtest.h>

using namespace vdel;

namespace {
std::vector<VertexSet> hole_sets(const std::vector<Hole>& hs) {
  std::vector<VertexSet> out;
  for (auto h : hs) {
    normalize(h);
    out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}
} // namespace

TEST(Chordal, CycleWitness) {
  for (int k = 4; k <= 9; ++k) {
    auto r = is_chordal_with_witness(oracle::cycle(k));
    EXPECT_FALSE(r.chordal);
    EXPECT_EQ(int(r.hole.size()), k);
  }
  EXPECT_TRUE(is_chordal(oracle::cycle(3)));
  EXPECT_TRUE(is_chordal(Graph(0, {})));
}

TEST(Chordal, AgreesWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    int n = 4 + int(rng() % 7);
    Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * double(rng() % 100) / 100);
    auto r = is_chordal_with_witness(g);
    EXPECT_EQ(r.chordal, oracle::chordal(g));
    if (!r.chordal) {
      EXPECT_TRUE(is_hole(g, r.hole));
      EXPECT_EQ(r.hole, canonical_hole(r.hole));
    } else {
      // peo: later neighbours form a clique
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[r.peo[i]] = i;
      for (Vertex v = 0; v < n; ++v) {
        VertexSet later;
        for (Vertex u : g.neighbors(v))
          if (pos[u] > pos[v]) later.push_back(u);
        EXPECT_TRUE(g.is_clique(later));
      }
    }
  }
}

TEST(Chordal, ShortestHoleIsShortest) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    Graph g = oracle::random_graph(rng, 9, 0.3);
    auto all = oracle::all_hole_sets(g);
    Hole h = shortest_hole(g);
    if (all.empty()) {
      EXPECT_TRUE(h.empty());
      continue;
    }
    size_t m = 100;
    for (auto& s : all) m = std::min(m, s.size());
    EXPECT_EQ(h.size(), m);
    EXPECT_TRUE(is_hole(g, h));
  }
}

TEST(CliqueForest, ValidOnRandomChordal) {
  std::mt19937_64 rng(13);
  int built = 0;
  for (int it = 0; it < 400 && built < 150; ++it) {
    int n = 3 + int(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.55);
    if (!oracle::chordal(g)) {
      EXPECT_THROW(build_clique_forest(g), NotChordal);
      continue;
    }
    ++built;
    auto f = build_clique_forest(g);
    EXPECT_EQ(check_clique_forest(g, f), "");
    auto bags = f.bags;
    std::sort(bags.begin(), bags.end());
    EXPECT_EQ(bags, oracle::maximal_cliques(g));
    // number of edges = bags - components
    EXPECT_EQ(f.edges.size(), f.bags.size() - connected_components(g).size());
  }
  EXPECT_GT(built, 50);
}

TEST(CliqueForest, DetectsBrokenForest) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  auto f = build_clique_forest(g);
  ASSERT_EQ(check_clique_forest(g, f), "");
  auto bad = f;
  bad.edges.clear();
  EXPECT_NE(check_clique_forest(g, bad), "");
  bad = f;
  bad.bags[0] = {0};
  EXPECT_NE(check_clique_forest(g, bad), "");
}

TEST(MaximalCliques, AgreesWithBruteForce) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + int(rng() % 11);
    Graph g = oracle::random_graph(rng, n, double(rng() % 100) / 100);
    EXPECT_EQ(enumerate_maximal_cliques(g), oracle::maximal_cliques(g));
  }
}

TEST(ShortHoles, AgreesWithBruteForce) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 200; ++it) {
    int n = 4 + int(rng() % 7);
    Graph g = oracle::random_graph(rng, n, 0.25 + 0.4 * double(rng() % 100) / 100);
    int L = 4 + int(rng() % 5);
    auto got = enumerate_short_holes(g, L);
    for (auto& h : got) {
      EXPECT_TRUE(is_hole(g, h));
      EXPECT_EQ(h, canonical_hole(h));
    }
    EXPECT_EQ(hole_sets(got), oracle::all_hole_sets(g, 4, L));
  }
}

TEST(MinWeightHole, AgreesWithBruteForce) {
  std::mt19937_64 rng(16);
  for (int it = 0; it < 250; ++it) {
    int n = 4 + int(rng() % 7);
    Graph g = oracle::random_graph(rng, n, 0.3 + 0.3 * double(rng() % 100) / 100);
    FracSol x(n);
    for (auto& v : x) v = ratio(long(rng() % 5), long(1 + rng() % 3));
    for (int min_len : {4, 5, 6}) {
      auto all = oracle::all_hole_sets(g, min_len);
      auto got = min_weight_hole(g, x, min_len);
      ASSERT_EQ(bool(got), !all.empty()) << it << " " << min_len;
      if (!got) continue;
      Rational best = frac_sum(x, all[0]);
      for (auto& s : all) best = rmin(best, frac_sum(x, s));
      EXPECT_EQ(got->value, best);
      EXPECT_TRUE(is_hole(g, got->hole, min_len));
      EXPECT_EQ(frac_sum(x, got->hole), got->value);
    }
  }
}

TEST(MinWeightHole, RejectsNegative) {
  EXPECT_THROW(min_weight_hole(oracle::cycle(4), {Rational(-1), 0, 0, 0}), InputError);
}
