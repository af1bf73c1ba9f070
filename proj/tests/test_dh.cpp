#include <gtest/gtest.h>

#include <vdel/dh.hpp>

#include "oracles.hpp"

using namespace vdel;
using oracle::brute_dh;
using oracle::brute_obstructions;
using oracle::iso;
using oracle::random_dh;

namespace {

Graph make(int n, std::vector<Edge> es) { return Graph(n, es); }

Graph house() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}}); }
Graph gem() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }
Graph domino() { return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}}); }
Graph path(int k) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
  return make(k, es);
}

std::string key_of(ObstructionKind k) { return kind_name(k); }

} // namespace

TEST(DistanceHereditary, Examples) {
  EXPECT_TRUE(is_distance_hereditary(path(4)));
  auto c5 = is_distance_hereditary_with_witness(oracle::cycle(5));
  ASSERT_FALSE(c5.dh);
  EXPECT_EQ(c5.obstruction->kind, ObstructionKind::long_hole);
  EXPECT_EQ(c5.obstruction->vertices.size(), 5u);
  auto gm = is_distance_hereditary_with_witness(gem());
  ASSERT_FALSE(gm.dh);
  EXPECT_EQ(gm.obstruction->kind, ObstructionKind::gem);
  EXPECT_FALSE(is_distance_hereditary(house()));
  EXPECT_FALSE(is_distance_hereditary(domino()));
  EXPECT_TRUE(is_distance_hereditary(oracle::cycle(4)));
  EXPECT_TRUE(is_distance_hereditary(Graph(0, {})));
}

TEST(DistanceHereditary, AgreesWithDefinition) {
  std::mt19937_64 rng(11);
  int mismatches = 0;
  for (int it = 0; it < 600; ++it) {
    int n = 2 + int(rng() % 7);
    double p = 0.2 + 0.6 * double(rng() % 100) / 100;
    auto g = oracle::random_graph(rng, n, p);
    bool want = brute_dh(g);
    auto r = is_distance_hereditary_with_witness(g);
    if (r.dh != want) ++mismatches;
    if (r.dh) {
      EXPECT_EQ(r.pruning.size() + 1, size_t(n));
    } else {
      ASSERT_TRUE(r.obstruction);
      EXPECT_TRUE(is_dh_obstruction(g, *r.obstruction));
    }
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Obstructions, Examples) {
  auto h = enumerate_small_obstructions(house(), 5);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].kind, ObstructionKind::house);
  EXPECT_TRUE(enumerate_small_obstructions(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 10).empty());
  auto c6 = enumerate_small_obstructions(oracle::cycle(6), 6);
  ASSERT_EQ(c6.size(), 1u);
  EXPECT_EQ(c6[0].kind, ObstructionKind::long_hole);
  EXPECT_THROW(enumerate_small_obstructions(house(), 4), InputError);
}

TEST(Obstructions, AgreeWithBruteForce) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 250; ++it) {
    int n = 5 + int(rng() % 4);
    auto g = oracle::random_graph(rng, n, 0.3 + 0.4 * double(rng() % 100) / 100);
    int ms = 5 + int(rng() % 4);
    auto got = enumerate_small_obstructions(g, ms);
    std::vector<std::pair<std::string, VertexSet>> mine;
    for (auto& o : got) {
      EXPECT_TRUE(is_dh_obstruction(g, o));
      mine.push_back({key_of(o.kind), o.vertex_set()});
    }
    std::sort(mine.begin(), mine.end());
    ASSERT_EQ(mine, brute_obstructions(g, ms)) << "iteration " << it;
  }
}

TEST(Cograph, AgreesWithP4Scan) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + int(rng() % 8);
    auto g = oracle::random_graph(rng, n, 0.5);
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    bool p4 = false;
    for (unsigned long long m = 0; m < (1ULL << n) && !p4; ++m)
      if (__builtin_popcountll(m) == 4 && iso(g, oracle::bits_to_set(m, n), {{0, 1}, {1, 2}, {2, 3}})) p4 = true;
    EXPECT_EQ(is_cograph(g, all), !p4);
  }
}

TEST(Bicliques, Examples) {
  auto p3 = enumerate_maximal_bicliques(path(3));
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_EQ(p3[0].vertices(), (VertexSet{0, 1, 2}));
  EXPECT_EQ(p3[0].a, (VertexSet{0, 2}));
  EXPECT_EQ(p3[0].b, (VertexSet{1}));
  auto k2 = enumerate_maximal_bicliques(path(2));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0].a, (VertexSet{0}));
  EXPECT_EQ(k2[0].b, (VertexSet{1}));
  auto c4 = enumerate_maximal_bicliques(oracle::cycle(4));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(c4[0].a, (VertexSet{0, 2}));
  EXPECT_EQ(c4[0].b, (VertexSet{1, 3}));
}

TEST(Bicliques, AgreeWithBruteForce) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 200; ++it) {
    int n = 2 + int(rng() % 7);
    auto g = oracle::random_graph(rng, n, 0.2 + 0.7 * double(rng() % 100) / 100);
    auto got = enumerate_maximal_bicliques(g);
    std::set<std::pair<VertexSet, VertexSet>> mine;
    for (auto& b : got) {
      EXPECT_TRUE(is_maximal_biclique(g, b));
      EXPECT_TRUE(mine.insert({b.a, b.b}).second) << "duplicate";
    }
    ASSERT_EQ(mine, oracle::maximal_bicliques(g)) << "iteration " << it;
  }
}

TEST(RankWidthOne, Examples) {
  auto k2 = path(2);
  auto d = rankwidth1_decomposition(k2);
  EXPECT_EQ(check_rw1(k2, d), "");
  auto c = balancing_rw1_cut(k2, d);
  EXPECT_EQ(c.side1.size(), 1u);
  EXPECT_EQ(c.side2.size(), 1u);
  EXPECT_EQ(set_union(c.m1, c.m2), (VertexSet{0, 1}));

  auto star = make(4, {{0, 1}, {0, 2}, {0, 3}});
  auto ds = rankwidth1_decomposition(star);
  EXPECT_EQ(check_rw1(star, ds), "");
  auto cs = balancing_rw1_cut(star, ds);
  EXPECT_EQ(cs.side1.size(), 2u);
  EXPECT_EQ(cs.side2.size(), 2u);

  auto p4 = path(4);
  auto dp = rankwidth1_decomposition(p4);
  EXPECT_EQ(check_rw1(p4, dp), "");
  auto cp = balancing_rw1_cut(p4, dp);
  EXPECT_EQ(cp.side1.size(), 2u);
  EXPECT_EQ(cp.m1.size(), 1u);
  EXPECT_EQ(cp.m2.size(), 1u);
  EXPECT_TRUE(p4.adjacent(cp.m1[0], cp.m2[0]));

  try {
    rankwidth1_decomposition(house());
    FAIL() << "expected NotDistanceHereditary";
  } catch (const NotDistanceHereditary& e) {
    EXPECT_EQ(e.obstruction.kind, ObstructionKind::house);
  }
}

TEST(RankWidthOne, RandomDecompositionsAreValidAndBalanced) {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 150; ++it) {
    int n = 2 + int(rng() % 30);
    auto g = random_dh(rng, n);
    ASSERT_TRUE(is_distance_hereditary(g));
    auto d = rankwidth1_decomposition(g);
    ASSERT_EQ(check_rw1(g, d), "");
    auto c = balancing_rw1_cut(g, d);
    // centroid edge of a binary tree: both sides within 2/3 (n >= 2)
    EXPECT_LE(3 * std::max(c.side1.size(), c.side2.size()), 2 * size_t(n) + 2) << n;
    EXPECT_LE(4 * std::max(c.side1.size(), c.side2.size()), 3 * size_t(n) + 3) << n;
    for (Vertex u : c.m1)
      for (Vertex v : c.m2) EXPECT_TRUE(g.adjacent(u, v));
  }
}

TEST(RankWidthOne, BrokenDecompositionIsRejected) {
  auto g = path(5);
  auto d = rankwidth1_decomposition(g);
  // permute leaves so the tree no longer matches the graph
  std::swap(d.nodes[d.leaf_of[0]].leaf, d.nodes[d.leaf_of[2]].leaf);
  std::swap(d.leaf_of[0], d.leaf_of[2]);
  std::swap(d.nodes[d.leaf_of[1]].leaf, d.nodes[d.leaf_of[4]].leaf);
  std::swap(d.leaf_of[1], d.leaf_of[4]);
  EXPECT_NE(check_rw1(g, d), "");
}

// On graphs without small obstructions, every long hole meeting a biclique
// M in more than 3 vertices can be traded for one meeting M in at most 3.
TEST(Bicliques, LongHolesMeetFewBicliqueVertices) {
  std::mt19937_64 rng(16);
  int checked = 0;
  for (int it = 0; it < 3000 && checked < 40; ++it) {
    int n = 6 + int(rng() % 5);
    auto g = oracle::random_graph(rng, n, 0.25 + 0.2 * double(rng() % 100) / 100);
    bool small = false;
    for (auto& o : enumerate_small_obstructions(g, 6))
      if (o.kind != ObstructionKind::long_hole || o.vertices.size() <= 6) small = true;
    if (small) continue;
    auto holes = oracle::all_hole_sets(g, 5);
    if (holes.empty()) continue;
    ++checked;
    for (auto& m : enumerate_maximal_bicliques(g)) {
      auto mv = m.vertices();
      bool any_meet = false, any_small = false;
      for (auto& h : holes) {
        size_t k = set_intersection(h, mv).size();
        if (k > 0) any_meet = true;
        if (k > 0 && k <= 3) any_small = true;
      }
      EXPECT_EQ(any_meet, any_small);
    }
  }
  EXPECT_GT(checked, 0);
}
