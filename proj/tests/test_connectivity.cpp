#include <gtest/gtest.h>

#include <random>

#include "oneplanar/connectivity.hpp"
#include "oneplanar/generators.hpp"
#include "oracles.hpp"

using namespace oneplanar;

namespace {

Graph wheel(int rim) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < rim; ++i) {
    es.emplace_back(0, 1 + i);
    es.emplace_back(1 + i, 1 + (i + 1) % rim);
  }
  return Graph::build(rim + 1, es);
}

}  // namespace

TEST(Connectivity, KnownValues) {
  EXPECT_EQ(vertex_connectivity(octahedron()).connectivity, 4);
  EXPECT_EQ(vertex_connectivity(icosahedron()).connectivity, 5);
  EXPECT_EQ(vertex_connectivity(complete_graph(6)).connectivity, 5);
  EXPECT_FALSE(vertex_connectivity(complete_graph(6)).witness_cut.has_value());
  EXPECT_EQ(vertex_connectivity(theorem1_expand(octahedron()).base()).connectivity, 3);
  EXPECT_EQ(vertex_connectivity(theorem2_graph().base()).connectivity, 5);
}

TEST(Connectivity, WitnessDisconnects) {
  auto g = theorem1_expand(octahedron()).base();
  auto r = vertex_connectivity(g);
  ASSERT_TRUE(r.witness_cut.has_value());
  EXPECT_EQ(static_cast<int>(r.witness_cut->size()), r.connectivity);
  EXPECT_TRUE(verify_certificate(g, Certificate::cut(*r.witness_cut)));
}

TEST(Connectivity, MatchesSubsetOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    auto g = oracle::random_connected(n, std::uniform_real_distribution<double>(0.0, 0.9)(rng), rng);
    auto r = vertex_connectivity(g);
    ASSERT_EQ(r.connectivity, oracle::connectivity(g)) << "trial " << i;
    ASSERT_LE(r.connectivity, g.min_degree());
    if (r.witness_cut) {
      ASSERT_TRUE(disconnects(g, *r.witness_cut));
    }
  }
}

TEST(ThreeCuts, Wheel) {
  auto w = wheel(5);
  auto cuts = enumerate_3cuts(w);
  ASSERT_EQ(cuts.size(), 5u);
  for (const auto& c : cuts) {
    EXPECT_EQ(c.cut[0], 0);
    EXPECT_TRUE(verify_certificate(w, Certificate::cut({c.cut[0], c.cut[1], c.cut[2]})));
    EXPECT_GE(c.components.size(), 2u);
  }
}

TEST(ThreeCuts, EmptyWhenFourConnected) {
  EXPECT_TRUE(enumerate_3cuts(figure1_family(3).base()).empty());
  EXPECT_TRUE(enumerate_3cuts(complete_graph(4)).empty());
}

TEST(ThreeCuts, MatchesTripleOracle) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 60; ++i) {
    auto g = oracle::random_connected(std::uniform_int_distribution<int>(5, 9)(rng), 0.6, rng);
    if (vertex_connectivity(g).connectivity < 3) continue;
    ++checked;
    std::vector<std::array<int, 3>> got;
    for (const auto& c : enumerate_3cuts(g)) got.push_back({c.cut[0], c.cut[1], c.cut[2]});
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, oracle::three_cuts(g));
  }
  EXPECT_GT(checked, 20);
}

TEST(ThreeCuts, RejectsLowConnectivity) {
  EXPECT_THROW(enumerate_3cuts(path_graph(5)), Error);
}

TEST(KConnected, Witnesses) {
  EXPECT_TRUE(is_k_connected(complete_graph(5), 4).connected);
  auto p3 = is_k_connected(path_graph(3), 2);
  EXPECT_FALSE(p3.connected);
  EXPECT_EQ(p3.witness, (std::vector<Vertex>{1}));
  auto t = theorem1_expand(complete_graph(4)).base();
  auto r = is_k_connected(t, 4);
  ASSERT_FALSE(r.connected);
  EXPECT_EQ(r.witness.size(), 3u);
  EXPECT_TRUE(disconnects(t, r.witness));
}
