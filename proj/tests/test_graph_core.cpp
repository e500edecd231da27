#include <gtest/gtest.h>

#include "oneplanar/generators.hpp"
#include "oneplanar/graph.hpp"

using namespace oneplanar;

TEST(Build, CompleteAndMinusOne) {
  std::vector<std::pair<int, int>> all{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  auto k4 = Graph::build(4, all);
  EXPECT_EQ(k4.size(), 6);
  EXPECT_TRUE(k4.adjacent(3, 0));
  all.pop_back();
  auto k4m = Graph::build(4, all);
  EXPECT_EQ(k4m.size(), 5);
  EXPECT_FALSE(k4m.adjacent(2, 3));
}

TEST(Build, RejectsLoopsDuplicatesAndRange) {
  std::vector<std::pair<int, int>> loop{{0, 0}};
  std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}};
  std::vector<std::pair<int, int>> far{{0, 7}};
  for (const auto* es : {&loop, &dup, &far}) {
    try {
      Graph::build(3, *es);
      FAIL() << "accepted a bad edge list";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::validation);
    }
  }
}

TEST(Build, EdgeIdsFollowSortedOrder) {
  auto g = build_graph(4, {{2, 3}, {1, 0}, {0, 2}});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edge(0).u, 0);
  EXPECT_EQ(g.edge(0).v, 1);
  EXPECT_EQ(*g.edge_id(3, 2), 2);
}

TEST(Induced, FiveOfK6IsK5) {
  auto s = induced_subgraph(complete_graph(6), {5, 1, 3, 0, 4});
  EXPECT_EQ(s.graph.order(), 5);
  EXPECT_EQ(s.graph.size(), 10);
  EXPECT_EQ(s.labels, (std::vector<Vertex>{0, 1, 3, 4, 5}));
}

TEST(Induced, EmptyAndIdempotent) {
  auto g = icosahedron();
  EXPECT_EQ(induced_subgraph(g, {}).graph.order(), 0);
  auto once = induced_subgraph(g, {0, 1, 2, 3, 4, 5});
  std::vector<Vertex> all(once.graph.order());
  for (int i = 0; i < once.graph.order(); ++i) all[i] = i;
  auto twice = induced_subgraph(once.graph, all);
  EXPECT_EQ(twice.graph.edges(), once.graph.edges());
}

TEST(Induced, GadgetNeighbourhoodIsK5) {
  // u, v, a, b, c of the K6 gadget: every one of the five is pairwise adjacent.
  auto g = k6_gadget().base();
  auto s = induced_subgraph(g, {0, 1, 3, 4, 5});
  EXPECT_EQ(s.graph.size(), 10);
}

TEST(Independent, Basics) {
  auto k4 = complete_graph(4);
  EXPECT_FALSE(is_independent_set(k4, {0, 2}));
  EXPECT_TRUE(is_independent_set(k4, {3}));
  EXPECT_TRUE(is_independent_set(cycle_graph(6), {0, 2, 4}));
}

TEST(Certificate, CycleAndCut) {
  auto c5 = cycle_graph(5);
  EXPECT_TRUE(verify_certificate(c5, Certificate::cycle({0, 1, 2, 3, 4})));
  EXPECT_FALSE(verify_certificate(c5, Certificate::cycle({0, 2, 1, 3, 4})));
  EXPECT_FALSE(verify_certificate(c5, Certificate::cycle({0, 1, 2, 3})));
  EXPECT_FALSE(verify_certificate(complete_graph(4), Certificate::cut({0})));
  EXPECT_TRUE(verify_certificate(c5, Certificate::cut({0, 2})));
  EXPECT_TRUE(verify_certificate(path_graph(4), Certificate::path({0, 1, 2, 3})));
  EXPECT_FALSE(verify_certificate(path_graph(4), Certificate::path({0, 1, 1, 2})));
}

TEST(Certificate, IndependentSet) {
  EXPECT_TRUE(verify_certificate(cycle_graph(6), Certificate::independent_set({1, 3, 5})));
  EXPECT_FALSE(verify_certificate(cycle_graph(6), Certificate::independent_set({1, 2})));
}

TEST(Certificate, K33SubdivisionOfWeakRing) {
  const int k = 3;
  auto h = figure1_forced_subgraph(k);
  auto branch = figure1_k33_branches(k);
  ASSERT_EQ(branch.size(), 6u);
  auto cert = find_subdivision(h, branch);
  ASSERT_TRUE(cert.has_value());
  EXPECT_FALSE(cert->is_k5());
  EXPECT_TRUE(verify_certificate(h, *cert));
  // A path through a branch vertex's interior is rejected.
  auto broken = *cert;
  broken.paths.front().insert(broken.paths.front().begin() + 1, broken.branch.back());
  EXPECT_FALSE(verify_certificate(h, broken));
}

TEST(Components, Removal) {
  auto c6 = cycle_graph(6);
  EXPECT_TRUE(is_connected(c6));
  EXPECT_EQ(components_without(c6, {0, 3}).size(), 2u);
  EXPECT_FALSE(disconnects(c6, {0}));
}

TEST(Walks, HamiltonianChecks) {
  auto c5 = cycle_graph(5);
  EXPECT_TRUE(is_hamiltonian_cycle(c5, {4, 3, 2, 1, 0}));
  EXPECT_TRUE(is_hamiltonian_path(c5, {1, 2, 3, 4, 0}));
  EXPECT_FALSE(is_hamiltonian_path(c5, {0, 2, 3, 4, 1}));
}
