#include <gtest/gtest.h>

#include <random>

#include "oneplanar/generators.hpp"
#include "oneplanar/solve.hpp"
#include "oneplanar/transform.hpp"
#include "oracles.hpp"

using namespace oneplanar;

TEST(Ham, KnownGraphs) {
  EXPECT_EQ(hamiltonian_cycle(petersen_graph()).status, SolveStatus::proven_absent);
  auto k6 = hamiltonian_cycle(complete_graph(6));
  ASSERT_EQ(k6.status, SolveStatus::found);
  EXPECT_TRUE(verify_certificate(complete_graph(6), *k6.certificate));
  EXPECT_EQ(hamiltonian_cycle(path_graph(4)).status, SolveStatus::proven_absent);
}

TEST(Ham, ForbiddenPairRespected) {
  auto p = planarize_crossing(k6_gadget(), 6);
  const auto& r = p.record;
  const Vertex v = r.v;
  const Edge e1 = make_edge(v, r.endpoints[0]);
  const Edge e2 = make_edge(v, r.endpoints[1]);
  SolveConstraints c;
  c.forbidden_pairs = {{e1, e2}};
  auto res = hamiltonian_cycle(p.drawing.base(), c);
  ASSERT_EQ(res.status, SolveStatus::found);
  EXPECT_TRUE(verify_certificate(p.drawing.base(), *res.certificate));
  EXPECT_TRUE(satisfies(res.certificate->vertices, true, c));
}

TEST(Ham, BudgetIsNotAbsence) {
  SolveConstraints c;
  c.budget = 5;
  auto r = hamiltonian_cycle(petersen_graph(), c);
  EXPECT_EQ(r.status, SolveStatus::budget_exhausted);
  EXPECT_FALSE(r.certificate.has_value());
}

TEST(Path, KnownGraphs) {
  auto p5 = hamiltonian_path(path_graph(5));
  ASSERT_EQ(p5.status, SolveStatus::found);
  EXPECT_TRUE(is_hamiltonian_path(path_graph(5), p5.certificate->vertices));
  EXPECT_EQ(hamiltonian_path(cycle_graph(4)).status, SolveStatus::found);
  EXPECT_EQ(hamiltonian_path(petersen_graph()).status, SolveStatus::found);
  auto star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(hamiltonian_path(star).status, SolveStatus::proven_absent);
}

TEST(Path, Endpoints) {
  SolveConstraints c;
  // Both ends must come from the set.
  c.endpoints = {2};
  EXPECT_EQ(hamiltonian_path(cycle_graph(6), c).status, SolveStatus::proven_absent);
  c.endpoints = {2, 3};
  auto r = hamiltonian_path(cycle_graph(6), c);
  ASSERT_EQ(r.status, SolveStatus::found);
  const auto& vs = r.certificate->vertices;
  EXPECT_EQ(std::min(vs.front(), vs.back()), 2);
  EXPECT_EQ(std::max(vs.front(), vs.back()), 3);
}

TEST(Longest, KnownValues) {
  auto c5 = longest_cycle(cycle_graph(5));
  EXPECT_EQ(c5.length, 5);
  EXPECT_TRUE(c5.optimal);
  auto pet = longest_cycle(petersen_graph());
  EXPECT_EQ(pet.length, 9);
  EXPECT_TRUE(pet.optimal);
  EXPECT_TRUE(verify_certificate(petersen_graph(), Certificate::cycle(pet.cycle)));
  EXPECT_EQ(longest_cycle(path_graph(6)).length, 0);
  auto star = longest_path(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(star.length, 3);
  EXPECT_EQ(longest_path(petersen_graph()).length, 10);
  auto k = longest_path(moon_moser_kleetope(2));
  EXPECT_TRUE(k.optimal);
  EXPECT_LT(k.length, 20);
}

TEST(Longest, TargetStopsEarly) {
  auto r = cycle_at_least(petersen_graph(), 10);
  EXPECT_EQ(r.status, SolveStatus::proven_absent);
  auto s = cycle_at_least(petersen_graph(), 8);
  ASSERT_EQ(s.status, SolveStatus::found);
  EXPECT_GE(s.certificate->vertices.size(), 8u);
}

TEST(Bounds, Independence) {
  auto g = theorem2_graph().base();
  auto b = independence_bounds(g, g.vertices_with(Color::white));
  EXPECT_FALSE(b.traceable_possible);
  auto f = theorem2_family(0).front().graph;
  EXPECT_EQ(independence_bounds(f, f.vertices_with(Color::white)).circ_upper, 40);
  EXPECT_EQ(independence_bounds(cycle_graph(4), {0}).circ_upper, 6);
  EXPECT_THROW(independence_bounds(cycle_graph(4), {0, 1}), Error);
}

TEST(Oracle, HamiltonianAndCircumference) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    auto g = oracle::random_connected(n, std::uniform_real_distribution<double>(0.1, 0.7)(rng), rng);
    auto h = hamiltonian_cycle(g);
    ASSERT_NE(h.status, SolveStatus::budget_exhausted);
    ASSERT_EQ(h.status == SolveStatus::found, oracle::hamiltonian(g)) << "trial " << i;
    auto p = hamiltonian_path(g);
    ASSERT_EQ(p.status == SolveStatus::found, oracle::traceable(g)) << "trial " << i;
    auto c = longest_cycle(g);
    ASSERT_TRUE(c.optimal);
    ASSERT_EQ(c.length, oracle::circumference(g)) << "trial " << i;
    // The independence bound never undercuts the true value.
    std::vector<Vertex> iset;
    for (Vertex v = 0; v < n; ++v)
      if (std::none_of(iset.begin(), iset.end(), [&](Vertex u) { return g.adjacent(u, v); })) iset.push_back(v);
    ASSERT_LE(c.length, independence_bounds(g, iset).circ_upper);
  }
}

TEST(Constraints, SoundAndComplete) {
  std::mt19937_64 rng(99);
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_connected(8, 0.6, rng);
    SolveConstraints c;
    const auto& es = g.edges();
    std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
    c.forbidden_pairs = {{es[pick(rng)], es[pick(rng)]}};
    c.required_hit_sets = {{es[pick(rng)], es[pick(rng)]}};
    auto r = hamiltonian_cycle(g, c);
    ASSERT_NE(r.status, SolveStatus::budget_exhausted);
    if (r.status == SolveStatus::proven_absent) {
      for (const auto& cyc : oracle::hamiltonian_cycles(g)) ASSERT_FALSE(satisfies(cyc, true, c)) << "trial " << i;
      continue;
    }
    ++found;
    ASSERT_TRUE(verify_certificate(g, *r.certificate));
    ASSERT_TRUE(satisfies(r.certificate->vertices, true, c));
  }
  EXPECT_GT(found, 10);
}
