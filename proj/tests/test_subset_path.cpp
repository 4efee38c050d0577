#include "doctest.h"
#include "qospath/oracles.hpp"
#include "qospath/subset_path.hpp"
#include "support.hpp"

using namespace qospath;
using namespace qospath::subset;
using qospath::testing::Rng;

namespace {

SubsetQuery make(int q, Agg agg = Agg::sum) {
  SubsetQuery query;
  query.q = q;
  query.agg = agg;
  return query;
}

bool is_simple_walk(const WeightedDigraph& g, const PathResult& w, bool cycle) {
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const std::size_t n = w.vertices.size();
  if (w.edges.size() != (cycle ? n : n - 1)) return false;
  for (std::size_t k = 0; k < w.edges.size(); ++k) {
    const auto& e = g.edge(w.edges[k]);
    if (e.u != w.vertices[k] || e.v != w.vertices[(k + 1) % n]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("q = 1 picks the cheapest vertex") {
  const WeightedDigraph g(3, {{0, 1, 1}}, std::vector<Cost>{4, 2, 3});
  const auto a = min_q_path(g, make(1));
  REQUIRE(a);
  CHECK(a->cost == 2);
  CHECK(a->walk.vertices == std::vector<Vertex>{1});
}

TEST_CASE("single edge") {
  const WeightedDigraph g(2, {{0, 1, 7}}, std::vector<Cost>{1, 2});
  const auto a = min_q_path(g, make(2));
  REQUIRE(a);
  CHECK(a->cost == 10);
  CHECK(a->walk.vertices == std::vector<Vertex>{0, 1});
  CHECK(a->walk.edges == std::vector<EdgeIndex>{0});
  const auto m = min_q_path(g, make(2, Agg::max));
  CHECK(m->cost == 7);
}

TEST_CASE("directed triangle") {
  const WeightedDigraph g(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}, std::vector<Cost>{1, 1, 1});
  const auto c = min_q_cycle(g, make(3));
  REQUIRE(c);
  CHECK(c->cost == 6);
  CHECK(is_simple_walk(g, c->walk, true));
  CHECK(walk_cost(g, c->walk, Agg::sum) == 6);
  CHECK_FALSE(min_q_cycle(g, make(2)));
  CHECK(min_q_cycle_pair_table(g, make(3)) == 6);
  CHECK_FALSE(min_q_cycle_pair_table(g, make(2)));
}

TEST_CASE("argument checks") {
  const WeightedDigraph g(3, {{0, 1, 1}});
  CHECK_THROWS_AS(min_q_path(g, make(0)), std::invalid_argument);
  CHECK_THROWS_AS(min_q_path(g, make(4)), std::invalid_argument);
  CHECK_THROWS_AS(min_q_cycle(g, make(1)), std::invalid_argument);
  CHECK_THROWS_AS(min_q_path(WeightedDigraph(21, {}), make(2)), std::length_error);
  CHECK_THROWS_AS(min_q_cycle_pair_table(WeightedDigraph(13, {}), make(2)), std::length_error);
}

TEST_CASE("allowed subsets and vertex mask") {
  // 0->1 (1), 1->2 (1), 0->2 (10); only sets avoiding vertex 1 allowed.
  const WeightedDigraph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 10}});
  auto q = make(2);
  q.allowed = [](std::uint32_t s) { return (s & 2u) == 0; };
  auto a = min_q_path(g, q);
  REQUIRE(a);
  CHECK(a->cost == 10);
  CHECK(a->walk.vertices == std::vector<Vertex>{0, 2});

  auto m = make(2);
  m.vertex_mask = 0b101;
  a = min_q_path(g, m);
  REQUIRE(a);
  CHECK(a->cost == 10);
  m.q = 3;
  CHECK_FALSE(min_q_path(g, m));
}

TEST_CASE("random graphs agree with tuple enumeration") {
  Rng rng(7);
  for (int iter = 0; iter < 150; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 7);
    const auto g = testing::random_weighted(rng, n, testing::uniform(rng, 0, 30), 0, 9, true);
    for (Agg agg : {Agg::sum, Agg::max}) {
      for (int q = 1; q <= n; ++q) {
        const auto p = min_q_path(g, make(q, agg));
        const auto want = oracles::enumerate_q_path(g, q, agg);
        REQUIRE(p.has_value() == want.has_value());
        if (p) {
          CHECK(p->cost == *want);
          CHECK(is_simple_walk(g, p->walk, false));
          CHECK(p->walk.vertices.size() == static_cast<std::size_t>(q));
          CHECK(walk_cost(g, p->walk, agg) == p->cost);
        }
        if (q < 2) continue;
        const auto c = min_q_cycle(g, make(q, agg));
        const auto want_c = oracles::enumerate_q_cycle(g, q, agg);
        REQUIRE(c.has_value() == want_c.has_value());
        CHECK(min_q_cycle_pair_table(g, make(q, agg)) == want_c);
        if (c) {
          CHECK(c->cost == *want_c);
          CHECK(is_simple_walk(g, c->walk, true));
          CHECK(walk_cost(g, c->walk, agg) == c->cost);
        }
      }
    }
  }
}
