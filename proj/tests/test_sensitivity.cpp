#include "doctest.h"
#include "qospath/oracles.hpp"
#include "qospath/sensitivity.hpp"
#include "support.hpp"

using namespace qospath;
using namespace qospath::sensitivity;
using qospath::testing::Rng;

namespace {

constexpr auto k1 = Category::every;
constexpr auto k2 = Category::some;
constexpr auto k3 = Category::none;

using Cats = std::vector<Category>;

}  // namespace

TEST_CASE("chain: everything on the single path") {
  const WeightedDigraph g(3, {{0, 1, 1}, {1, 2, 1}});
  const auto c = classify_weighted(g, 0, 2);
  CHECK(c.vertex == Cats{k1, k1, k1});
  CHECK(c.edge == Cats{k1, k1});
  CHECK(classify_unit(g, 0, 2) == c);
}

TEST_CASE("diamond: two shortest paths") {
  const WeightedDigraph g(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}});
  const auto c = classify_weighted(g, 0, 3);
  CHECK(c.vertex == Cats{k1, k2, k2, k1});
  CHECK(c.edge == Cats{k2, k2, k2, k2});
  CHECK(classify_unit(g, 0, 3) == c);
}

TEST_CASE("unreachable target puts everything in category 3") {
  const WeightedDigraph g(3, {{0, 1, 1}, {2, 1, 1}});
  const auto c = classify_weighted(g, 0, 2);
  CHECK(c.vertex == Cats{k3, k3, k3});
  CHECK(c.edge == Cats{k3, k3});
  CHECK(classify_unit(g, 0, 2) == c);
}

TEST_CASE("s == t") {
  const WeightedDigraph g(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}});
  const auto c = classify_unit(g, 1, 1);
  CHECK(c.vertex == Cats{k3, k1, k3});
  CHECK(c.edge == Cats{k3, k3, k3});
  CHECK(classify_weighted(g, 1, 1) == c);
}

TEST_CASE("heavy edge between two marked vertices is not on a shortest path") {
  // 0->1->2 costs 2, the direct edge 0->2 costs 5; both endpoints are marked.
  const WeightedDigraph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 5}});
  const auto c = classify_weighted(g, 0, 2);
  CHECK(c.edge == Cats{k1, k1, k3});
  CHECK(c == oracles::classify_by_enumeration(g, 0, 2));
}

TEST_CASE("a vertex that separates G'' is category 1") {
  // Two diamonds in series: 0 -> {1,2} -> 3 -> {4,5} -> 6.
  const WeightedDigraph g(7, {{0, 1, 2}, {0, 2, 2}, {1, 3, 2}, {2, 3, 2}, {3, 4, 2}, {3, 5, 2}, {4, 6, 2}, {5, 6, 2}});
  const auto c = classify_weighted(g, 0, 6);
  CHECK(c.vertex == Cats{k1, k2, k2, k1, k2, k2, k1});
  CHECK(c == classify_unit(g, 0, 6));
}

TEST_CASE("classify_unit rejects mixed weights") {
  const WeightedDigraph g(3, {{0, 1, 1}, {1, 2, 2}});
  CHECK_THROWS_AS(classify_unit(g, 0, 2), std::invalid_argument);
}

TEST_CASE("zero-weight cycle on the shortest-path subgraph") {
  const WeightedDigraph g(3, {{0, 1, 0}, {1, 0, 0}, {1, 2, 1}});
  CHECK_THROWS_AS(classify_weighted(g, 0, 2), ZeroWeightCycleError);
}

TEST_CASE("endpoint range check") {
  const WeightedDigraph g(2, {{0, 1, 1}});
  CHECK_THROWS_AS(classify_weighted(g, 0, 2), std::invalid_argument);
}

TEST_CASE("distances") {
  const WeightedDigraph g(3, {{0, 1, 2}, {1, 2, 3}});
  const auto d = distances(g, 0, 2);
  CHECK(d.from_source == std::vector<Cost>{0, 2, 5});
  CHECK(d.to_target == std::vector<Cost>{5, 3, 0});
  const auto u = distances(g, 1, 0);
  CHECK(u.from_source[0] == kInfinity);
}

TEST_CASE("undirected examples") {
  const WeightedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  auto c = classify_undirected(path, 0, 2);
  CHECK(c.vertex == Cats{k1, k1, k1});
  CHECK(c.edge == Cats{k1, k1});

  const WeightedGraph triangle(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  c = classify_undirected(triangle, 0, 1);
  CHECK(c.vertex == Cats{k1, k1, k3});
  CHECK(c.edge == Cats{k1, k3, k3});
  CHECK(classify_undirected(triangle, 0, 1, true) == c);

  const WeightedGraph square(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  c = classify_undirected(square, 0, 2);
  CHECK(c.vertex == Cats{k1, k2, k1, k2});
  CHECK(c.edge == Cats{k2, k2, k2, k2});
}

TEST_CASE("random graphs agree with path enumeration") {
  Rng rng(404);
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 8);
    const bool unit = iter % 3 == 0;
    const auto g = testing::random_weighted(rng, n, testing::uniform(rng, 0, 20), 1, unit ? 1 : 6);
    const Vertex s = testing::uniform(rng, 0, n - 1), t = testing::uniform(rng, 0, n - 1);
    const auto want = oracles::classify_by_enumeration(g, s, t);
    const auto got = classify_weighted(g, s, t);
    CHECK(got == want);
    if (unit) CHECK(classify_unit(g, s, t) == want);

    // Every category-1 edge lies on every shortest path, and elements of
    // category 1 or 2 have endpoints of category 1 or 2.
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (got.edge[e] == k3) continue;
      CHECK(got.vertex[static_cast<std::size_t>(g.edge(static_cast<EdgeIndex>(e)).u)] != k3);
      CHECK(got.vertex[static_cast<std::size_t>(g.edge(static_cast<EdgeIndex>(e)).v)] != k3);
    }
  }
}

TEST_CASE("random undirected graphs agree with path enumeration") {
  Rng rng(505);
  for (int iter = 0; iter < 200; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 7);
    const bool unit = iter % 2 == 0;
    const auto ug = testing::random_undirected(rng, n, testing::uniform(rng, 0, 12), 1, unit ? 1 : 5);
    const Vertex s = testing::uniform(rng, 0, n - 1), t = testing::uniform(rng, 0, n - 1);
    const auto want = oracles::classify_undirected_by_enumeration(ug, s, t);
    CHECK(classify_undirected(ug, s, t) == want);
    if (unit) CHECK(classify_undirected(ug, s, t, true) == want);
  }
}

TEST_CASE("fractional weights use the tolerance") {
  const WeightedDigraph g(4, {{0, 1, 0.1}, {1, 3, 0.2}, {0, 2, 0.2}, {2, 3, 0.1}});
  const auto c = classify_weighted(g, 0, 3);
  CHECK(c.vertex == Cats{k1, k2, k2, k1});
}
