#include "doctest.h"
#include "qospath/color_alt_path.hpp"
#include "qospath/oracles.hpp"
#include "support.hpp"

using namespace qospath;
using namespace qospath::altpath;
using qospath::testing::Rng;

namespace {

constexpr int kRed = 1, kBlue = 2;

// s=0, a=1, b=2, t=3.
ColoredDigraph two_route() {
  return ColoredDigraph(4, 2, {0, 0, 0, 0},
                        {{0, 1, 1, kRed}, {1, 3, 1, kRed}, {0, 2, 3, kRed}, {2, 3, 3, kBlue}});
}

void check_valid(const ColoredDigraph& g, const AltPathResult& r, Vertex s, Vertex t, Agg agg) {
  CHECK(is_alternating_path(g, r.path, s, t));
  CHECK(alt_path_cost(g, r.path, agg) == r.cost);
}

}  // namespace

TEST_CASE("s == t") {
  const ColoredDigraph g(2, 1, {4, 1}, {{0, 1, 1, 1}});
  const auto r = alt_path_expanded(g, 0, 0, Agg::sum);
  REQUIRE(r);
  CHECK(r->cost == 4);
  CHECK(r->path.edges.empty());
  CHECK(alt_path_two_best(g, 0, 0, Agg::sum, TwoBestMode::dagTopological)->cost == 4);
}

TEST_CASE("the same-color route is rejected") {
  const auto g = two_route();
  const auto e = alt_path_expanded(g, 0, 3, Agg::sum);
  REQUIRE(e);
  CHECK(e->cost == 6);
  CHECK(e->path.vertices == std::vector<Vertex>{0, 2, 3});
  for (auto mode : {TwoBestMode::dagTopological, TwoBestMode::queueRelaxation}) {
    const auto b = alt_path_two_best(g, 0, 3, Agg::sum, mode);
    REQUIRE(b);
    CHECK(b->cost == 6);
    check_valid(g, *b, 0, 3, Agg::sum);
  }
  CHECK(alt_path_expanded(g, 0, 3, Agg::max)->cost == 3);
}

TEST_CASE("single edge") {
  const ColoredDigraph g(2, 1, {0, 0}, {{0, 1, 5, 1}});
  CHECK(alt_path_two_best(g, 0, 1, Agg::sum, TwoBestMode::queueRelaxation)->cost == 5);
  CHECK(alt_path_expanded(g, 0, 1, Agg::sum)->cost == 5);
  CHECK_FALSE(alt_path_expanded(g, 1, 0, Agg::sum));
  CHECK_FALSE(alt_path_two_best(g, 1, 0, Agg::sum, TwoBestMode::queueRelaxation));
}

TEST_CASE("walks may revisit a vertex with a different last color") {
  // 0 -r-> 1 -r-> 2 clashes; the detour 1 -b-> 3 -g-> 1 changes the last color.
  const ColoredDigraph g(4, 3, {0, 0, 0, 0}, {{0, 1, 1, kRed}, {1, 2, 1, kRed}, {1, 3, 1, kBlue}, {3, 1, 1, 3}});
  const auto e = alt_path_expanded(g, 0, 2, Agg::sum);
  REQUIRE(e);
  CHECK(e->cost == 4);
  CHECK(e->path.vertices == std::vector<Vertex>{0, 1, 3, 1, 2});
  check_valid(g, *e, 0, 2, Agg::sum);
  CHECK(oracles::alt_walk_by_rounds(g, 0, 2, Agg::sum) == 4);
  CHECK_FALSE(oracles::alt_simple_path(g, 0, 2, Agg::sum));
}

TEST_CASE("cycle detection in DAG mode") {
  const ColoredDigraph g(2, 2, {0, 0}, {{0, 1, 1, 1}, {1, 0, 1, 2}});
  CHECK_THROWS_AS(alt_path_two_best(g, 0, 1, Agg::sum, TwoBestMode::dagTopological), CycleError);
  CHECK(alt_path_two_best(g, 0, 1, Agg::sum, TwoBestMode::queueRelaxation)->cost == 1);
}

TEST_CASE("mode names") {
  CHECK(mode_from_name("dag") == TwoBestMode::dagTopological);
  CHECK(mode_from_name("queueRelaxation") == TwoBestMode::queueRelaxation);
  CHECK_FALSE(mode_from_name("x"));
}

TEST_CASE("random DAGs: expanded = two-best = oracles") {
  Rng rng(21);
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 8);
    const auto g = testing::random_colored(rng, n, testing::uniform(rng, 0, 24), testing::uniform(rng, 1, 3), 9, true);
    const Agg agg = iter % 2 ? Agg::max : Agg::sum;
    const Vertex s = testing::uniform(rng, 0, n - 1), t = testing::uniform(rng, 0, n - 1);
    const auto e = alt_path_expanded(g, s, t, agg);
    const auto d = alt_path_two_best(g, s, t, agg, TwoBestMode::dagTopological);
    const auto q = alt_path_two_best(g, s, t, agg, TwoBestMode::queueRelaxation);
    const auto walk = oracles::alt_walk_by_rounds(g, s, t, agg);
    const auto simple = oracles::alt_simple_path(g, s, t, agg);
    REQUIRE(e.has_value() == walk.has_value());
    REQUIRE(d.has_value() == walk.has_value());
    REQUIRE(q.has_value() == walk.has_value());
    if (!e) continue;
    CHECK(e->cost == *walk);
    CHECK(d->cost == *walk);
    CHECK(q->cost == *walk);
    CHECK(simple == walk);  // on a DAG every walk is a simple path
    check_valid(g, *e, s, t, agg);
    check_valid(g, *d, s, t, agg);
    check_valid(g, *q, s, t, agg);
  }
}

TEST_CASE("random cyclic graphs: expanded matches the round oracle") {
  Rng rng(22);
  int agree = 0, total = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 8);
    const auto g = testing::random_colored(rng, n, testing::uniform(rng, 0, 30), testing::uniform(rng, 1, 3), 9, false);
    const Agg agg = iter % 2 ? Agg::max : Agg::sum;
    const Vertex s = testing::uniform(rng, 0, n - 1), t = testing::uniform(rng, 0, n - 1);
    const auto e = alt_path_expanded(g, s, t, agg);
    const auto walk = oracles::alt_walk_by_rounds(g, s, t, agg);
    REQUIRE(e.has_value() == walk.has_value());
    if (!e) continue;
    CHECK(e->cost == *walk);
    check_valid(g, *e, s, t, agg);
    const auto b = alt_path_two_best(g, s, t, agg, TwoBestMode::queueRelaxation);
    ++total;
    if (b) {
      check_valid(g, *b, s, t, agg);
      CHECK(b->cost >= e->cost);
      agree += b->cost == e->cost;
    }
  }
  MESSAGE("two-best matched the expanded search on " << agree << " of " << total << " cyclic instances");
}

TEST_CASE("label invariant after convergence") {
  Rng rng(23);
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = testing::random_colored(rng, 8, 25, 3, 9, iter % 2 == 0);
    const auto lab = two_best_labels(g, 0, Agg::sum, iter % 2 == 0 ? TwoBestMode::dagTopological : TwoBestMode::queueRelaxation);
    for (std::size_t v = 0; v < lab.cmin.size(); ++v) {
      CHECK(lab.cmin[v] <= lab.cmin2[v]);
      if (lab.cmin2[v] < kInfinity) CHECK(lab.colmin[v] != lab.colmin2[v]);
    }
  }
}
