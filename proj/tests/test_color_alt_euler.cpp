#include <map>

#include "doctest.h"
#include "qospath/color_alt_euler.hpp"
#include "qospath/oracles.hpp"
#include "support.hpp"

using namespace qospath;
using namespace qospath::euler;
using qospath::testing::Rng;

namespace {

constexpr int kRed = 1, kBlue = 2;

ColoredMultigraph square(int c1, int c2) {
  return ColoredMultigraph(4, 2, {{1, 0, 1, c1}, {2, 1, 2, c2}, {3, 2, 3, c1}, {4, 3, 0, c2}});
}

// Lowest (vertex, color) whose edge-end count exceeds half the degree.
std::pair<Vertex, std::int32_t> first_majority(const ColoredMultigraph& g) {
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    std::map<std::int32_t, std::size_t> count;
    for (auto id : g.incident_ids(x)) ++count[g.by_id(id).color];
    for (auto [c, k] : count)
      if (2 * k > g.degree(x)) return {x, c};
  }
  return {-1, 0};
}

}  // namespace

TEST_CASE("alternating square") {
  const auto g = square(kRed, kBlue);
  CHECK(check_feasible(g).ok());
  const auto a = build_alt_euler(g);
  REQUIRE(a.feasibility.ok());
  CHECK(a.cycle.edge_ids.size() == 4);
  CHECK(verify_alt_euler(g, a.cycle));
}

TEST_CASE("monochrome triangle") {
  const ColoredMultigraph g(3, 1, {{1, 0, 1, kRed}, {2, 1, 2, kRed}, {3, 2, 0, kRed}});
  const auto f = check_feasible(g);
  CHECK(f.reason == Reason::colorMajority);
  CHECK(f.vertex == 0);
  CHECK(f.color == kRed);
  CHECK(build_alt_euler(g).cycle.edge_ids.empty());
  CHECK_FALSE(oracles::alt_euler_exists(g));
}

TEST_CASE("two disjoint 2-cycles") {
  const ColoredMultigraph g(4, 2, {{1, 0, 1, kRed}, {2, 1, 0, kBlue}, {3, 2, 3, kRed}, {4, 3, 2, kBlue}});
  CHECK(check_feasible(g).reason == Reason::disconnected);
}

TEST_CASE("odd degree") {
  const ColoredMultigraph g(3, 2, {{1, 0, 1, kRed}, {2, 1, 2, kBlue}});
  const auto f = check_feasible(g);
  CHECK(f.reason == Reason::oddDegree);
  CHECK(f.vertex == 0);
  CHECK(reason_name(f.reason) == "oddDegree");
}

TEST_CASE("four 2-edge paths between two vertices") {
  // 0 and 1 joined through 2, 3, 4 and 5; no color holds a majority at either end.
  const ColoredMultigraph g(6, 3, {{1, 0, 2, 1}, {2, 2, 1, 2}, {3, 0, 3, 2}, {4, 3, 1, 3}, {5, 0, 4, 3},
                                   {6, 4, 1, 1}, {7, 0, 5, 1}, {8, 5, 1, 2}});
  REQUIRE(check_feasible(g).ok());
  const auto a = build_alt_euler(g);
  CHECK(a.cycle.edge_ids.size() == 8);
  CHECK(verify_alt_euler(g, a.cycle));
  CHECK(oracles::alt_euler_exists(g));
}

TEST_CASE("self-loops and isolated vertices") {
  const ColoredMultigraph g(3, 2, {{1, 1, 1, kRed}, {2, 1, 2, kBlue}, {3, 2, 1, kBlue}, {4, 2, 2, kRed}});
  REQUIRE(check_feasible(g).ok());
  const auto a = build_alt_euler(g);
  CHECK(verify_alt_euler(g, a.cycle));
}

TEST_CASE("empty graph") {
  const ColoredMultigraph g(1, 0, {});
  const auto a = build_alt_euler(g);
  CHECK(a.feasibility.ok());
  CHECK(a.cycle.edge_ids.empty());
  CHECK(verify_alt_euler(g, a.cycle));
}

TEST_CASE("verifier") {
  const auto red = square(kRed, kRed);
  CHECK_FALSE(verify_alt_euler(red, EulerCycle{{0, 1, 2, 3}, {1, 2, 3, 4}}));
  const auto g = square(kRed, kBlue);
  CHECK(verify_alt_euler(g, EulerCycle{{0, 1, 2, 3}, {1, 2, 3, 4}}));
  CHECK(verify_alt_euler(g, EulerCycle{{1, 0, 3, 2}, {1, 4, 3, 2}}));
  CHECK_FALSE(verify_alt_euler(g, EulerCycle{{0, 1, 2}, {1, 2, 3}}));
  CHECK_FALSE(verify_alt_euler(g, EulerCycle{{0, 1, 2, 3}, {1, 2, 3, 3}}));
  CHECK_FALSE(verify_alt_euler(g, EulerCycle{{0, 2, 1, 3}, {1, 2, 3, 4}}));
}

TEST_CASE("pair_objects") {
  auto p = pair_objects({7, 7, 9, 9});
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(p[1] == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(pair_objects({1, 2, 3, 4, 5, 6}).size() == 3);
  CHECK_THROWS_AS(pair_objects({1, 1, 1, 2}), ColorMajorityError);
  CHECK_THROWS_AS(pair_objects({1, 2, 3}), std::invalid_argument);
  CHECK(pair_objects({}).empty());

  Rng rng(40);
  for (int iter = 0; iter < 300; ++iter) {
    const int P = testing::uniform(rng, 1, 30);
    std::vector<std::int64_t> colors;
    const std::int64_t big = testing::uniform(rng, 1, 1000);
    const int majority = testing::uniform(rng, 0, P);
    for (int k = 0; k < majority; ++k) colors.push_back(big);
    while (static_cast<int>(colors.size()) < 2 * P) {
      std::int64_t c = testing::uniform(rng, 1, 4);
      if (c != big) colors.push_back(c);
    }
    std::map<std::int64_t, int> freq;
    for (auto c : colors) ++freq[c];
    if (std::any_of(freq.begin(), freq.end(), [P](auto kv) { return kv.second > P; })) continue;
    std::shuffle(colors.begin(), colors.end(), rng);
    const auto pairs = pair_objects(colors);
    REQUIRE(pairs.size() == static_cast<std::size_t>(P));
    std::vector<int> used(colors.size(), 0);
    for (auto [a, b] : pairs) {
      CHECK(colors[a] != colors[b]);
      ++used[a];
      ++used[b];
    }
    CHECK(std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }));
  }
}

TEST_CASE("random feasible instances and mutations") {
  Rng rng(41);
  for (int iter = 0; iter < 200; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 15);
    const auto g = testing::random_alt_euler_instance(rng, n, testing::uniform(rng, 2, 40), testing::uniform(rng, 2, 4));
    REQUIRE(check_feasible(g).ok());
    const auto a = build_alt_euler(g);
    REQUIRE(a.feasibility.ok());
    CHECK(verify_alt_euler(g, a.cycle));
    if (g.edge_count() <= 10) CHECK(oracles::alt_euler_exists(g));

    const auto far = testing::add_far_component(g);
    CHECK(check_feasible(far).reason == Reason::disconnected);

    for (std::size_t slot = 0; slot < g.edge_count(); ++slot) {
      const auto& e = g.edges()[slot];
      if (e.u == e.v) continue;
      const auto cut = testing::drop_edge(g, slot);
      const auto f = check_feasible(cut);
      CHECK(f.reason == Reason::oddDegree);
      CHECK(f.vertex == std::min(e.u, e.v));
      break;
    }

    const Vertex x = g.edges().front().u;
    const auto mono = testing::monochrome_at(g, x);
    const auto want = first_majority(mono);
    const auto f = check_feasible(mono);
    CHECK(f.reason == Reason::colorMajority);
    CHECK(f.vertex == want.first);
    CHECK(f.color == want.second);
    CHECK(build_alt_euler(mono).feasibility.reason == Reason::colorMajority);
  }
}

TEST_CASE("brute force agrees with the feasibility test on tiny graphs") {
  Rng rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 4);
    const int m = testing::uniform(rng, 0, 8);
    std::vector<MultigraphEdge> edges;
    for (int k = 0; k < m; ++k)
      edges.push_back({k + 1, testing::uniform(rng, 0, n - 1), testing::uniform(rng, 0, n - 1), testing::uniform(rng, 1, 3)});
    const ColoredMultigraph g(n, 3, std::move(edges));
    const bool feasible = check_feasible(g).ok();
    CHECK(feasible == oracles::alt_euler_exists(g));
    if (feasible) CHECK(verify_alt_euler(g, build_alt_euler(g).cycle));
  }
}
