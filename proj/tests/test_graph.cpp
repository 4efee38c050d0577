#include <sstream>

#include "doctest.h"
#include "qospath/graph.hpp"
#include "support.hpp"

using namespace qospath;
using qospath::testing::Rng;

namespace {

template <class G>
G parse_as(std::string_view text, GraphFormat f) {
  return std::get<G>(parse_graph(text, f));
}

std::size_t error_line(std::string_view text, GraphFormat f) {
  try {
    parse_graph(text, f);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

}  // namespace

TEST_CASE("biweighted parse") {
  const auto g = parse_as<BiweightedDigraph>("3 2\n0 1 1 5\n1 2 1 5\n", GraphFormat::biweighted);
  CHECK(g.vertex_count() == 3);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge(0) == BiweightedEdge{0, 1, 1, 5});
  CHECK(g.edge(1) == BiweightedEdge{1, 2, 1, 5});
  CHECK(g.out_edges(0) == std::vector<EdgeIndex>{0});
}

TEST_CASE("single vertex, no edges") {
  const auto g = parse_as<BiweightedDigraph>("1 0\n", GraphFormat::biweighted);
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("comments and vertex costs") {
  const auto g = parse_as<WeightedDigraph>("# header next\n3 1 V\n1 2 3\n# edge\n0 2 1.5\n", GraphFormat::weighted);
  CHECK(g.has_vertex_costs());
  CHECK(g.vertex_cost(2) == 3);
  CHECK(g.edge(0).w == 1.5);
  const auto plain = parse_as<WeightedDigraph>("2 1\n0 1 4\n", GraphFormat::weighted);
  CHECK_FALSE(plain.has_vertex_costs());
  CHECK(plain.vertex_cost(1) == 0);
}

TEST_CASE("colored formats") {
  const auto d = parse_as<ColoredDigraph>("2 1 2\n0 5\n0 1 3 2\n", GraphFormat::coloredDigraph);
  CHECK(d.color_count() == 2);
  CHECK(d.vertex_cost(1) == 5);
  CHECK(d.edge(0) == ColoredEdge{0, 1, 3, 2});
  CHECK(d.in_edges(1) == std::vector<EdgeIndex>{0});

  const auto m = parse_as<ColoredMultigraph>("2 3 2\n2 0 1 1\n1 1 0 2\n3 1 1 1\n", GraphFormat::coloredMultigraph);
  CHECK(m.by_id(1).color == 2);
  CHECK(m.incident_ids(0) == std::vector<std::int32_t>{1, 2});
  CHECK(m.incident_ids(1) == std::vector<std::int32_t>{1, 2, 3, 3});
  CHECK(m.degree(1) == 4);
}

TEST_CASE("malformed input reports the line") {
  CHECK(error_line("3 2\n0 1 1 5\n1 x 1 5\n", GraphFormat::biweighted) == 3);
  CHECK(error_line("3 1\n0 3 1 1\n", GraphFormat::biweighted) == 2);
  CHECK(error_line("3 2\n0 1 1 1\n", GraphFormat::biweighted) == 3);
  CHECK(error_line("2 1\n0 1 -1\n", GraphFormat::weighted) == 2);
  CHECK(error_line("2 1 2\n0 0\n0 1 1 3\n", GraphFormat::coloredDigraph) == 3);
  CHECK(error_line("2 2 1\n1 0 1 1\n1 1 0 1\n", GraphFormat::coloredMultigraph) == 3);
  CHECK(error_line("2 2\n0 1 1 1\n0 1 2 2\n", GraphFormat::biweighted) == 3);
  CHECK(error_line("2 1\n1 1 1 1\n", GraphFormat::biweighted) == 2);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::weighted), ParseError);
}

TEST_CASE("parallel edges and self-loops only in multigraphs") {
  CHECK_THROWS_AS(WeightedDigraph(2, {{0, 1, 1}, {0, 1, 2}}), GraphError);
  CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, 1}, {1, 0, 2}}), GraphError);
  CHECK_NOTHROW(ColoredMultigraph(1, 1, {{1, 0, 0, 1}, {2, 0, 0, 1}}));
  CHECK_THROWS_AS(ColoredMultigraph(1, 1, {{1, 0, 0, 1}, {1, 0, 0, 1}}), GraphError);
  CHECK_THROWS_AS(ColoredMultigraph(2, 1, {{2, 0, 1, 1}}), GraphError);
}

TEST_CASE("round trip over random graphs of every kind") {
  Rng rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 8);
    const int m = testing::uniform(rng, 0, 20);
    const auto b = testing::random_biweighted(rng, n, m, 9);
    CHECK(std::get<BiweightedDigraph>(parse_graph(serialize(b), GraphFormat::biweighted)) == b);

    auto w = testing::random_weighted(rng, n, m, 0, 9, iter % 2 == 0);
    std::vector<WeightedEdge> fractional = w.edges();
    for (auto& e : fractional) e.w = e.w / 7.0 + 0.1;
    w = WeightedDigraph(n, fractional, w.vertex_costs());
    CHECK(std::get<WeightedDigraph>(parse_graph(serialize(w), GraphFormat::weighted)) == w);

    const auto c = testing::random_colored(rng, n, m, 3, 9, false);
    CHECK(std::get<ColoredDigraph>(parse_graph(serialize(c), GraphFormat::coloredDigraph)) == c);

    const auto mg = testing::random_alt_euler_instance(rng, n, m + 2, 3);
    CHECK(std::get<ColoredMultigraph>(parse_graph(serialize(mg), GraphFormat::coloredMultigraph)) == mg);
    CHECK(serialize_graph(mg) == serialize(mg));
  }
}

TEST_CASE("format_cost") {
  CHECK(format_cost(10) == "10");
  CHECK(format_cost(0.1) == "0.1");
  CHECK(format_cost(-4) == "-4");
  CHECK(format_cost(kInfinity) == "inf");
}

TEST_CASE("transpose") {
  const WeightedDigraph g(2, {{0, 1, 3}});
  const auto t = transpose(g);
  CHECK(t.edges() == std::vector<WeightedEdge>{{1, 0, 3}});
  CHECK(transpose(WeightedDigraph()).edge_count() == 0);
  Rng rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    const auto r = testing::random_weighted(rng, testing::uniform(rng, 1, 8), 15, 0, 9, true);
    CHECK(transpose(transpose(r)) == r);
  }
}

TEST_CASE("undirected_to_directed") {
  const WeightedGraph ug(2, {{0, 1, 2}});
  const auto d = undirected_to_directed(ug);
  CHECK(d.graph.edges() == std::vector<WeightedEdge>{{0, 1, 2}, {1, 0, 2}});
  CHECK(d.origin == std::vector<EdgeIndex>{0, 0});

  Rng rng(9);
  for (int iter = 0; iter < 50; ++iter) {
    const auto r = testing::random_undirected(rng, testing::uniform(rng, 1, 8), 12, 0, 9);
    const auto dd = undirected_to_directed(r);
    REQUIRE(dd.graph.edge_count() == 2 * r.edge_count());
    for (const auto& e : dd.graph.edges()) {
      const auto& back = dd.graph.edges();
      CHECK(std::find(back.begin(), back.end(), WeightedEdge{e.v, e.u, e.w}) != back.end());
    }
  }
}

TEST_CASE("adjacency enumerates each edge once (twice when undirected)") {
  Rng rng(3);
  const auto g = testing::random_weighted(rng, 7, 20, 0, 5);
  std::vector<int> hits(g.edge_count(), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (EdgeIndex e : g.out_edges(u)) ++hits[static_cast<std::size_t>(e)];
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

  const auto mg = testing::random_alt_euler_instance(rng, 6, 20, 3);
  std::vector<int> ends(mg.edge_count() + 1, 0);
  for (Vertex u = 0; u < mg.vertex_count(); ++u)
    for (auto id : mg.incident_ids(u)) ++ends[static_cast<std::size_t>(id)];
  CHECK(std::all_of(ends.begin() + 1, ends.end(), [](int h) { return h == 2; }));
}
