#pragma once

// Random instance generators shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qospath/graph.hpp"

namespace qospath::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Up to m distinct ordered pairs (u, v), u != v. With `forward_only` every
// pair has u < v, which makes the graph acyclic.
inline std::vector<std::pair<Vertex, Vertex>> random_arcs(Rng& rng, Vertex n, int m, bool forward_only) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && (!forward_only || u < v)) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  if (static_cast<int>(all.size()) > m) all.resize(static_cast<std::size_t>(m));
  return all;
}

inline BiweightedDigraph random_biweighted(Rng& rng, Vertex n, int m, int wmax, bool acyclic = false) {
  std::vector<BiweightedEdge> edges;
  for (auto [u, v] : random_arcs(rng, n, m, acyclic))
    edges.push_back({u, v, static_cast<std::uint64_t>(uniform(rng, 0, wmax)),
                     static_cast<std::uint64_t>(uniform(rng, 0, wmax))});
  return BiweightedDigraph(n, std::move(edges));
}

inline WeightedDigraph random_weighted(Rng& rng, Vertex n, int m, int wmin, int wmax, bool vertex_costs = false,
                                       bool acyclic = false) {
  std::vector<WeightedEdge> edges;
  for (auto [u, v] : random_arcs(rng, n, m, acyclic)) edges.push_back({u, v, Cost(uniform(rng, wmin, wmax))});
  std::optional<std::vector<Cost>> cn;
  if (vertex_costs) {
    cn.emplace();
    for (Vertex v = 0; v < n; ++v) cn->push_back(uniform(rng, 0, wmax));
  }
  return WeightedDigraph(n, std::move(edges), std::move(cn));
}

inline WeightedGraph random_undirected(Rng& rng, Vertex n, int m, int wmin, int wmax) {
  std::vector<WeightedEdge> edges;
  for (auto [u, v] : random_arcs(rng, n, m, true)) edges.push_back({u, v, Cost(uniform(rng, wmin, wmax))});
  return WeightedGraph(n, std::move(edges));
}

// Random spanning tree (each vertex attaches to an earlier one, ids shuffled)
// plus `extra` random edges.
inline WeightedGraph random_connected(Rng& rng, Vertex n, int extra) {
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<WeightedEdge> edges;
  auto add = [&](Vertex a, Vertex b) {
    if (a == b) return;
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return;
    edges.push_back({a, b, 1});
  };
  for (Vertex i = 1; i < n; ++i) add(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(uniform(rng, 0, i - 1))]);
  for (int k = 0; k < extra && n > 1; ++k) add(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
  return WeightedGraph(n, std::move(edges));
}

inline ColoredDigraph random_colored(Rng& rng, Vertex n, int m, int colors, int cmax, bool acyclic) {
  std::vector<ColoredEdge> edges;
  for (auto [u, v] : random_arcs(rng, n, m, acyclic))
    edges.push_back({u, v, Cost(uniform(rng, 0, cmax)), uniform(rng, 1, colors)});
  std::vector<Cost> cn;
  for (Vertex v = 0; v < n; ++v) cn.push_back(uniform(rng, 0, cmax));
  return ColoredDigraph(n, colors, std::move(cn), std::move(edges));
}

// Union of random closed trails, each alternating between two colors and
// starting at a vertex already touched by an earlier trail. Every vertex's
// edge ends therefore split into bichromatic pairs, so the result always
// admits a color-alternating Euler cycle. Roughly m edges.
inline ColoredMultigraph random_alt_euler_instance(Rng& rng, Vertex n, int m, int colors) {
  std::vector<MultigraphEdge> edges;
  std::vector<Vertex> touched{static_cast<Vertex>(uniform(rng, 0, n - 1))};
  while (static_cast<int>(edges.size()) < m) {
    const int room = m - static_cast<int>(edges.size());
    int len = 2 * uniform(rng, 1, std::max(1, std::min(6, room / 2)));
    const int c1 = uniform(rng, 1, colors);
    int c2 = uniform(rng, 1, colors - 1);
    if (c2 >= c1) ++c2;
    std::vector<Vertex> trail{touched[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(touched.size()) - 1))]};
    for (int k = 1; k < len; ++k) trail.push_back(static_cast<Vertex>(uniform(rng, 0, n - 1)));
    for (int k = 0; k < len; ++k) {
      const Vertex a = trail[static_cast<std::size_t>(k)];
      const Vertex b = trail[static_cast<std::size_t>((k + 1) % len)];
      edges.push_back({static_cast<std::int32_t>(edges.size()) + 1, a, b, k % 2 == 0 ? c1 : c2});
      touched.push_back(b);
    }
  }
  // Present the edges in a scrambled order with scrambled ids.
  std::vector<std::int32_t> ids(edges.size());
  std::iota(ids.begin(), ids.end(), 1);
  std::shuffle(ids.begin(), ids.end(), rng);
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k].id = ids[k];
  std::shuffle(edges.begin(), edges.end(), rng);
  return ColoredMultigraph(n, colors, std::move(edges));
}

// -- mutations that break exactly one feasibility condition ------------------

// Drops a non-loop edge and renumbers ids densely; its endpoints become odd.
inline ColoredMultigraph drop_edge(const ColoredMultigraph& g, std::size_t slot) {
  auto edges = g.edges();
  const auto removed = edges[slot].id;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(slot));
  for (auto& e : edges)
    if (e.id == static_cast<std::int32_t>(g.edge_count())) e.id = removed;
  return ColoredMultigraph(g.vertex_count(), g.color_count(), std::move(edges));
}

// Adds two new vertices joined by a bichromatic pair of parallel edges.
inline ColoredMultigraph add_far_component(const ColoredMultigraph& g) {
  auto edges = g.edges();
  const Vertex n = g.vertex_count();
  const auto m = static_cast<std::int32_t>(edges.size());
  edges.push_back({m + 1, n, n + 1, 1});
  edges.push_back({m + 2, n + 1, n, 2});
  return ColoredMultigraph(n + 2, std::max(2, g.color_count()), std::move(edges));
}

// Recolors every edge at x with color 1.
inline ColoredMultigraph monochrome_at(const ColoredMultigraph& g, Vertex x) {
  auto edges = g.edges();
  for (auto& e : edges)
    if (e.u == x || e.v == x) e.color = 1;
  return ColoredMultigraph(g.vertex_count(), g.color_count(), std::move(edges));
}

}  // namespace qospath::testing
