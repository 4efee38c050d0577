#include "qospath/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

namespace qospath::sensitivity {

namespace {

constexpr Cost kTolerance = 1e-9;

void check_endpoints(Vertex n, Vertex s, Vertex t) {
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("source or target out of range");
}

std::vector<Cost> dijkstra(const WeightedDigraph& g, Vertex src) {
  std::vector<Cost> dist(static_cast<std::size_t>(g.vertex_count()), kInfinity);
  using Item = std::pair<Cost, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[static_cast<std::size_t>(src)] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[static_cast<std::size_t>(u)]) continue;
    for (EdgeIndex ei : g.out_edges(u)) {
      const auto& e = g.edge(ei);
      const Cost nd = d + e.w;
      auto& dv = dist[static_cast<std::size_t>(e.v)];
      if (nd < dv) {
        dv = nd;
        pq.push({nd, e.v});
      }
    }
  }
  return dist;
}

// Equality of path lengths: exact when every weight is an integer, else
// within an absolute tolerance.
struct Tightness {
  bool exact = true;

  explicit Tightness(const WeightedDigraph& g) {
    for (const auto& e : g.edges()) {
      if (e.w != std::floor(e.w)) {
        exact = false;
        break;
      }
    }
  }

  bool equal(Cost a, Cost b) const { return exact ? a == b : std::abs(a - b) <= kTolerance; }
};

ElementClassification all_none(const WeightedDigraph& g) {
  return {std::vector<Category>(static_cast<std::size_t>(g.vertex_count()), Category::none),
          std::vector<Category>(g.edge_count(), Category::none)};
}

// Shortest-path subgraph G': tight edges and the vertices they touch.
struct ShortestSubgraph {
  std::vector<char> vertex;
  std::vector<char> edge;
};

ShortestSubgraph shortest_subgraph(const WeightedDigraph& g, const DistanceLabels& d, Vertex t,
                                   const Tightness& tight) {
  const Cost total = d.from_source[static_cast<std::size_t>(t)];
  ShortestSubgraph sub{std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0),
                       std::vector<char>(g.edge_count(), 0)};
  for (std::size_t u = 0; u < sub.vertex.size(); ++u) {
    sub.vertex[u] = tight.equal(d.from_source[u] + d.to_target[u], total);
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    sub.edge[i] = sub.vertex[u] && sub.vertex[v] && tight.equal(d.from_source[u] + e.w + d.to_target[v], total);
  }
  return sub;
}

void require_acyclic(const WeightedDigraph& g, const ShortestSubgraph& sub) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> indeg(n, 0);
  std::size_t members = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (sub.edge[i]) ++indeg[static_cast<std::size_t>(g.edges()[i].v)];
  std::vector<Vertex> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (!sub.vertex[v]) continue;
    ++members;
    if (indeg[v] == 0) ready.push_back(static_cast<Vertex>(v));
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++removed;
    for (EdgeIndex ei : g.out_edges(u)) {
      if (!sub.edge[static_cast<std::size_t>(ei)]) continue;
      if (--indeg[static_cast<std::size_t>(g.edge(ei).v)] == 0) ready.push_back(g.edge(ei).v);
    }
  }
  if (removed != members) throw ZeroWeightCycleError("shortest-path subgraph contains a zero-weight cycle");
}

// Bridges and articulation points of the undirected view of G', searched
// from s with an explicit stack (lowpoint method). Parallel edges are told
// apart by edge index, not by endpoint.
struct CutElements {
  std::vector<char> bridge;
  std::vector<char> cut_vertex;
};

CutElements cut_elements(const WeightedDigraph& g, const ShortestSubgraph& sub, Vertex root) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<EdgeIndex>> inc(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!sub.edge[i]) continue;
    inc[static_cast<std::size_t>(g.edges()[i].u)].push_back(static_cast<EdgeIndex>(i));
    inc[static_cast<std::size_t>(g.edges()[i].v)].push_back(static_cast<EdgeIndex>(i));
  }
  auto other = [&](EdgeIndex e, Vertex u) { return g.edge(e).u == u ? g.edge(e).v : g.edge(e).u; };

  CutElements out{std::vector<char>(g.edge_count(), 0), std::vector<char>(n, 0)};
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeIndex> parent_edge(n, -1);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  int timer = 0;
  int root_children = 0;

  disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
  stack.push_back({root, 0});
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto vi = static_cast<std::size_t>(v);
    if (next < inc[vi].size()) {
      const EdgeIndex e = inc[vi][next++];
      if (e == parent_edge[vi]) continue;
      const Vertex w = other(e, v);
      const auto wi = static_cast<std::size_t>(w);
      if (disc[wi] == -1) {
        parent_edge[wi] = e;
        disc[wi] = low[wi] = timer++;
        if (v == root) ++root_children;
        stack.push_back({w, 0});
      } else {
        low[vi] = std::min(low[vi], disc[wi]);
      }
      continue;
    }
    const Vertex child = v;
    stack.pop_back();
    if (child == root) break;
    const auto ci = static_cast<std::size_t>(child);
    const Vertex p = other(parent_edge[ci], child);
    const auto pi = static_cast<std::size_t>(p);
    low[pi] = std::min(low[pi], low[ci]);
    if (low[ci] > disc[pi]) out.bridge[static_cast<std::size_t>(parent_edge[ci])] = 1;
    if (p != root && low[ci] >= disc[pi]) out.cut_vertex[pi] = 1;
  }
  if (root_children >= 2) out.cut_vertex[static_cast<std::size_t>(root)] = 1;
  return out;
}

ElementClassification trivial_same_endpoint(const WeightedDigraph& g, Vertex s) {
  auto c = all_none(g);
  c.vertex[static_cast<std::size_t>(s)] = Category::every;
  return c;
}

}  // namespace

DistanceLabels distances(const WeightedDigraph& g, Vertex s, Vertex t) {
  check_endpoints(g.vertex_count(), s, t);
  return {dijkstra(g, s), dijkstra(transpose(g), t)};
}

ElementClassification classify_weighted(const WeightedDigraph& g, Vertex s, Vertex t) {
  check_endpoints(g.vertex_count(), s, t);
  if (s == t) return trivial_same_endpoint(g, s);
  const auto d = distances(g, s, t);
  if (d.from_source[static_cast<std::size_t>(t)] == kInfinity) return all_none(g);

  const Tightness tight(g);
  const auto sub = shortest_subgraph(g, d, t, tight);
  require_acyclic(g, sub);
  const auto cuts = cut_elements(g, sub, s);

  auto c = all_none(g);
  for (std::size_t u = 0; u < c.vertex.size(); ++u) {
    if (sub.vertex[u]) c.vertex[u] = cuts.cut_vertex[u] ? Category::every : Category::some;
  }
  c.vertex[static_cast<std::size_t>(s)] = Category::every;
  c.vertex[static_cast<std::size_t>(t)] = Category::every;
  for (std::size_t i = 0; i < c.edge.size(); ++i) {
    if (sub.edge[i]) c.edge[i] = cuts.bridge[i] ? Category::every : Category::some;
  }
  return c;
}

ElementClassification classify_unit(const WeightedDigraph& g, Vertex s, Vertex t) {
  check_endpoints(g.vertex_count(), s, t);
  if (g.edge_count() > 0) {
    const Cost w = g.edges().front().w;
    if (w <= 0) throw std::invalid_argument("uniform edge weight must be positive");
    for (const auto& e : g.edges())
      if (e.w != w) throw std::invalid_argument("classify_unit needs equal edge weights");
  }
  if (s == t) return trivial_same_endpoint(g, s);

  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<Vertex>> rev(n);
  for (const auto& e : g.edges()) rev[static_cast<std::size_t>(e.v)].push_back(e.u);
  auto bfs = [n](Vertex src, auto&& for_each_next) {
    std::vector<std::int64_t> dist(n, -1);
    std::vector<Vertex> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for_each_next(u, [&](Vertex v) {
        auto& dv = dist[static_cast<std::size_t>(v)];
        if (dv == -1) {
          dv = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      });
    }
    return dist;
  };
  const auto ds = bfs(s, [&](Vertex u, auto visit) {
    for (EdgeIndex e : g.out_edges(u)) visit(g.edge(e).v);
  });
  const auto total = ds[static_cast<std::size_t>(t)];
  if (total < 0) return all_none(g);
  const auto dt = bfs(t, [&](Vertex u, auto visit) {
    for (Vertex p : rev[static_cast<std::size_t>(u)]) visit(p);
  });

  auto c = all_none(g);
  std::vector<char> member(n, 0);
  std::vector<std::int64_t> per_level(static_cast<std::size_t>(total) + 1, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (ds[u] >= 0 && dt[u] >= 0 && ds[u] + dt[u] == total) {
      member[u] = 1;
      ++per_level[static_cast<std::size_t>(ds[u])];
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (member[u]) c.vertex[u] = per_level[static_cast<std::size_t>(ds[u])] == 1 ? Category::every : Category::some;
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto u = static_cast<std::size_t>(g.edges()[i].u);
    const auto v = static_cast<std::size_t>(g.edges()[i].v);
    if (!member[u] || !member[v] || ds[u] + 1 + dt[v] != total) continue;
    c.edge[i] = c.vertex[u] == Category::every && c.vertex[v] == Category::every ? Category::every : Category::some;
  }
  return c;
}

ElementClassification classify_undirected(const WeightedGraph& ug, Vertex s, Vertex t, bool unit) {
  const auto view = undirected_to_directed(ug);
  const auto directed = unit ? classify_unit(view.graph, s, t) : classify_weighted(view.graph, s, t);
  ElementClassification c;
  c.vertex = directed.vertex;
  c.edge.assign(ug.edge_count(), Category::none);
  for (std::size_t i = 0; i < directed.edge.size(); ++i) {
    auto& slot = c.edge[static_cast<std::size_t>(view.origin[i])];
    slot = std::min(slot, directed.edge[i]);
  }
  return c;
}

}  // namespace qospath::sensitivity
