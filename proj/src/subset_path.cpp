#include "qospath/subset_path.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace qospath::subset {

namespace {

struct InEdge {
  Vertex from;
  EdgeIndex edge;
};

struct Prepared {
  std::size_t n;
  std::uint32_t usable;  // vertex_mask restricted to the graph
  std::vector<std::vector<InEdge>> in;
};

Prepared prepare(const WeightedDigraph& g, const SubsetQuery& q, int min_q, Vertex max_n) {
  const Vertex n = g.vertex_count();
  if (n > max_n) throw std::length_error("subset DP supports at most " + std::to_string(max_n) + " vertices");
  if (q.q < min_q || q.q > n) throw std::invalid_argument("q must lie in [" + std::to_string(min_q) + ", n]");
  Prepared p{static_cast<std::size_t>(n), 0, std::vector<std::vector<InEdge>>(static_cast<std::size_t>(n))};
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  p.usable = q.vertex_mask & all;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    p.in[static_cast<std::size_t>(e.v)].push_back({e.u, static_cast<EdgeIndex>(i)});
  }
  return p;
}

bool bit(std::uint32_t mask, std::size_t v) { return ((mask >> v) & 1u) != 0; }

bool accepted(const SubsetQuery& q, std::uint32_t mask) { return !q.allowed || q.allowed(mask); }

// best[mask * n + i]: cheapest path over exactly `mask` ending at i. With
// `anchored` the path must start at the smallest vertex of the mask.
struct Table {
  std::vector<Cost> best;
  std::vector<std::int8_t> parent;  // predecessor vertex, -1 at the start
};

Table fill(const WeightedDigraph& g, const Prepared& p, const SubsetQuery& q, bool anchored) {
  const std::size_t n = p.n;
  const std::size_t masks = std::size_t{1} << n;
  Table t{std::vector<Cost>(masks * n, kInfinity), std::vector<std::int8_t>(masks * n, -1)};
  for (std::size_t i = 0; i < n; ++i) {
    if (bit(p.usable, i)) t.best[(std::size_t{1} << i) * n + i] = g.vertex_cost(static_cast<Vertex>(i));
  }
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    if ((mask & ~p.usable) != 0) continue;
    const int size = std::popcount(mask);
    if (size < 2 || size > q.q) continue;
    const std::size_t anchor = static_cast<std::size_t>(std::countr_zero(mask));
    for (std::size_t i = 0; i < n; ++i) {
      if (!bit(mask, i) || (anchored && i == anchor)) continue;
      const std::uint32_t rest = mask & ~(1u << i);
      Cost best = kInfinity;
      for (const auto& [j, e] : p.in[i]) {
        if (!bit(rest, static_cast<std::size_t>(j))) continue;
        const Cost c = combine(q.agg, t.best[rest * n + static_cast<std::size_t>(j)], g.edge(e).w);
        if (c < best) {
          best = c;
          t.parent[mask * n + i] = static_cast<std::int8_t>(j);
        }
      }
      if (best < kInfinity) t.best[mask * n + i] = combine(q.agg, g.vertex_cost(static_cast<Vertex>(i)), best);
    }
  }
  return t;
}

std::optional<EdgeIndex> find_edge(const WeightedDigraph& g, Vertex u, Vertex v) {
  for (EdgeIndex e : g.out_edges(u))
    if (g.edge(e).v == v) return e;
  return std::nullopt;
}

PathResult unwind(const WeightedDigraph& g, const Table& t, std::size_t n, std::uint32_t mask, std::size_t end) {
  PathResult r;
  std::size_t i = end;
  while (true) {
    r.vertices.push_back(static_cast<Vertex>(i));
    const auto pv = t.parent[mask * n + i];
    if (pv < 0) break;
    r.edges.push_back(*find_edge(g, static_cast<Vertex>(pv), static_cast<Vertex>(i)));
    mask &= ~(1u << i);
    i = static_cast<std::size_t>(pv);
  }
  std::reverse(r.vertices.begin(), r.vertices.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

}  // namespace

std::optional<SubsetAnswer> min_q_path(const WeightedDigraph& g, const SubsetQuery& query) {
  const auto p = prepare(g, query, 1, kMaxVertices);
  if (query.q == 1) {
    std::optional<SubsetAnswer> best;
    for (std::size_t u = 0; u < p.n; ++u) {
      if (!bit(p.usable, u) || !accepted(query, 1u << u)) continue;
      const Cost c = g.vertex_cost(static_cast<Vertex>(u));
      if (!best || c < best->cost) best = SubsetAnswer{{{static_cast<Vertex>(u)}, {}}, c};
    }
    return best;
  }
  const auto t = fill(g, p, query, false);
  std::optional<SubsetAnswer> best;
  std::uint32_t best_mask = 0;
  std::size_t best_end = 0;
  for (std::uint32_t mask = 1; mask < (1u << p.n); ++mask) {
    if (std::popcount(mask) != query.q || (mask & ~p.usable) != 0) continue;
    if (!accepted(query, mask)) continue;
    for (std::size_t i = 0; i < p.n; ++i) {
      const Cost c = t.best[mask * p.n + i];
      if (bit(mask, i) && c < kInfinity && (!best || c < best->cost)) {
        best = SubsetAnswer{{}, c};
        best_mask = mask;
        best_end = i;
      }
    }
  }
  if (best) best->walk = unwind(g, t, p.n, best_mask, best_end);
  return best;
}

std::optional<SubsetAnswer> min_q_cycle(const WeightedDigraph& g, const SubsetQuery& query) {
  const auto p = prepare(g, query, 2, kMaxVertices);
  const auto t = fill(g, p, query, true);
  std::optional<SubsetAnswer> best;
  std::uint32_t best_mask = 0;
  std::size_t best_end = 0;
  EdgeIndex best_close = -1;
  for (std::uint32_t mask = 1; mask < (1u << p.n); ++mask) {
    if (std::popcount(mask) != query.q || (mask & ~p.usable) != 0) continue;
    if (!accepted(query, mask)) continue;
    const auto anchor = static_cast<Vertex>(std::countr_zero(mask));
    for (std::size_t i = 0; i < p.n; ++i) {
      if (!bit(mask, i) || static_cast<Vertex>(i) == anchor) continue;
      const Cost open = t.best[mask * p.n + i];
      if (open == kInfinity) continue;
      const auto close = find_edge(g, static_cast<Vertex>(i), anchor);
      if (!close) continue;
      const Cost c = combine(query.agg, open, g.edge(*close).w);
      if (!best || c < best->cost) {
        best = SubsetAnswer{{}, c};
        best_mask = mask;
        best_end = i;
        best_close = *close;
      }
    }
  }
  if (best) {
    best->walk = unwind(g, t, p.n, best_mask, best_end);
    best->walk.edges.push_back(best_close);
  }
  return best;
}

std::optional<Cost> min_q_cycle_pair_table(const WeightedDigraph& g, const SubsetQuery& query) {
  const auto p = prepare(g, query, 2, 12);
  const std::size_t n = p.n;
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::vector<InEdge>> out(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    out[static_cast<std::size_t>(e.u)].push_back({e.v, static_cast<EdgeIndex>(i)});
  }
  std::vector<Cost> cmin(masks * n * n, kInfinity);
  auto at = [n](std::size_t mask, std::size_t i, std::size_t j) { return (mask * n + i) * n + j; };
  for (std::size_t i = 0; i < n; ++i) {
    if (bit(p.usable, i)) cmin[at(std::size_t{1} << i, i, i)] = g.vertex_cost(static_cast<Vertex>(i));
  }
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    if ((mask & ~p.usable) != 0) continue;
    const int size = std::popcount(mask);
    if (size < 2 || size > query.q) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!bit(mask, i)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !bit(mask, j)) continue;
        Cost u = kInfinity;  // extend at j
        const std::uint32_t without_j = mask & ~(1u << j);
        for (const auto& [k, e] : p.in[j]) {
          if (bit(without_j, static_cast<std::size_t>(k))) {
            u = std::min(u, combine(query.agg, cmin[at(without_j, i, static_cast<std::size_t>(k))], g.edge(e).w));
          }
        }
        Cost v = kInfinity;  // extend at i
        const std::uint32_t without_i = mask & ~(1u << i);
        for (const auto& [k, e] : out[i]) {
          if (bit(without_i, static_cast<std::size_t>(k))) {
            v = std::min(v, combine(query.agg, cmin[at(without_i, static_cast<std::size_t>(k), j)], g.edge(e).w));
          }
        }
        Cost best = kInfinity;
        if (u < kInfinity) best = combine(query.agg, g.vertex_cost(static_cast<Vertex>(j)), u);
        if (v < kInfinity) best = std::min(best, combine(query.agg, g.vertex_cost(static_cast<Vertex>(i)), v));
        cmin[at(mask, i, j)] = best;
      }
    }
  }
  std::optional<Cost> best;
  for (std::uint32_t mask = 1; mask < masks; ++mask) {
    if (std::popcount(mask) != query.q || (mask & ~p.usable) != 0 || !accepted(query, mask)) continue;
    for (const auto& e : g.edges()) {
      const auto i = static_cast<std::size_t>(e.v);
      const auto j = static_cast<std::size_t>(e.u);
      if (!bit(mask, i) || !bit(mask, j)) continue;
      const Cost open = cmin[at(mask, i, j)];
      if (open == kInfinity) continue;
      const Cost c = combine(query.agg, open, e.w);
      if (!best || c < *best) best = c;
    }
  }
  return best;
}

Cost walk_cost(const WeightedDigraph& g, const PathResult& walk, Agg agg) {
  if (walk.vertices.empty()) return 0;
  Cost c = g.vertex_cost(walk.vertices.front());
  for (std::size_t k = 1; k < walk.vertices.size(); ++k) c = combine(agg, c, g.vertex_cost(walk.vertices[k]));
  for (EdgeIndex e : walk.edges) c = combine(agg, c, g.edge(e).w);
  return c;
}

}  // namespace qospath::subset
