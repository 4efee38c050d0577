#include "qospath/color_alt_path.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <utility>

namespace qospath::altpath {

std::optional<TwoBestMode> mode_from_name(std::string_view name) {
  if (name == "dag" || name == "dagTopological") return TwoBestMode::dagTopological;
  if (name == "queue" || name == "queueRelaxation") return TwoBestMode::queueRelaxation;
  return std::nullopt;
}

namespace {

void check_endpoints(const ColoredDigraph& g, Vertex s, Vertex t) {
  const Vertex n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("source or target out of range");
}

// Cost of following e from a walk whose aggregate so far is `c`.
Cost extend(const ColoredDigraph& g, Agg agg, Cost c, const ColoredEdge& e) {
  return combine(agg, c, combine(agg, e.cost, g.vertex_cost(e.v)));
}

// Label records are never modified once created, so predecessor links stay
// valid after a vertex's labels move on.
struct Record {
  Cost cost;
  std::int32_t color;
  EdgeIndex edge;  // -1 for the start label
  int pred;        // record index at the edge's tail, -1 for the start label
};

class TwoBest {
public:
  TwoBest(const ColoredDigraph& g, Vertex s, Agg agg)
      : g_(g), agg_(agg), best_(static_cast<std::size_t>(g.vertex_count()), -1), second_(best_) {
    records_.push_back({g.vertex_cost(s), 0, -1, -1});
    best_[static_cast<std::size_t>(s)] = 0;
  }

  Cost cmin(Vertex i) const { return cost_of(best_[static_cast<std::size_t>(i)]); }
  Cost cmin2(Vertex i) const { return cost_of(second_[static_cast<std::size_t>(i)]); }
  std::int32_t colmin(Vertex i) const { return color_of(best_[static_cast<std::size_t>(i)]); }
  std::int32_t colmin2(Vertex i) const { return color_of(second_[static_cast<std::size_t>(i)]); }
  int best_record(Vertex i) const { return best_[static_cast<std::size_t>(i)]; }
  const Record& record(int r) const { return records_[static_cast<std::size_t>(r)]; }

  // Offers both labels of e's tail to e's head. True if a label of the head
  // changed.
  bool relax(EdgeIndex ei) {
    const auto& e = g_.edge(ei);
    bool changed = false;
    const int from[2] = {best_[static_cast<std::size_t>(e.u)], second_[static_cast<std::size_t>(e.u)]};
    for (int r : from) {
      if (r < 0 || record(r).color == e.color) continue;
      changed |= offer(e.v, {extend(g_, agg_, record(r).cost, e), e.color, ei, r});
    }
    return changed;
  }

private:
  Cost cost_of(int r) const { return r < 0 ? kInfinity : record(r).cost; }
  std::int32_t color_of(int r) const { return r < 0 ? 0 : record(r).color; }

  bool offer(Vertex i, const Record& cand) {
    auto& b = best_[static_cast<std::size_t>(i)];
    auto& s = second_[static_cast<std::size_t>(i)];
    if (cand.cost < cost_of(b)) {
      // The old best survives as runner-up only if its color differs.
      if (cand.color != color_of(b)) s = b;
      records_.push_back(cand);
      b = static_cast<int>(records_.size() - 1);
      return true;
    }
    if (cand.cost < cost_of(s) && cand.color != color_of(b)) {
      records_.push_back(cand);
      s = static_cast<int>(records_.size() - 1);
      return true;
    }
    return false;
  }

  const ColoredDigraph& g_;
  Agg agg_;
  std::vector<int> best_, second_;
  std::vector<Record> records_;
};

std::vector<Vertex> topological_order(const ColoredDigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> indeg(n, 0);
  for (const auto& e : g.edges()) ++indeg[static_cast<std::size_t>(e.v)];
  std::vector<Vertex> order;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(static_cast<Vertex>(v));
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (EdgeIndex ei : g.out_edges(order[head])) {
      const Vertex v = g.edge(ei).v;
      if (--indeg[static_cast<std::size_t>(v)] == 0) order.push_back(v);
    }
  }
  if (order.size() != n) throw CycleError("graph has a directed cycle");
  return order;
}

TwoBest run_two_best(const ColoredDigraph& g, Vertex s, Agg agg, TwoBestMode mode) {
  TwoBest lab(g, s, agg);
  if (mode == TwoBestMode::dagTopological) {
    for (Vertex i : topological_order(g)) {
      if (i == s) continue;
      for (EdgeIndex ei : g.in_edges(i)) lab.relax(ei);
    }
    return lab;
  }
  std::deque<Vertex> queue{s};
  std::vector<char> queued(static_cast<std::size_t>(g.vertex_count()), 0);
  queued[static_cast<std::size_t>(s)] = 1;
  while (!queue.empty()) {
    const Vertex i = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(i)] = 0;
    for (EdgeIndex ei : g.out_edges(i)) {
      const Vertex v = g.edge(ei).v;
      if (lab.relax(ei) && !queued[static_cast<std::size_t>(v)]) {
        queued[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  return lab;
}

PathResult path_from_edges(const ColoredDigraph& g, Vertex s, std::vector<EdgeIndex> edges) {
  std::reverse(edges.begin(), edges.end());
  PathResult p{{s}, std::move(edges)};
  for (EdgeIndex e : p.edges) p.vertices.push_back(g.edge(e).v);
  return p;
}

}  // namespace

std::optional<AltPathResult> alt_path_expanded(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg) {
  check_endpoints(g, s, t);
  const auto colors = static_cast<std::size_t>(g.color_count()) + 1;
  const std::size_t states = static_cast<std::size_t>(g.vertex_count()) * colors;
  auto id = [colors](Vertex v, std::int32_t k) { return static_cast<std::size_t>(v) * colors + static_cast<std::size_t>(k); };

  std::vector<Cost> dist(states, kInfinity);
  std::vector<EdgeIndex> via(states, -1);
  std::vector<std::size_t> from(states, 0);
  using Item = std::pair<Cost, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[id(s, 0)] = 0;
  pq.push({0, id(s, 0)});
  while (!pq.empty()) {
    const auto [d, x] = pq.top();
    pq.pop();
    if (d > dist[x]) continue;
    const auto u = static_cast<Vertex>(x / colors);
    const auto k = static_cast<std::int32_t>(x % colors);
    for (EdgeIndex ei : g.out_edges(u)) {
      const auto& e = g.edge(ei);
      if (e.color == k) continue;
      const Cost nd = combine(agg, d, combine(agg, e.cost, g.vertex_cost(e.v)));
      const std::size_t y = id(e.v, e.color);
      if (nd < dist[y]) {
        dist[y] = nd;
        via[y] = ei;
        from[y] = x;
        pq.push({nd, y});
      }
    }
  }

  std::int32_t best_k = -1;
  for (std::int32_t k = 0; k < static_cast<std::int32_t>(colors); ++k) {
    if (dist[id(t, k)] < kInfinity && (best_k < 0 || dist[id(t, k)] < dist[id(t, best_k)])) best_k = k;
  }
  if (best_k < 0) return std::nullopt;

  std::vector<EdgeIndex> edges;
  for (std::size_t x = id(t, best_k); via[x] >= 0; x = from[x]) edges.push_back(via[x]);
  return AltPathResult{path_from_edges(g, s, std::move(edges)), combine(agg, g.vertex_cost(s), dist[id(t, best_k)])};
}

std::optional<AltPathResult> alt_path_two_best(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg,
                                               TwoBestMode mode) {
  check_endpoints(g, s, t);
  const auto lab = run_two_best(g, s, agg, mode);
  const int r0 = lab.best_record(t);
  if (r0 < 0) return std::nullopt;
  std::vector<EdgeIndex> edges;
  for (int r = r0; lab.record(r).edge >= 0; r = lab.record(r).pred) edges.push_back(lab.record(r).edge);
  return AltPathResult{path_from_edges(g, s, std::move(edges)), lab.record(r0).cost};
}

TwoBestLabels two_best_labels(const ColoredDigraph& g, Vertex s, Agg agg, TwoBestMode mode) {
  check_endpoints(g, s, s);
  const auto lab = run_two_best(g, s, agg, mode);
  TwoBestLabels out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out.cmin.push_back(lab.cmin(v));
    out.cmin2.push_back(lab.cmin2(v));
    out.colmin.push_back(lab.colmin(v));
    out.colmin2.push_back(lab.colmin2(v));
  }
  return out;
}

bool is_alternating_path(const ColoredDigraph& g, const PathResult& p, Vertex s, Vertex t) {
  if (p.vertices.size() != p.edges.size() + 1 || p.vertices.front() != s || p.vertices.back() != t) return false;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    const EdgeIndex ei = p.edges[k];
    if (ei < 0 || static_cast<std::size_t>(ei) >= g.edge_count()) return false;
    const auto& e = g.edge(ei);
    if (e.u != p.vertices[k] || e.v != p.vertices[k + 1]) return false;
    if (k > 0 && g.edge(p.edges[k - 1]).color == e.color) return false;
  }
  return true;
}

Cost alt_path_cost(const ColoredDigraph& g, const PathResult& p, Agg agg) {
  Cost c = g.vertex_cost(p.vertices.front());
  for (EdgeIndex ei : p.edges) c = extend(g, agg, c, g.edge(ei));
  return c;
}

}  // namespace qospath::altpath
