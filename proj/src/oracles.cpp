#include "qospath/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

namespace qospath::oracles {

EnumerationBudget EnumerationBudget::from_env(std::size_t max_vertices) {
  EnumerationBudget b;
  b.max_vertices = max_vertices;
  if (const char* raw = std::getenv("QOSPATH_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) b.max_subsets = b.max_paths = static_cast<std::size_t>(v);
  }
  return b;
}

namespace {

void check_size(std::size_t n, const EnumerationBudget& b, const char* what) {
  if (n > b.max_vertices) {
    throw BudgetExceeded(std::string(what) + ": instance has " + std::to_string(n) + " elements, cap is " +
                         std::to_string(b.max_vertices));
  }
}

void count_one(std::size_t& counter, std::size_t cap, const char* what) {
  if (++counter > cap) throw BudgetExceeded(std::string(what) + ": more than " + std::to_string(cap) + " results");
}

}  // namespace

std::vector<EnumeratedPath> enumerate_constrained_paths(const BiweightedDigraph& g, Vertex s, Vertex t,
                                                        EnumerationBudget budget) {
  check_size(static_cast<std::size_t>(g.vertex_count()), budget, "enumerate_constrained_paths");
  std::vector<EnumeratedPath> out;
  std::size_t count = 0;
  EnumeratedPath cur{{s}, {}, 0, 0};
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  on_path[static_cast<std::size_t>(s)] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex u) {
    if (u == t) {
      count_one(count, budget.max_paths, "enumerate_constrained_paths");
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edges()[i];
      if (e.u != u || on_path[static_cast<std::size_t>(e.v)]) continue;
      on_path[static_cast<std::size_t>(e.v)] = 1;
      cur.vertices.push_back(e.v);
      cur.edges.push_back(static_cast<EdgeIndex>(i));
      cur.w1sum += e.w1;
      cur.w2sum += e.w2;
      dfs(e.v);
      cur.w1sum -= e.w1;
      cur.w2sum -= e.w2;
      cur.edges.pop_back();
      cur.vertices.pop_back();
      on_path[static_cast<std::size_t>(e.v)] = 0;
    }
  };
  dfs(s);
  return out;
}

std::vector<std::vector<EdgeIndex>> enumerate_simple_paths(const WeightedDigraph& g, Vertex s, Vertex t,
                                                           EnumerationBudget budget) {
  check_size(static_cast<std::size_t>(g.vertex_count()), budget, "enumerate_simple_paths");
  std::vector<std::vector<EdgeIndex>> out;
  std::size_t count = 0;
  std::vector<EdgeIndex> cur;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  on_path[static_cast<std::size_t>(s)] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex u) {
    if (u == t) {
      count_one(count, budget.max_paths, "enumerate_simple_paths");
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto& e = g.edges()[i];
      if (e.u != u || on_path[static_cast<std::size_t>(e.v)]) continue;
      on_path[static_cast<std::size_t>(e.v)] = 1;
      cur.push_back(static_cast<EdgeIndex>(i));
      dfs(e.v);
      cur.pop_back();
      on_path[static_cast<std::size_t>(e.v)] = 0;
    }
  };
  dfs(s);
  return out;
}

namespace {

// Categories from the minimum-weight simple paths of g; edge_owner maps each
// edge of g to the element it is reported under.
sensitivity::ElementClassification classify_paths(const WeightedDigraph& g, Vertex s, Vertex t,
                                                  const std::vector<std::size_t>& edge_owner,
                                                  std::size_t owners) {
  using sensitivity::Category;
  const auto paths = enumerate_simple_paths(g, s, t);
  sensitivity::ElementClassification c{
      std::vector<Category>(static_cast<std::size_t>(g.vertex_count()), Category::none),
      std::vector<Category>(owners, Category::none)};
  if (paths.empty()) return c;
  std::vector<Cost> length;
  for (const auto& p : paths) {
    Cost sum = 0;
    for (EdgeIndex e : p) sum += g.edge(e).w;
    length.push_back(sum);
  }
  const Cost best = *std::min_element(length.begin(), length.end());
  std::vector<std::size_t> vertex_hits(c.vertex.size(), 0), edge_hits(owners, 0);
  std::size_t shortest = 0;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (std::abs(length[k] - best) > 1e-9) continue;
    ++shortest;
    ++vertex_hits[static_cast<std::size_t>(s)];
    for (EdgeIndex e : paths[k]) {
      ++edge_hits[edge_owner[static_cast<std::size_t>(e)]];
      ++vertex_hits[static_cast<std::size_t>(g.edge(e).v)];
    }
  }
  auto category = [shortest](std::size_t hits) {
    return hits == shortest ? Category::every : hits > 0 ? Category::some : Category::none;
  };
  for (std::size_t v = 0; v < c.vertex.size(); ++v) c.vertex[v] = category(vertex_hits[v]);
  for (std::size_t e = 0; e < owners; ++e) c.edge[e] = category(edge_hits[e]);
  return c;
}

}  // namespace

sensitivity::ElementClassification classify_by_enumeration(const WeightedDigraph& g, Vertex s, Vertex t) {
  std::vector<std::size_t> owner(g.edge_count());
  std::iota(owner.begin(), owner.end(), 0);
  return classify_paths(g, s, t, owner, g.edge_count());
}

sensitivity::ElementClassification classify_undirected_by_enumeration(const WeightedGraph& ug, Vertex s, Vertex t) {
  std::vector<WeightedEdge> arcs;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < ug.edge_count(); ++k) {
    const auto& e = ug.edges()[k];
    arcs.push_back({e.u, e.v, e.w});
    arcs.push_back({e.v, e.u, e.w});
    owner.insert(owner.end(), {k, k});
  }
  return classify_paths(WeightedDigraph(ug.vertex_count(), std::move(arcs)), s, t, owner, ug.edge_count());
}

std::vector<std::uint32_t> enumerate_subsets(const std::vector<std::int64_t>& w, std::int64_t S,
                                             EnumerationBudget budget) {
  check_size(w.size(), budget, "enumerate_subsets");
  const std::uint32_t total = 1u << w.size();
  if (total > budget.max_subsets) throw BudgetExceeded("enumerate_subsets: too many subsets");
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask >> i & 1u) sum += w[i];
    if (sum == S) out.push_back(mask);
  }
  return out;
}

std::vector<std::uint32_t> enumerate_min_cost_subsets(const std::vector<std::int64_t>& w,
                                                      const std::vector<std::int64_t>& cost, std::int64_t S,
                                                      EnumerationBudget budget) {
  const auto all = enumerate_subsets(w, S, budget);
  auto cost_of = [&](std::uint32_t mask) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (mask >> i & 1u) c += cost[i];
    return c;
  };
  std::vector<std::uint32_t> out;
  std::int64_t best = 0;
  for (auto mask : all) {
    const auto c = cost_of(mask);
    if (out.empty() || c < best) {
      out.assign(1, mask);
      best = c;
    } else if (c == best) {
      out.push_back(mask);
    }
  }
  return out;
}

std::vector<sensitivity::Category> classify_knapsack_by_enumeration(const knapsack::KnapsackInstance& inst) {
  using sensitivity::Category;
  const auto solutions = inst.cost ? enumerate_min_cost_subsets(inst.weight, *inst.cost, inst.target)
                                   : enumerate_subsets(inst.weight, inst.target);
  std::vector<Category> out(inst.size(), Category::none);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto hits = static_cast<std::size_t>(
        std::count_if(solutions.begin(), solutions.end(), [i](std::uint32_t m) { return (m >> i & 1u) != 0; }));
    if (hits == 0) continue;
    out[i] = hits == solutions.size() ? Category::every : Category::some;
  }
  return out;
}

namespace {

// Dense edge lookup: weight of u -> v, or nullopt.
std::vector<std::vector<std::optional<Cost>>> weight_matrix(const WeightedDigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<std::optional<Cost>>> m(n, std::vector<std::optional<Cost>>(n));
  for (const auto& e : g.edges()) m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.w;
  return m;
}

// Calls visit(tuple) for every ordered q-tuple of distinct vertices whose
// consecutive pairs are edges.
void for_each_tuple(const WeightedDigraph& g, int q, const EnumerationBudget& budget,
                    const std::function<void(const std::vector<Vertex>&)>& visit) {
  check_size(static_cast<std::size_t>(g.vertex_count()), budget, "q-tuple enumeration");
  const auto m = weight_matrix(g);
  std::vector<Vertex> tuple;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::size_t count = 0;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(tuple.size()) == q) {
      count_one(count, budget.max_paths, "q-tuple enumeration");
      visit(tuple);
      return;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (!tuple.empty() && !m[static_cast<std::size_t>(tuple.back())][static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      tuple.push_back(v);
      rec();
      tuple.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec();
}

}  // namespace

std::optional<Cost> enumerate_q_path(const WeightedDigraph& g, int q, Agg agg, EnumerationBudget budget) {
  const auto m = weight_matrix(g);
  std::optional<Cost> best;
  for_each_tuple(g, q, budget, [&](const std::vector<Vertex>& tup) {
    Cost c = 0;
    for (std::size_t k = 0; k < tup.size(); ++k) {
      c = combine(agg, c, g.vertex_cost(tup[k]));
      if (k > 0) c = combine(agg, c, *m[static_cast<std::size_t>(tup[k - 1])][static_cast<std::size_t>(tup[k])]);
    }
    if (!best || c < *best) best = c;
  });
  return best;
}

std::optional<Cost> enumerate_q_cycle(const WeightedDigraph& g, int q, Agg agg, EnumerationBudget budget) {
  if (q < 2) return std::nullopt;
  const auto m = weight_matrix(g);
  std::optional<Cost> best;
  for_each_tuple(g, q, budget, [&](const std::vector<Vertex>& tup) {
    const auto& close = m[static_cast<std::size_t>(tup.back())][static_cast<std::size_t>(tup.front())];
    if (!close) return;
    Cost c = *close;
    for (std::size_t k = 0; k < tup.size(); ++k) {
      c = combine(agg, c, g.vertex_cost(tup[k]));
      if (k > 0) c = combine(agg, c, *m[static_cast<std::size_t>(tup[k - 1])][static_cast<std::size_t>(tup[k])]);
    }
    if (!best || c < *best) best = c;
  });
  return best;
}

std::optional<Cost> alt_walk_by_rounds(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const auto colors = static_cast<std::size_t>(g.color_count()) + 1;
  std::vector<std::vector<Cost>> best(n, std::vector<Cost>(colors, kInfinity));
  best[static_cast<std::size_t>(s)][0] = g.vertex_cost(s);
  for (std::size_t round = 0; round < n * colors; ++round) {
    auto next = best;
    bool changed = false;
    for (const auto& e : g.edges()) {
      for (std::size_t k = 0; k < colors; ++k) {
        if (static_cast<std::int32_t>(k) == e.color) continue;
        const Cost from = best[static_cast<std::size_t>(e.u)][k];
        if (from == kInfinity) continue;
        const Cost c = combine(agg, combine(agg, from, e.cost), g.vertex_cost(e.v));
        auto& slot = next[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.color)];
        if (c < slot) {
          slot = c;
          changed = true;
        }
      }
    }
    best = std::move(next);
    if (!changed) break;
  }
  const auto& at_t = best[static_cast<std::size_t>(t)];
  const Cost c = *std::min_element(at_t.begin(), at_t.end());
  if (c == kInfinity) return std::nullopt;
  return c;
}

std::optional<Cost> alt_simple_path(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg,
                                    EnumerationBudget budget) {
  check_size(static_cast<std::size_t>(g.vertex_count()), budget, "alt_simple_path");
  std::optional<Cost> best;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  std::size_t count = 0;
  std::function<void(Vertex, std::int32_t, Cost)> dfs = [&](Vertex u, std::int32_t last, Cost c) {
    if (u == t) {
      count_one(count, budget.max_paths, "alt_simple_path");
      if (!best || c < *best) best = c;
      return;
    }
    for (const auto& e : g.edges()) {
      if (e.u != u || e.color == last || on_path[static_cast<std::size_t>(e.v)]) continue;
      on_path[static_cast<std::size_t>(e.v)] = 1;
      dfs(e.v, e.color, combine(agg, combine(agg, c, e.cost), g.vertex_cost(e.v)));
      on_path[static_cast<std::size_t>(e.v)] = 0;
    }
  };
  on_path[static_cast<std::size_t>(s)] = 1;
  dfs(s, 0, g.vertex_cost(s));
  return best;
}

std::size_t count_tournament_ham_paths(const std::vector<std::vector<int>>& m) {
  if (m.size() > 9) throw BudgetExceeded("count_tournament_ham_paths: n > 9");
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t k = 0; k + 1 < order.size() && ok; ++k) ok = m[order[k]][order[k + 1]] == 1;
    count += ok ? 1 : 0;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

std::vector<std::vector<int>> hop_distances(const WeightedGraph& ug) {
  const auto n = static_cast<std::size_t>(ug.vertex_count());
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : ug.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(static_cast<std::size_t>(e.v));
    adj[static_cast<std::size_t>(e.v)].push_back(static_cast<std::size_t>(e.u));
  }
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (std::size_t src = 0; src < n; ++src) {
    std::vector<std::size_t> queue{src};
    d[src][src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto w : adj[queue[head]]) {
        if (d[src][w] == -1) {
          d[src][w] = d[src][queue[head]] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return d;
}

bool alt_euler_exists(const ColoredMultigraph& g) {
  const std::size_t m = g.edge_count();
  if (m == 0) return true;
  if (m > 12) throw BudgetExceeded("alt_euler_exists: more than 12 edges");
  std::vector<char> used(m + 1, 0);
  const auto& first = g.by_id(1);
  // The cycle can be rotated to start with edge 1; both directions are tried.
  std::function<bool(Vertex, Vertex, std::int32_t, std::size_t)> extend = [&](Vertex start, Vertex at,
                                                                              std::int32_t last, std::size_t n_used) {
    if (n_used == m) return at == start && last != first.color;
    for (std::int32_t id = 2; id <= static_cast<std::int32_t>(m); ++id) {
      if (used[static_cast<std::size_t>(id)]) continue;
      const auto& e = g.by_id(id);
      if (e.color == last || (e.u != at && e.v != at)) continue;
      used[static_cast<std::size_t>(id)] = 1;
      const bool found = extend(start, e.u == at ? e.v : e.u, e.color, n_used + 1);
      used[static_cast<std::size_t>(id)] = 0;
      if (found) return true;
    }
    return false;
  };
  used[1] = 1;
  if (extend(first.u, first.v, first.color, 1)) return true;
  return first.u != first.v && extend(first.v, first.u, first.color, 1);
}

}  // namespace qospath::oracles
