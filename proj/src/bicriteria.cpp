#include "qospath/bicriteria.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <utility>

namespace qospath::bicriteria {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::exactAtX0: return "exactAtX0";
    case Status::foundBySearch: return "foundBySearch";
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr int kHalvings = 64;
constexpr int kMaxDoublings = 128;

struct Label {
  std::uint64_t w1 = 0;
  std::uint64_t w2 = 0;
};

int three_way(std::uint64_t a, std::uint64_t b) { return (a > b) - (a < b); }

double signed_diff(std::uint64_t a, std::uint64_t b) {
  return static_cast<double>(static_cast<std::int64_t>(a - b));
}

// Total preorder on labels. compare(a, b) < 0 means a is preferred.
//   key 1: blended cost w1 + x*w2, or +/-w2 when x is infinite
//   key 2: w1, only when x is infinite (the limit ordering)
//   key 3: w2 tie-break
// `keys` limits how many keys participate; negative-cycle probes use 1.
struct LabelOrder {
  double x = 0;
  bool maximize = false;
  TieBreak tie = TieBreak::smallerW2;
  int keys = 3;

  int compare(const Label& a, const Label& b) const {
    int primary;
    if (std::isinf(x)) {
      primary = x > 0 ? three_way(a.w2, b.w2) : three_way(b.w2, a.w2);
      if (primary == 0 && keys >= 2) primary = three_way(a.w1, b.w1);
    } else {
      // fma rounds once, so the sign of the exact difference is preserved.
      const double d = std::fma(x, signed_diff(a.w2, b.w2), signed_diff(a.w1, b.w1));
      primary = (d > 0) - (d < 0);
    }
    if (maximize) primary = -primary;
    if (primary != 0 || keys < 3) return primary;
    const int t = three_way(a.w2, b.w2);
    return tie == TieBreak::smallerW2 ? t : -t;
  }

  bool better(const Label& a, const Label& b) const { return compare(a, b) < 0; }
};

Label extend(const Label& l, const BiweightedEdge& e) { return {l.w1 + e.w1, l.w2 + e.w2}; }

struct Tree {
  std::vector<Label> label;
  std::vector<char> reached;
  std::vector<EdgeIndex> pred;

  explicit Tree(Vertex n)
      : label(static_cast<std::size_t>(n)), reached(static_cast<std::size_t>(n), 0),
        pred(static_cast<std::size_t>(n), -1) {}
};

std::optional<std::vector<Vertex>> topological_order(const BiweightedDigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> indeg(n, 0);
  for (const auto& e : g.edges()) ++indeg[static_cast<std::size_t>(e.v)];
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(static_cast<Vertex>(v));
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (EdgeIndex e : g.out_edges(order[head])) {
      auto v = static_cast<std::size_t>(g.edge(e).v);
      if (--indeg[v] == 0) order.push_back(static_cast<Vertex>(v));
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

void relax_topological(const BiweightedDigraph& g, const std::vector<Vertex>& order, const LabelOrder& ord,
                       Tree& tree) {
  for (Vertex u : order) {
    if (!tree.reached[static_cast<std::size_t>(u)]) continue;
    for (EdgeIndex ei : g.out_edges(u)) {
      const auto& e = g.edge(ei);
      const auto v = static_cast<std::size_t>(e.v);
      const Label cand = extend(tree.label[static_cast<std::size_t>(u)], e);
      if (!tree.reached[v] || ord.better(cand, tree.label[v])) {
        tree.label[v] = cand;
        tree.reached[v] = 1;
        tree.pred[v] = ei;
      }
    }
  }
}

// Label-setting search. Only valid when no cycle can be improving, i.e. for
// non-negative blended costs with a tie-break that cannot reward a zero-cost
// cycle. Improved vertices are pushed again (lazy deletion).
void relax_label_setting(const BiweightedDigraph& g, const LabelOrder& ord, Tree& tree, Vertex s) {
  struct Item {
    Label label;
    Vertex v;
  };
  auto worse = [&](const Item& a, const Item& b) { return ord.compare(a.label, b.label) > 0; };
  std::priority_queue<Item, std::vector<Item>, decltype(worse)> pq(worse);
  pq.push({tree.label[static_cast<std::size_t>(s)], s});
  while (!pq.empty()) {
    auto [lab, u] = pq.top();
    pq.pop();
    const auto& cur = tree.label[static_cast<std::size_t>(u)];
    if (cur.w1 != lab.w1 || cur.w2 != lab.w2) continue;
    for (EdgeIndex ei : g.out_edges(u)) {
      const auto& e = g.edge(ei);
      const auto v = static_cast<std::size_t>(e.v);
      const Label cand = extend(lab, e);
      if (!tree.reached[v] || ord.better(cand, tree.label[v])) {
        tree.label[v] = cand;
        tree.reached[v] = 1;
        tree.pred[v] = ei;
        pq.push({cand, e.v});
      }
    }
  }
}

// Queue-based label-correcting relaxation (Bellman-Ford-Moore). Returns false
// if some vertex is relabelled more than n times, i.e. an improving cycle is
// reachable from the initial queue.
bool relax_label_correcting(const BiweightedDigraph& g, const LabelOrder& ord, Tree& tree,
                            std::deque<Vertex> queue) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> queued(n, 0);
  std::vector<std::size_t> relabels(n, 0);
  for (Vertex v : queue) queued[static_cast<std::size_t>(v)] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(u)] = 0;
    for (EdgeIndex ei : g.out_edges(u)) {
      const auto& e = g.edge(ei);
      const auto v = static_cast<std::size_t>(e.v);
      const Label cand = extend(tree.label[static_cast<std::size_t>(u)], e);
      if (tree.reached[v] && !ord.better(cand, tree.label[v])) continue;
      tree.label[v] = cand;
      tree.reached[v] = 1;
      tree.pred[v] = ei;
      if (++relabels[v] > n) return false;
      if (!queued[v]) {
        queued[v] = 1;
        queue.push_back(e.v);
      }
    }
  }
  return true;
}

WeightedPath extract_path(const BiweightedDigraph& g, const Tree& tree, Vertex s, Vertex t) {
  WeightedPath out;
  const auto& lab = tree.label[static_cast<std::size_t>(t)];
  out.w1sum = lab.w1;
  out.w2sum = lab.w2;
  Vertex v = t;
  std::size_t steps = 0;
  while (v != s) {
    const EdgeIndex e = tree.pred[static_cast<std::size_t>(v)];
    if (e == -1 || ++steps > static_cast<std::size_t>(g.vertex_count())) {
      throw std::logic_error("predecessor chain does not lead back to the source");
    }
    out.path.edges.push_back(e);
    v = g.edge(e).u;
  }
  std::reverse(out.path.edges.begin(), out.path.edges.end());
  out.path.vertices.push_back(s);
  for (EdgeIndex e : out.path.edges) out.path.vertices.push_back(g.edge(e).v);
  return out;
}

void check_endpoints(const BiweightedDigraph& g, Vertex s, Vertex t) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count()) {
    throw InvalidQueryError("source or target out of range");
  }
}

std::optional<WeightedPath> optimal_path(const BiweightedDigraph& g, Vertex s, Vertex t, const LabelOrder& ord) {
  check_endpoints(g, s, t);
  Tree tree(g.vertex_count());
  tree.reached[static_cast<std::size_t>(s)] = 1;
  if (auto order = topological_order(g)) {
    relax_topological(g, *order, ord, tree);
  } else if (ord.maximize) {
    throw InvalidQueryError("longest paths require an acyclic graph");
  } else if (ord.x > 0 || (ord.x == 0 && ord.tie == TieBreak::smallerW2)) {
    relax_label_setting(g, ord, tree, s);
  } else if (!relax_label_correcting(g, ord, tree, {s})) {
    throw NegativeCycleError("improving cycle reachable from the source at x = " + format_cost(ord.x));
  }
  if (!tree.reached[static_cast<std::size_t>(t)]) return std::nullopt;
  return extract_path(g, tree, s, t);
}

// Vertices on some s -> t walk, with the edges among them. Edge indices of
// the subgraph map back through `original`.
struct RelevantPart {
  BiweightedDigraph graph;
  std::vector<EdgeIndex> original;
  bool target_reachable = false;
};

RelevantPart relevant_part(const BiweightedDigraph& g, Vertex s, Vertex t) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::vector<Vertex>> rev(n);
  for (const auto& e : g.edges()) rev[static_cast<std::size_t>(e.v)].push_back(e.u);
  auto sweep = [n](Vertex start, auto&& next) {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      next(u, [&](Vertex v) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      });
    }
    return seen;
  };
  auto fwd = sweep(s, [&](Vertex u, auto visit) {
    for (EdgeIndex e : g.out_edges(u)) visit(g.edge(e).v);
  });
  auto bwd = sweep(t, [&](Vertex u, auto visit) {
    for (Vertex p : rev[static_cast<std::size_t>(u)]) visit(p);
  });
  RelevantPart part;
  part.target_reachable = fwd[static_cast<std::size_t>(t)] != 0;
  std::vector<BiweightedEdge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (fwd[u] && bwd[u] && fwd[v] && bwd[v]) {
      edges.push_back(e);
      part.original.push_back(static_cast<EdgeIndex>(i));
    }
  }
  part.graph = BiweightedDigraph(g.vertex_count(), std::move(edges));
  return part;
}

}  // namespace

bool is_acyclic(const BiweightedDigraph& g) { return topological_order(g).has_value(); }

std::optional<WeightedPath> shortest_path_at_x(const BiweightedDigraph& g, Vertex s, Vertex t, double x,
                                               TieBreak tie) {
  if (std::isnan(x)) throw std::invalid_argument("multiplier is NaN");
  return optimal_path(g, s, t, LabelOrder{x, false, tie, 3});
}

std::optional<WeightedPath> longest_path_at_x(const BiweightedDigraph& g, Vertex s, Vertex t, double x,
                                              TieBreak tie) {
  if (std::isnan(x)) throw std::invalid_argument("multiplier is NaN");
  return optimal_path(g, s, t, LabelOrder{x, true, tie, 3});
}

bool has_negative_cycle(const BiweightedDigraph& g, double x) {
  Tree tree(g.vertex_count());
  std::deque<Vertex> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    tree.reached[static_cast<std::size_t>(v)] = 1;
    all.push_back(v);
  }
  return !relax_label_correcting(g, LabelOrder{x, false, TieBreak::smallerW2, 1}, tree, std::move(all));
}

double probe_x_min(const BiweightedDigraph& g) {
  const double minus_inf = -std::numeric_limits<double>::infinity();
  if (!has_negative_cycle(g, minus_inf)) return minus_inf;
  // Some cycle has positive w2, so its cost turns negative for a finite x.
  double lo = -1;
  while (!has_negative_cycle(g, lo)) lo *= 2;
  double hi = 0;
  for (int i = 0; i < kHalvings; ++i) {
    const double mid = lo + (hi - lo) / 2;
    if (mid == lo || mid == hi) break;
    if (has_negative_cycle(g, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

// ---------------------------------------------------------------------------

namespace {

class Search {
public:
  Search(const RelevantPart& part, const ConstrainedQuery& q) : part_(part), q_(q) {}

  bool satisfies(const WeightedPath& p) const {
    return q_.sense == Sense::atMost ? p.w2sum <= q_.budget : p.w2sum >= q_.budget;
  }

  // Optimal path at x with the sense-specific tie-break. For the at-least
  // sense the larger-w2 preference can make a zero-cost cycle improving at a
  // breakpoint; the smaller-w2 preference is used there instead.
  WeightedPath eval(double x) {
    ++evaluations_;
    const bool maximize = q_.objective == Objective::maximizeW1;
    const TieBreak tie = q_.sense == Sense::atMost ? TieBreak::smallerW2 : TieBreak::largerW2;
    std::optional<WeightedPath> p;
    try {
      p = optimal_path(part_.graph, q_.source, q_.target, LabelOrder{x, maximize, tie, 3});
    } catch (const NegativeCycleError&) {
      if (tie != TieBreak::largerW2) throw;
      p = optimal_path(part_.graph, q_.source, q_.target, LabelOrder{x, maximize, TieBreak::smallerW2, 3});
    }
    if (!p) throw std::logic_error("target became unreachable inside the relevant subgraph");
    consider(*p, x);
    return std::move(*p);
  }

  BicriteriaAnswer finish(Status status) const {
    BicriteriaAnswer a;
    a.evaluations = evaluations_;
    if (!best_ || status == Status::infeasible) {
      a.status = Status::infeasible;
      return a;
    }
    a.status = status;
    a.x_star = best_x_;
    WeightedPath p = *best_;
    for (auto& e : p.path.edges) e = part_.original[static_cast<std::size_t>(e)];
    a.path = std::move(p);
    return a;
  }

  // Grows |x| from `start` by doubling until `good` holds at x. Returns the
  // last probed x and whether it satisfied `good`.
  std::pair<double, bool> grow(double start, auto good) {
    double x = start;
    for (int i = 0; i < kMaxDoublings; ++i, x *= 2) {
      if (good(eval(x))) return {x, true};
    }
    return {x, false};
  }

  // Binary search on [lo, hi]; `good_side_low` tells which end satisfies the
  // budget. Returns nothing: every probe feeds the best-feasible tracker.
  void bisect(double lo, double hi, bool good_side_low) {
    for (int i = 0; i < kHalvings; ++i) {
      const double mid = lo + (hi - lo) / 2;
      if (mid == lo || mid == hi) break;
      const bool ok = satisfies(eval(mid));
      if (ok == good_side_low) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }

private:
  void consider(const WeightedPath& p, double x) {
    if (!satisfies(p)) return;
    const bool maximize = q_.objective == Objective::maximizeW1;
    // Equal w1 sums keep the multiplier nearest 0, i.e. the search boundary.
    const bool better = !best_ || (maximize ? p.w1sum > best_->w1sum : p.w1sum < best_->w1sum) ||
                        (p.w1sum == best_->w1sum && std::abs(x) < std::abs(best_x_));
    if (better) {
      best_ = p;
      best_x_ = x;
    }
  }

  const RelevantPart& part_;
  const ConstrainedQuery& q_;
  std::optional<WeightedPath> best_;
  double best_x_ = 0;
  int evaluations_ = 0;
};

}  // namespace

BicriteriaAnswer solve_constrained(const BiweightedDigraph& g, const ConstrainedQuery& q) {
  check_endpoints(g, q.source, q.target);
  const bool maximize = q.objective == Objective::maximizeW1;
  if (maximize && !is_acyclic(g)) throw InvalidQueryError("maximizing w1 requires an acyclic graph");

  const RelevantPart part = relevant_part(g, q.source, q.target);
  if (!part.target_reachable) return {};

  constexpr double inf = std::numeric_limits<double>::infinity();
  Search search(part, q);
  auto fits = [&](const WeightedPath& p) { return search.satisfies(p); };

  const WeightedPath at_zero = search.eval(0);
  if (search.satisfies(at_zero)) return search.finish(Status::exactAtX0);

  if (!maximize && q.sense == Sense::atMost) {
    // w2sum(x) is non-increasing in x; +inf gives the minimum w2 sum.
    if (!fits(search.eval(inf))) return search.finish(Status::infeasible);
    auto [hi, found] = search.grow(1.0, fits);
    if (found) search.bisect(0, hi, /*good_side_low=*/false);
    return search.finish(Status::foundBySearch);
  }

  if (!maximize && q.sense == Sense::atLeast) {
    // Negative multipliers raise w2sum; stay above the negative-cycle threshold.
    const double x_min = probe_x_min(part.graph);
    double lo = x_min;
    if (std::isinf(x_min)) {
      if (!fits(search.eval(-inf))) return search.finish(Status::infeasible);
      auto [x, found] = search.grow(-1.0, fits);
      if (!found) return search.finish(Status::foundBySearch);
      lo = x;
    } else if (!fits(search.eval(x_min))) {
      return search.finish(Status::infeasible);
    }
    search.bisect(lo, 0, /*good_side_low=*/true);
    return search.finish(Status::foundBySearch);
  }

  if (q.sense == Sense::atMost) {
    // Longest paths: w2sum(x) is non-decreasing in x; -inf gives the minimum.
    if (!fits(search.eval(-inf))) return search.finish(Status::infeasible);
    auto [lo, found] = search.grow(-1.0, fits);
    if (found) search.bisect(lo, 0, /*good_side_low=*/true);
    return search.finish(Status::foundBySearch);
  }

  if (!fits(search.eval(inf))) return search.finish(Status::infeasible);
  auto [hi, found] = search.grow(1.0, fits);
  if (found) search.bisect(0, hi, /*good_side_low=*/false);
  return search.finish(Status::foundBySearch);
}

// ---------------------------------------------------------------------------

BicriteriaAnswer exact_constrained(const BiweightedDigraph& g, const ConstrainedQuery& q, std::size_t state_cap) {
  check_endpoints(g, q.source, q.target);
  const bool maximize = q.objective == Objective::maximizeW1;
  std::optional<std::vector<Vertex>> topo;
  if (maximize) {
    topo = topological_order(g);
    if (!topo) throw InvalidQueryError("maximizing w1 requires an acyclic graph");
  }

  std::uint64_t w2_total = 0;
  for (const auto& e : g.edges()) w2_total += e.w2;
  if (q.sense == Sense::atLeast && q.budget > w2_total) return {};
  const std::uint64_t cap = std::min(q.budget, w2_total);

  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (cap + 1 > state_cap || n * (cap + 1) > state_cap) {
    throw ResourceLimitError("layered graph needs " + std::to_string(n) + " x " + std::to_string(cap + 1) +
                             " states, above the cap of " + std::to_string(state_cap));
  }
  const std::size_t layers = static_cast<std::size_t>(cap) + 1;
  auto id = [layers](Vertex v, std::uint64_t j) { return static_cast<std::size_t>(v) * layers + j; };
  // Next layer after taking an edge, or nullopt if the edge overshoots an at-most budget.
  auto step = [&](std::uint64_t j, std::uint64_t w2) -> std::optional<std::uint64_t> {
    const std::uint64_t next = j + w2;
    if (q.sense == Sense::atLeast) return std::min(next, cap);
    if (next > cap) return std::nullopt;
    return next;
  };

  const std::size_t states = n * layers;
  std::vector<std::uint64_t> best(states, 0);
  std::vector<char> reached(states, 0);
  std::vector<std::size_t> pred_state(states, 0);
  std::vector<EdgeIndex> pred_edge(states, -1);
  const std::size_t origin = id(q.source, 0);
  reached[origin] = 1;

  if (!maximize) {
    using Item = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0, origin});
    while (!pq.empty()) {
      auto [d, sid] = pq.top();
      pq.pop();
      if (d != best[sid]) continue;
      const auto u = static_cast<Vertex>(sid / layers);
      const std::uint64_t j = sid % layers;
      for (EdgeIndex ei : g.out_edges(u)) {
        const auto& e = g.edge(ei);
        auto nj = step(j, e.w2);
        if (!nj) continue;
        const std::size_t to = id(e.v, *nj);
        const std::uint64_t nd = d + e.w1;
        if (!reached[to] || nd < best[to]) {
          reached[to] = 1;
          best[to] = nd;
          pred_state[to] = sid;
          pred_edge[to] = ei;
          pq.push({nd, to});
        }
      }
    }
  } else {
    // Every layered edge goes forward in the topological order of g.
    for (Vertex u : *topo) {
      for (std::uint64_t j = 0; j <= cap; ++j) {
        const std::size_t sid = id(u, j);
        if (!reached[sid]) continue;
        for (EdgeIndex ei : g.out_edges(u)) {
          const auto& e = g.edge(ei);
          auto nj = step(j, e.w2);
          if (!nj) continue;
          const std::size_t to = id(e.v, *nj);
          const std::uint64_t nd = best[sid] + e.w1;
          if (!reached[to] || nd > best[to]) {
            reached[to] = 1;
            best[to] = nd;
            pred_state[to] = sid;
            pred_edge[to] = ei;
          }
        }
      }
    }
  }

  std::optional<std::size_t> goal;
  const std::uint64_t first_layer = q.sense == Sense::atLeast ? cap : 0;
  for (std::uint64_t j = first_layer; j <= cap; ++j) {
    const std::size_t sid = id(q.target, j);
    if (!reached[sid]) continue;
    if (!goal || (maximize ? best[sid] > best[*goal] : best[sid] < best[*goal])) goal = sid;
  }
  if (!goal) return {};

  WeightedPath wp;
  wp.w1sum = best[*goal];
  for (std::size_t sid = *goal; sid != origin;) {
    const EdgeIndex e = pred_edge[sid];
    wp.path.edges.push_back(e);
    wp.w2sum += g.edge(e).w2;
    sid = pred_state[sid];
  }
  std::reverse(wp.path.edges.begin(), wp.path.edges.end());
  wp.path.vertices.push_back(q.source);
  for (EdgeIndex e : wp.path.edges) wp.path.vertices.push_back(g.edge(e).v);

  BicriteriaAnswer a;
  a.status = Status::optimal;
  a.path = std::move(wp);
  return a;
}

// ---------------------------------------------------------------------------

Cost aggregate_sum(Cost a, Cost b) { return a + b; }
Cost aggregate_max(Cost a, Cost b) { return std::max(a, b); }

std::vector<std::optional<Cost>> dag_optimal_path(const WeightedDigraph& g, Vertex t, const Aggregation& aggf,
                                                  Optimum opt) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (t < 0 || static_cast<std::size_t>(t) >= n) throw std::invalid_argument("target out of range");
  enum : char { unvisited, active, done };
  std::vector<char> state(n, unvisited);
  std::vector<std::optional<Cost>> pop(n);
  pop[static_cast<std::size_t>(t)] = g.vertex_cost(t);
  state[static_cast<std::size_t>(t)] = done;

  auto better = [opt](Cost a, Cost b) { return opt == Optimum::min ? a < b : a > b; };

  // Explicit-stack form of Compute(u): frame = (vertex, next out-edge).
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; static_cast<std::size_t>(root) < n; ++root) {
    if (state[static_cast<std::size_t>(root)] != unvisited) continue;
    stack.push_back({root, 0});
    state[static_cast<std::size_t>(root)] = active;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& out = g.out_edges(u);
      if (next < out.size()) {
        const Vertex v = g.edge(out[next++]).v;
        const auto vi = static_cast<std::size_t>(v);
        if (state[vi] == active) throw CycleError("cycle through vertex " + std::to_string(v));
        if (state[vi] == unvisited) {
          state[vi] = active;
          stack.push_back({v, 0});
        }
        continue;
      }
      std::optional<Cost> best_child;
      for (EdgeIndex ei : out) {
        const auto& e = g.edge(ei);
        if (const auto& pv = pop[static_cast<std::size_t>(e.v)]) {
          const Cost via = aggf(e.w, *pv);
          if (!best_child || better(via, *best_child)) best_child = via;
        }
      }
      const auto ui = static_cast<std::size_t>(u);
      if (best_child) pop[ui] = aggf(g.vertex_cost(u), *best_child);
      state[ui] = done;
      stack.pop_back();
    }
  }
  return pop;
}

}  // namespace qospath::bicriteria
