#include "qospath/color_alt_euler.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

namespace qospath::euler {

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::none: return "none";
    case Reason::oddDegree: return "oddDegree";
    case Reason::colorMajority: return "colorMajority";
    case Reason::disconnected: return "disconnected";
  }
  return "?";
}

ColorMajorityError::ColorMajorityError(std::int64_t color, std::size_t count, std::size_t half)
    : std::invalid_argument("color " + std::to_string(color) + " occurs " + std::to_string(count) +
                            " times, more than " + std::to_string(half)),
      color_(color) {}

Feasibility check_feasible(const ColoredMultigraph& g) {
  const Vertex n = g.vertex_count();
  for (Vertex x = 0; x < n; ++x)
    if (g.degree(x) % 2 != 0) return {Reason::oddDegree, x, 0};

  std::vector<std::size_t> per_color(static_cast<std::size_t>(g.color_count()) + 1, 0);
  for (Vertex x = 0; x < n; ++x) {
    const auto& ids = g.incident_ids(x);
    for (auto id : ids) ++per_color[static_cast<std::size_t>(g.by_id(id).color)];
    std::int32_t worst = 0;
    for (auto id : ids) {
      const auto c = g.by_id(id).color;
      if (per_color[static_cast<std::size_t>(c)] * 2 > ids.size() && (worst == 0 || c < worst)) worst = c;
    }
    for (auto id : ids) per_color[static_cast<std::size_t>(g.by_id(id).color)] = 0;
    if (worst != 0) return {Reason::colorMajority, x, worst};
  }

  std::vector<Vertex> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](Vertex v) {
    while (root[static_cast<std::size_t>(v)] != v) {
      root[static_cast<std::size_t>(v)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
      v = root[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& e : g.edges()) root[static_cast<std::size_t>(find(e.u))] = find(e.v);
  Vertex component = -1;
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) == 0) continue;
    if (component == -1) {
      component = find(x);
    } else if (find(x) != component) {
      return {Reason::disconnected, -1, 0};
    }
  }
  return {};
}

std::vector<std::pair<std::size_t, std::size_t>> pair_objects(const std::vector<std::int64_t>& colors) {
  if (colors.size() % 2 != 0) throw std::invalid_argument("pair_objects needs an even number of objects");
  const std::size_t P = colors.size() / 2;

  // Renumber colors 1..C in order of first appearance.
  std::unordered_map<std::int64_t, std::size_t> h;
  std::vector<std::size_t> col(colors.size());
  std::vector<std::int64_t> original{0};
  for (std::size_t i = 0; i < colors.size(); ++i) {
    auto [it, fresh] = h.try_emplace(colors[i], original.size());
    if (fresh) original.push_back(colors[i]);
    col[i] = it->second;
  }
  const std::size_t C = original.size() - 1;

  std::vector<std::size_t> nob(C + 1, 0);
  for (auto c : col) ++nob[c];
  for (std::size_t c = 1; c <= C; ++c)
    if (nob[c] > P) throw ColorMajorityError(original[c], nob[c], P);

  // Count sort of the colors by non-increasing nob, then lay the objects out
  // color by color in that order.
  std::vector<std::size_t> bucket(2 * P + 2, 0);
  for (std::size_t c = 1; c <= C; ++c) ++bucket[2 * P - nob[c] + 1];
  for (std::size_t k = 1; k < bucket.size(); ++k) bucket[k] += bucket[k - 1];
  std::vector<std::size_t> order(C);
  for (std::size_t c = 1; c <= C; ++c) order[bucket[2 * P - nob[c]]++] = c;
  std::vector<std::size_t> start(C + 1, 0);
  std::size_t pos = 0;
  for (auto c : order) {
    start[c] = pos;
    pos += nob[c];
  }
  std::vector<std::size_t> ob(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) ob[start[col[i]]++] = i;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(P);
  for (std::size_t i = 0; i < P; ++i) pairs.emplace_back(ob[i], ob[P + i]);
  return pairs;
}

namespace {

// Incidence tables. Slot j of vertex x sits at off[x] + j and holds mu(x, j),
// its pairing partner pair(x, j) and the slot where the other end of the
// edge lies, so following a pairing walk touches one record per step.
// Self-loops occupy two slots. Slot indices below are global.
struct Slot {
  std::int32_t id;
  std::uint32_t partner;
  std::uint32_t far;
  Vertex far_vertex;
};

struct Incidence {
  std::vector<std::size_t> off;
  std::vector<Slot> slots;
};

Incidence build_incidence(const ColoredMultigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Incidence inc;
  inc.off.assign(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) inc.off[x + 1] = inc.off[x] + g.degree(static_cast<Vertex>(x));
  inc.slots.resize(inc.off[n]);
  std::vector<std::array<std::uint32_t, 2>> slot_of_end(g.edge_count() + 1, {0, 0});
  std::vector<std::uint8_t> end_of_slot(inc.off[n]);
  std::vector<std::uint8_t> first_end_taken(g.edge_count() + 1, 0);
  std::vector<std::int64_t> colors;
  for (std::size_t x = 0; x < n; ++x) {
    const auto& ids = g.incident_ids(static_cast<Vertex>(x));
    colors.clear();
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const auto eid = ids[j];
      const auto& e = g.by_id(eid);
      std::uint8_t end = 0;
      if (e.u == e.v) {
        end = first_end_taken[static_cast<std::size_t>(eid)]++;
      } else {
        end = e.u == static_cast<Vertex>(x) ? 0 : 1;
      }
      const std::size_t slot = inc.off[x] + j;
      inc.slots[slot].id = eid;
      end_of_slot[slot] = end;
      slot_of_end[static_cast<std::size_t>(eid)][end] = static_cast<std::uint32_t>(slot);
      colors.push_back(e.color);
    }
    for (auto [a, b] : pair_objects(colors)) {
      inc.slots[inc.off[x] + a].partner = static_cast<std::uint32_t>(inc.off[x] + b);
      inc.slots[inc.off[x] + b].partner = static_cast<std::uint32_t>(inc.off[x] + a);
    }
  }
  for (std::size_t slot = 0; slot < inc.slots.size(); ++slot) {
    auto& sl = inc.slots[slot];
    const std::uint8_t other = static_cast<std::uint8_t>(1 - end_of_slot[slot]);
    const auto& e = g.by_id(sl.id);
    sl.far = slot_of_end[static_cast<std::size_t>(sl.id)][other];
    sl.far_vertex = other == 0 ? e.u : e.v;
  }
  return inc;
}

// Circular list of alternating vertex and edge elements. Each element keeps
// two unordered links, so a chain can be attached in either orientation by
// rewiring its two outer links.
struct Node {
  std::int32_t value;  // vertex, or edge id
  bool is_edge;
  int link[2];
};

class CycleList {
public:
  void reserve(std::size_t count) { nodes_.reserve(count); }

  int add(std::int32_t value, bool is_edge) {
    nodes_.push_back({value, is_edge, {-1, -1}});
    return static_cast<int>(nodes_.size() - 1);
  }

  void connect(int a, int b) {
    attach(a, b);
    attach(b, a);
  }

  void replace(int node, int old_neighbour, int new_neighbour) {
    auto& l = nodes_[static_cast<std::size_t>(node)].link;
    (l[0] == old_neighbour ? l[0] : l[1]) = new_neighbour;
  }

  int other(int node, int from) const {
    const auto& l = nodes_[static_cast<std::size_t>(node)].link;
    return l[0] == from ? l[1] : l[0];
  }

  const Node& operator[](int i) const { return nodes_[static_cast<std::size_t>(i)]; }

private:
  void attach(int a, int b) {
    auto& l = nodes_[static_cast<std::size_t>(a)].link;
    (l[0] == -1 ? l[0] : l[1]) = b;
  }

  std::vector<Node> nodes_;
};

class Builder {
public:
  explicit Builder(const ColoredMultigraph& g)
      : g_(g),
        inc_(build_incidence(g)),
        marked_(g.edge_count() + 1, 0),
        muidx_(static_cast<std::size_t>(g.vertex_count()), 0) {
    list_.reserve(2 * g.edge_count() + 1);
  }

  EulerCycle run() {
    Vertex start = 0;
    while (start < g_.vertex_count() && g_.degree(start) == 0) ++start;
    if (start == g_.vertex_count()) return {};

    const int head = list_.add(start, false);
    int prev = -1;  // element before the current occurrence, -1 while the list is the lone seed
    int cur = head;
    while (true) {
      visit(cur, prev);
      if (prev == -1) break;  // only possible if the seed had nothing to splice
      const int edge = list_.other(cur, prev);
      const int next = list_.other(edge, cur);
      if (next == head) break;
      prev = edge;
      cur = next;
    }
    return collect(head);
  }

private:
  std::int32_t color(int node) const { return g_.by_id(list_[node].value).color; }

  // Runs the while (muidx(x) < deg(x)) loop at one occurrence of x. `prev`
  // is updated when the lone seed gets its first cycle.
  void visit(int occurrence, int& prev) {
    const Vertex x = list_[occurrence].value;
    const auto xi = static_cast<std::size_t>(x);
    const std::size_t deg = g_.degree(x);
    while (muidx_[xi] < deg) {
      const std::size_t j0 = muidx_[xi];
      const std::int32_t first = inc_.slots[inc_.off[xi] + j0].id;
      if (marked_[static_cast<std::size_t>(first)]) {
        ++muidx_[xi];
        continue;
      }
      auto [first_node, last_node] = trace(x, j0);
      splice(occurrence, prev, first_node, last_node);
    }
  }

  // Follows pair links from mu(x, j0) until the walk re-enters x through
  // pair(x, j0). Returns the outer edge elements of the new chain
  // e1, y, ..., e_last; their outer links are still free.
  std::pair<int, int> trace(Vertex x, std::size_t j0) {
    const auto& slots = inc_.slots;
    const std::size_t start = inc_.off[static_cast<std::size_t>(x)] + j0;
    const std::uint32_t closing = slots[start].partner;
    marked_[static_cast<std::size_t>(slots[start].id)] = 1;
    const int first_node = list_.add(slots[start].id, true);
    int tail = first_node;
    std::uint32_t arrived = slots[start].far;
    Vertex nodc = slots[start].far_vertex;
    while (arrived != closing) {
      const std::uint32_t next = slots[arrived].partner;
      const std::int32_t mnnext = slots[next].id;
      if (marked_[static_cast<std::size_t>(mnnext)]) throw std::logic_error("pairing walk reused an edge");
      marked_[static_cast<std::size_t>(mnnext)] = 1;
      const int vnode = list_.add(nodc, false);
      const int enode = list_.add(mnnext, true);
      list_.connect(tail, vnode);
      list_.connect(vnode, enode);
      tail = enode;
      arrived = slots[next].far;
      nodc = slots[next].far_vertex;
    }
    return {first_node, tail};
  }

  // Replaces the occurrence by occurrence, chain, copy-of-occurrence. The
  // occurrence element itself stays in front, so the traversal continues
  // into the new chain.
  void splice(int occurrence, int& prev, int first, int last) {
    if (prev == -1) {
      list_.connect(occurrence, last);
      list_.connect(occurrence, first);
      prev = last;
      return;
    }
    const int m1 = prev;
    const int m2 = list_.other(occurrence, m1);
    const bool forward = color(m1) != color(first) && color(m2) != color(last);
    if (!forward && (color(m1) == color(last) || color(m2) == color(first))) {
      throw std::logic_error("neither splice orientation alternates");
    }
    const int near = forward ? first : last;
    const int far = forward ? last : first;
    const int copy = list_.add(list_[occurrence].value, false);
    list_.replace(occurrence, m2, -1);
    list_.replace(m2, occurrence, -1);
    list_.connect(near, occurrence);
    list_.connect(far, copy);
    list_.connect(copy, m2);
  }

  EulerCycle collect(int head) const {
    EulerCycle c;
    // The head's first link is the wrap edge of the seed cycle; walking away
    // from it follows construction order.
    int prev = list_[head].link[0];
    int cur = head;
    do {
      const int e = list_.other(cur, prev);
      c.vertices.push_back(list_[cur].value);
      c.edge_ids.push_back(list_[e].value);
      prev = e;
      cur = list_.other(e, cur);
    } while (cur != head);
    return c;
  }

  const ColoredMultigraph& g_;
  Incidence inc_;
  std::vector<std::uint8_t> marked_;
  std::vector<std::size_t> muidx_;
  CycleList list_;
};

}  // namespace

EulerAnswer build_alt_euler(const ColoredMultigraph& g) {
  EulerAnswer a;
  a.feasibility = check_feasible(g);
  if (!a.feasibility.ok()) return a;
  a.cycle = Builder(g).run();
  return a;
}

bool verify_alt_euler(const ColoredMultigraph& g, const EulerCycle& cycle) {
  const std::size_t m = g.edge_count();
  if (cycle.edge_ids.size() != m || cycle.vertices.size() != m) return false;
  std::vector<char> used(m + 1, 0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto id = cycle.edge_ids[k];
    if (id < 1 || static_cast<std::size_t>(id) > m || used[static_cast<std::size_t>(id)]) return false;
    used[static_cast<std::size_t>(id)] = 1;
    const auto& e = g.by_id(id);
    const Vertex a = cycle.vertices[k];
    const Vertex b = cycle.vertices[(k + 1) % m];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
    if (m > 1 && e.color == g.by_id(cycle.edge_ids[(k + 1) % m]).color) return false;
  }
  return true;
}

}  // namespace qospath::euler
