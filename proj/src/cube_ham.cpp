#include "qospath/cube_ham.hpp"

#include <algorithm>
#include <utility>

namespace qospath::cube {

namespace {

std::vector<std::vector<Vertex>> sorted_neighbours(const WeightedGraph& ug) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(ug.vertex_count()));
  for (Vertex u = 0; u < ug.vertex_count(); ++u) {
    auto& a = adj[static_cast<std::size_t>(u)];
    for (EdgeIndex e : ug.incident_edges(u)) a.push_back(ug.opposite(e, u));
    std::sort(a.begin(), a.end());
  }
  return adj;
}

}  // namespace

RootedTree dfs_spanning_tree(const WeightedGraph& ug, Vertex root) {
  const auto n = static_cast<std::size_t>(ug.vertex_count());
  if (root < 0 || static_cast<std::size_t>(root) >= n) throw std::invalid_argument("root out of range");
  const auto adj = sorted_neighbours(ug);
  RootedTree t{root, std::vector<Vertex>(n, -1), std::vector<int>(n, 0), std::vector<std::vector<Vertex>>(n)};
  const auto r = static_cast<std::size_t>(root);
  t.parent[r] = root;
  t.level[r] = 1;
  std::size_t reached = 1;
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& a = adj[static_cast<std::size_t>(v)];
    if (next == a.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = a[next++];
    const auto wi = static_cast<std::size_t>(w);
    if (t.parent[wi] != -1) continue;
    t.parent[wi] = v;
    t.level[wi] = t.level[static_cast<std::size_t>(v)] + 1;
    t.children[static_cast<std::size_t>(v)].push_back(w);
    ++reached;
    stack.push_back({w, 0});
  }
  if (reached != n) throw DisconnectedGraphError("graph is not connected");
  return t;
}

std::vector<Vertex> cube_ham_path(const WeightedGraph& ug, std::optional<Vertex> root) {
  if (ug.vertex_count() == 0) return {};
  const auto t = dfs_spanning_tree(ug, root.value_or(0));
  std::vector<Vertex> hp;
  hp.reserve(static_cast<std::size_t>(ug.vertex_count()));
  auto odd = [&](Vertex v) { return t.level[static_cast<std::size_t>(v)] % 2 == 1; };

  std::vector<std::pair<Vertex, std::size_t>> stack{{t.root, 0}};
  hp.push_back(t.root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& kids = t.children[static_cast<std::size_t>(v)];
    if (next < kids.size()) {
      const Vertex c = kids[next++];
      if (odd(c)) hp.push_back(c);
      stack.push_back({c, 0});
      continue;
    }
    if (!odd(v)) hp.push_back(v);
    stack.pop_back();
  }
  return hp;
}

std::vector<int> consecutive_distances(const WeightedGraph& ug, const std::vector<Vertex>& hp, int limit) {
  const auto n = static_cast<std::size_t>(ug.vertex_count());
  std::vector<int> dist(n, -1);
  std::vector<Vertex> frontier;
  std::vector<int> out;
  for (std::size_t k = 0; k + 1 < hp.size(); ++k) {
    // Truncated BFS; only the touched entries are reset afterwards.
    frontier.assign(1, hp[k]);
    dist[static_cast<std::size_t>(hp[k])] = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const Vertex u = frontier[head];
      const int du = dist[static_cast<std::size_t>(u)];
      if (du == limit) continue;
      for (EdgeIndex e : ug.incident_edges(u)) {
        const Vertex w = ug.opposite(e, u);
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          frontier.push_back(w);
        }
      }
    }
    out.push_back(dist[static_cast<std::size_t>(hp[k + 1])]);
    for (Vertex v : frontier) dist[static_cast<std::size_t>(v)] = -1;
  }
  return out;
}

bool verify_cube_path(const WeightedGraph& ug, const std::vector<Vertex>& hp) {
  const auto n = static_cast<std::size_t>(ug.vertex_count());
  if (hp.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : hp) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const auto d = consecutive_distances(ug, hp, 3);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

}  // namespace qospath::cube
