#pragma once

// Hamiltonian path in the cube of a connected undirected graph: consecutive
// vertices of the returned order are at distance at most 3.

#include <optional>
#include <stdexcept>
#include <vector>

#include "qospath/graph.hpp"

namespace qospath::cube {

class DisconnectedGraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;                 ///< parent[root] == root
  std::vector<int> level;                     ///< level[root] == 1
  std::vector<std::vector<Vertex>> children;  ///< in discovery order
};

/// DFS spanning tree, neighbours taken in ascending id order.
/// Throws DisconnectedGraphError if some vertex is not reached.
RootedTree dfs_spanning_tree(const WeightedGraph& ug, Vertex root);

/// Odd-level vertices are emitted on entering them, even-level vertices
/// after their subtree is finished. Default root is vertex 0.
std::vector<Vertex> cube_ham_path(const WeightedGraph& ug, std::optional<Vertex> root = std::nullopt);

/// Graph distance between hp[k] and hp[k+1] for every k, or -1 when it
/// exceeds `limit` (BFS is cut off at that depth).
std::vector<int> consecutive_distances(const WeightedGraph& ug, const std::vector<Vertex>& hp, int limit = 3);

/// hp is a permutation of the vertices and every consecutive distance is <= 3.
bool verify_cube_path(const WeightedGraph& ug, const std::vector<Vertex>& hp);

}  // namespace qospath::cube
