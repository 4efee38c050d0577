#pragma once

// Classification of vertices and edges relative to the set of all shortest
// s-t paths:
//   category 1  on every shortest path
//   category 2  on at least one, but not all
//   category 3  on none
// Also used for knapsack items (see knapsack.hpp).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qospath/graph.hpp"

namespace qospath::sensitivity {

enum class Category : std::uint8_t { every = 1, some = 2, none = 3 };

inline int category_number(Category c) { return static_cast<int>(c); }

struct ElementClassification {
  std::vector<Category> vertex;
  std::vector<Category> edge;
  friend bool operator==(const ElementClassification&, const ElementClassification&) = default;
};

struct DistanceLabels {
  std::vector<Cost> from_source;  ///< ds(u), +inf when unreachable
  std::vector<Cost> to_target;    ///< dt(u), computed on the transposed graph
};

/// Raised when the shortest-path subgraph has a cycle. This only happens with
/// zero-weight cycles, where shortest walks are not simple paths.
class ZeroWeightCycleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Label-setting distances from s and to t.
DistanceLabels distances(const WeightedDigraph& g, Vertex s, Vertex t);

/// General non-negative weights, via bridges and cut vertices of the
/// undirected shortest-path subgraph.
ElementClassification classify_weighted(const WeightedDigraph& g, Vertex s, Vertex t);

/// All edge weights equal: BFS levels and a per-level vertex count, O(n + m).
/// Throws std::invalid_argument on non-uniform weights.
ElementClassification classify_unit(const WeightedDigraph& g, Vertex s, Vertex t);

/// Undirected graphs through the doubled digraph. `unit` selects
/// classify_unit for the directed run.
ElementClassification classify_undirected(const WeightedGraph& ug, Vertex s, Vertex t, bool unit = false);

}  // namespace qospath::sensitivity
