#pragma once

// Minimum-aggregate path or cycle on exactly Q distinct vertices of a small
// digraph, by dynamic programming over vertex subsets (bitmasks).

#include <cstdint>
#include <functional>
#include <optional>

#include "qospath/aggregate.hpp"
#include "qospath/graph.hpp"

namespace qospath::subset {

inline constexpr Vertex kMaxVertices = 20;

/// Predicate on a full-size vertex set (bit v set = vertex v included).
using SubsetPredicate = std::function<bool(std::uint32_t)>;

struct SubsetQuery {
  int q = 1;
  Agg agg = Agg::sum;
  SubsetPredicate allowed;                       ///< empty = every subset allowed
  std::uint32_t vertex_mask = 0xFFFF'FFFFu;      ///< vertices outside the mask are never used
};

struct SubsetAnswer {
  PathResult walk;  ///< a path, or a cycle whose last edge returns to walk.vertices.front()
  Cost cost = 0;
};

/// Throws std::invalid_argument when q is out of range and std::length_error
/// when the graph exceeds kMaxVertices. nullopt means infeasible.
std::optional<SubsetAnswer> min_q_path(const WeightedDigraph& g, const SubsetQuery& query);

/// Cycles anchor at the smallest vertex of the set: the path starts there
/// and the closing edge returns to it. Requires q >= 2.
std::optional<SubsetAnswer> min_q_cycle(const WeightedDigraph& g, const SubsetQuery& query);

/// Cycle optimum through the endpoint-pair table Cmin(i, j, S), with both
/// the extend-at-j and extend-at-i recurrences. Value only; n <= 12.
std::optional<Cost> min_q_cycle_pair_table(const WeightedDigraph& g, const SubsetQuery& query);

/// Aggregate of vertex and edge costs along a path or cycle.
Cost walk_cost(const WeightedDigraph& g, const PathResult& walk, Agg agg);

}  // namespace qospath::subset
