#pragma once

// Minimum-aggregate s -> t walk in an edge-colored digraph in which any two
// consecutive edges have different colors. Vertex costs are charged once on
// arrival, plus cn(s) at the start.

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qospath/aggregate.hpp"
#include "qospath/graph.hpp"

namespace qospath::altpath {

struct AltPathResult {
  PathResult path;
  Cost cost = 0;
};

enum class TwoBestMode { dagTopological, queueRelaxation };

std::optional<TwoBestMode> mode_from_name(std::string_view name);

class CycleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Label-setting search over states (vertex, color of the last edge), with
/// color 0 reserved for the start state at s.
std::optional<AltPathResult> alt_path_expanded(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg);

/// Per-vertex best and second-best labels; the second-best always ends in a
/// color different from the best. dagTopological throws CycleError on a
/// cyclic graph.
std::optional<AltPathResult> alt_path_two_best(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg,
                                               TwoBestMode mode);

/// Converged labels of the two-best method, for invariant checks.
struct TwoBestLabels {
  std::vector<Cost> cmin, cmin2;
  std::vector<std::int32_t> colmin, colmin2;
};

TwoBestLabels two_best_labels(const ColoredDigraph& g, Vertex s, Agg agg, TwoBestMode mode);

/// Consecutive edges join up, start at s, end at t, and differ in color.
bool is_alternating_path(const ColoredDigraph& g, const PathResult& p, Vertex s, Vertex t);

/// cn(s) agg (cost(e) agg cn(v(e))) over the edges, in order.
Cost alt_path_cost(const ColoredDigraph& g, const PathResult& p, Agg agg);

}  // namespace qospath::altpath
