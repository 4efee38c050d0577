#pragma once

// Bicriteria s-t paths: optimize the w1 sum subject to a budget on the w2
// sum, by binary-searching a multiplier x in the blended edge cost
// w1(e) + x * w2(e). Also the product-graph exact method (used as an oracle)
// and the memoized optimal-path recursion on DAGs.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qospath/graph.hpp"

namespace qospath::bicriteria {

enum class Sense { atMost, atLeast };
enum class Objective { minimizeW1, maximizeW1 };

/// How the search concluded. `optimal` is only produced by exact_constrained.
enum class Status { exactAtX0, foundBySearch, optimal, infeasible };

std::string_view status_name(Status s);

/// Secondary key among paths of equal blended cost.
enum class TieBreak { smallerW2, largerW2 };

struct ConstrainedQuery {
  Vertex source = 0;
  Vertex target = 0;
  std::uint64_t budget = 0;
  Sense sense = Sense::atMost;
  Objective objective = Objective::minimizeW1;
};

struct WeightedPath {
  PathResult path;
  std::uint64_t w1sum = 0;
  std::uint64_t w2sum = 0;
};

struct BicriteriaAnswer {
  Status status = Status::infeasible;
  std::optional<WeightedPath> path;  ///< empty iff infeasible
  double x_star = 0;                 ///< multiplier of the returned path (0 for exact answers)
  int evaluations = 0;               ///< shortest-path runs issued by the search
};

/// Thrown when the relaxation at a given multiplier meets a cycle of negative
/// blended cost (or of zero cost whose w2 sum makes the tie-break unbounded).
class NegativeCycleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidQueryError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by exact_constrained when the layered graph exceeds `state_cap`.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Optimal s-t path under cost w1 + x*w2. `x` may be +/-infinity, in which
/// case the costs w2 (resp. -w2) are used with w1 as a secondary key.
/// Acyclic graphs are relaxed in topological order; otherwise x >= 0 uses
/// label-setting and x < 0 queue-based label-correcting relaxation.
/// Returns nullopt when t is unreachable. s == t yields the empty path.
std::optional<WeightedPath> shortest_path_at_x(const BiweightedDigraph& g, Vertex s, Vertex t, double x,
                                               TieBreak tie = TieBreak::smallerW2);

/// Maximum-cost s-t path under w1 + x*w2. Requires an acyclic graph.
std::optional<WeightedPath> longest_path_at_x(const BiweightedDigraph& g, Vertex s, Vertex t, double x,
                                              TieBreak tie = TieBreak::smallerW2);

/// True if some cycle has negative cost w1 + x*w2 (x may be -infinity).
bool has_negative_cycle(const BiweightedDigraph& g, double x);

/// Smallest multiplier (up to 64 halvings of precision) at which no cycle
/// has negative blended cost. Returns -infinity when even the costs -w2
/// produce no negative cycle.
double probe_x_min(const BiweightedDigraph& g);

/// Lagrangian binary-search heuristic for all four sense/objective pairs.
/// Maximization requires an acyclic graph. The returned path, when present,
/// always satisfies the budget.
BicriteriaAnswer solve_constrained(const BiweightedDigraph& g, const ConstrainedQuery& q);

inline constexpr std::size_t kDefaultExactStateCap = 20'000'000;

/// Exact optimum over the (vertex, accumulated w2) layered graph. Walks are
/// allowed, matching the layered construction.
BicriteriaAnswer exact_constrained(const BiweightedDigraph& g, const ConstrainedQuery& q,
                                   std::size_t state_cap = kDefaultExactStateCap);

bool is_acyclic(const BiweightedDigraph& g);

// ---------------------------------------------------------------------------

using Aggregation = std::function<Cost(Cost, Cost)>;
enum class Optimum { min, max };

Cost aggregate_sum(Cost a, Cost b);
Cost aggregate_max(Cost a, Cost b);

class CycleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// pop(u): optimal aggregate of an u -> t path, combining vertex weights
/// (the graph's vertex costs) and edge weights with `aggf`. nullopt for
/// vertices that cannot reach t. Each vertex is evaluated once.
/// Throws CycleError if the recursion revisits an in-progress vertex.
std::vector<std::optional<Cost>> dag_optimal_path(const WeightedDigraph& g, Vertex t, const Aggregation& aggf,
                                                  Optimum opt);

}  // namespace qospath::bicriteria
