#pragma once

// Brute-force reference implementations. They are deliberately naive and
// share no traversal logic with the algorithms they are used to check.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qospath/aggregate.hpp"
#include "qospath/graph.hpp"
#include "qospath/knapsack.hpp"
#include "qospath/sensitivity.hpp"

namespace qospath::oracles {

class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Caps on instance size and on the number of enumerated objects.
/// Exceeding a cap throws BudgetExceeded; results are never truncated.
struct EnumerationBudget {
  std::size_t max_vertices = 10;
  std::size_t max_subsets = std::size_t{1} << 15;
  std::size_t max_paths = 2'000'000;

  /// QOSPATH_ORACLE_CAP, when set to a positive integer, replaces the
  /// subset and path caps.
  static EnumerationBudget from_env(std::size_t max_vertices);
};

// -- bicriteria -------------------------------------------------------------

struct EnumeratedPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;
  std::uint64_t w1sum = 0;
  std::uint64_t w2sum = 0;
};

/// All simple s -> t paths (s == t gives the single empty path). n <= 10.
std::vector<EnumeratedPath> enumerate_constrained_paths(const BiweightedDigraph& g, Vertex s, Vertex t,
                                                        EnumerationBudget budget = EnumerationBudget::from_env(10));

// -- path sensitivity -------------------------------------------------------

/// Simple s -> t paths as edge lists; a single empty list when s == t.
std::vector<std::vector<EdgeIndex>> enumerate_simple_paths(const WeightedDigraph& g, Vertex s, Vertex t,
                                                           EnumerationBudget budget = EnumerationBudget::from_env(10));

/// Categories from the set of minimum-weight simple paths.
sensitivity::ElementClassification classify_by_enumeration(const WeightedDigraph& g, Vertex s, Vertex t);

/// Same for an undirected graph; an edge counts as used in either direction.
sensitivity::ElementClassification classify_undirected_by_enumeration(const WeightedGraph& ug, Vertex s, Vertex t);

// -- knapsack ---------------------------------------------------------------

/// Bitmasks (bit i = item i) of all subsets with weight sum S. n <= 15.
std::vector<std::uint32_t> enumerate_subsets(const std::vector<std::int64_t>& w, std::int64_t S,
                                             EnumerationBudget budget = EnumerationBudget::from_env(15));

/// The minimum-cost subsets among enumerate_subsets.
std::vector<std::uint32_t> enumerate_min_cost_subsets(const std::vector<std::int64_t>& w,
                                                      const std::vector<std::int64_t>& cost, std::int64_t S,
                                                      EnumerationBudget budget = EnumerationBudget::from_env(15));

/// Feasibility categories, or cost categories when the instance has costs.
std::vector<sensitivity::Category> classify_knapsack_by_enumeration(const knapsack::KnapsackInstance& inst);

// -- subset paths -----------------------------------------------------------

/// Best path / cycle on exactly q distinct vertices, by trying every ordered
/// q-tuple. n <= 7 by default.
std::optional<Cost> enumerate_q_path(const WeightedDigraph& g, int q, Agg agg,
                                     EnumerationBudget budget = EnumerationBudget::from_env(7));
std::optional<Cost> enumerate_q_cycle(const WeightedDigraph& g, int q, Agg agg,
                                      EnumerationBudget budget = EnumerationBudget::from_env(7));

// -- color-alternating paths ------------------------------------------------

/// Best color-alternating s -> t walk by round-based relaxation of
/// (vertex, last color) states: round r holds the best walks of at most r
/// edges. Stops after n*(C+1) rounds.
std::optional<Cost> alt_walk_by_rounds(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg);

/// Best color-alternating simple s -> t path by depth-first enumeration.
std::optional<Cost> alt_simple_path(const ColoredDigraph& g, Vertex s, Vertex t, Agg agg,
                                    EnumerationBudget budget = EnumerationBudget::from_env(10));

// -- tournaments, cube paths, Euler cycles ----------------------------------

/// Number of vertex orders of a tournament (given by its sign matrix) with
/// an edge between every consecutive pair. n <= 9.
std::size_t count_tournament_ham_paths(const std::vector<std::vector<int>>& m);

/// All-pairs hop distances (-1 when unreachable) by repeated BFS.
std::vector<std::vector<int>> hop_distances(const WeightedGraph& ug);

/// Whether a color-alternating Euler cycle exists, by backtracking over
/// edge orders. m <= 12.
bool alt_euler_exists(const ColoredMultigraph& g);

}  // namespace qospath::oracles
