#pragma once

// Classification of knapsack items relative to all subsets whose weights sum
// to exactly S (feasibility variant) or to all such subsets of minimum cost
// (cost variant). Categories as in sensitivity.hpp.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "qospath/sensitivity.hpp"

namespace qospath::knapsack {

using sensitivity::Category;

/// Count cap meaning "no cap". Counts still saturate at the type's maximum,
/// which keeps every positive count positive.
inline constexpr std::uint64_t kUnboundedCount = std::numeric_limits<std::uint64_t>::max();

/// Minimum cost marker for unreachable sums.
inline constexpr std::int64_t kNoCost = std::numeric_limits<std::int64_t>::max();

struct KnapsackInstance {
  std::vector<std::int64_t> weight;
  std::optional<std::vector<std::int64_t>> cost;  ///< required by the cost variant
  std::int64_t target = 0;
  std::uint64_t count_cap = 2;  ///< Q, at least 2

  std::size_t size() const noexcept { return weight.size(); }
};

/// Forward (items 1..i) and backward (items i..n) tables, rows 0..n+1 and
/// columns 0..S. The cost tables are empty for the feasibility variant; for
/// the cost variant ok(i, j) is cmin(i, j) < kNoCost and counts only cover
/// minimum-cost subsets.
class DpTables {
public:
  DpTables(std::size_t items, std::size_t target, bool with_cost);

  std::size_t items() const noexcept { return items_; }
  std::size_t target() const noexcept { return target_; }
  bool has_cost() const noexcept { return !cmin1_.empty(); }

  bool ok1(std::size_t i, std::size_t j) const { return ok1_[at(i, j)] != 0; }
  bool ok2(std::size_t i, std::size_t j) const { return ok2_[at(i, j)] != 0; }
  std::uint64_t cnt1(std::size_t i, std::size_t j) const { return cnt1_[at(i, j)]; }
  std::uint64_t cnt2(std::size_t i, std::size_t j) const { return cnt2_[at(i, j)]; }
  std::int64_t cmin1(std::size_t i, std::size_t j) const { return cmin1_[at(i, j)]; }
  std::int64_t cmin2(std::size_t i, std::size_t j) const { return cmin2_[at(i, j)]; }

private:
  friend DpTables feasibility_tables(const KnapsackInstance&);
  friend DpTables mincost_tables(const KnapsackInstance&);

  std::size_t at(std::size_t i, std::size_t j) const { return i * (target_ + 1) + j; }

  std::size_t items_;
  std::size_t target_;
  std::vector<char> ok1_, ok2_;
  std::vector<std::uint64_t> cnt1_, cnt2_;
  std::vector<std::int64_t> cmin1_, cmin2_;
};

/// Throws std::invalid_argument on negative weights/costs/target, Q < 2, or
/// a cost vector of the wrong length; std::length_error when the tables
/// would exceed kMaxTableCells.
void validate(const KnapsackInstance& inst, bool need_cost);

inline constexpr std::size_t kMaxTableCells = 100'000'000;

DpTables feasibility_tables(const KnapsackInstance& inst);
DpTables mincost_tables(const KnapsackInstance& inst);

std::vector<Category> classify_feasibility(const KnapsackInstance& inst);
std::vector<Category> classify_mincost(const KnapsackInstance& inst);

/// O(n^2 * S) reference that drops one item at a time. Uses the cost
/// variant when the instance carries costs.
std::vector<Category> classify_by_removal(const KnapsackInstance& inst);

/// Minimum cost of a subset summing to S, or nullopt when none exists.
std::optional<std::int64_t> optimal_cost(const KnapsackInstance& inst);

/// One "w [cost]" pair per line; blank lines and '#' comments are skipped.
/// With `with_cost` every line must carry a cost, otherwise a second column
/// is ignored. Throws ParseError.
KnapsackInstance parse_items(std::istream& in, std::int64_t target, bool with_cost);

}  // namespace qospath::knapsack
