#pragma once

// The two aggregation functions shared by the path/cycle searches. Both are
// associative, commutative and monotone, with neutral element 0 on
// non-negative costs.

#include <optional>
#include <string_view>

#include "qospath/graph.hpp"

namespace qospath {

enum class Agg { sum, max };

std::optional<Agg> agg_from_name(std::string_view name);
std::string_view agg_name(Agg a);

inline Cost combine(Agg a, Cost x, Cost y) { return a == Agg::sum ? x + y : (x < y ? y : x); }

}  // namespace qospath
