#include "qospath/aggregate.hpp"

namespace qospath {

std::optional<Agg> agg_from_name(std::string_view name) {
  if (name == "sum") return Agg::sum;
  if (name == "max") return Agg::max;
  return std::nullopt;
}

std::string_view agg_name(Agg a) { return a == Agg::sum ? "sum" : "max"; }

}  // namespace qospath
