#pragma once

// Euler cycle of an edge-colored undirected multigraph in which consecutive
// edges (including the last and the first) have different colors.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qospath/graph.hpp"

namespace qospath::euler {

enum class Reason { none, oddDegree, colorMajority, disconnected };

std::string_view reason_name(Reason r);

struct Feasibility {
  Reason reason = Reason::none;
  Vertex vertex = -1;         ///< offending vertex for oddDegree / colorMajority
  std::int32_t color = 0;     ///< offending color for colorMajority
  bool ok() const noexcept { return reason == Reason::none; }
};

/// Checks, in this order: every degree even (lowest offending vertex), no
/// color on more than half of a vertex's edge ends (lowest vertex, then
/// lowest color), one connected component among vertices with edges.
/// Self-loops count twice at their vertex.
Feasibility check_feasible(const ColoredMultigraph& g);

class ColorMajorityError : public std::invalid_argument {
public:
  ColorMajorityError(std::int64_t color, std::size_t count, std::size_t half);
  std::int64_t color() const noexcept { return color_; }

private:
  std::int64_t color_;
};

/// Splits 2P colored objects into P pairs of different colors. Colors are
/// renumbered in order of first appearance, classes are count-sorted by
/// non-increasing size and laid out contiguously, and object i of that
/// layout is paired with object P + i. Returns index pairs into `colors`.
/// Throws ColorMajorityError if a color occurs more than P times and
/// std::invalid_argument on an odd count.
std::vector<std::pair<std::size_t, std::size_t>> pair_objects(const std::vector<std::int64_t>& colors);

struct EulerCycle {
  std::vector<Vertex> vertices;        ///< vertices[k] is where edge k starts
  std::vector<std::int32_t> edge_ids;  ///< edge k joins vertices[k] and vertices[(k+1) % m]
};

struct EulerAnswer {
  Feasibility feasibility;
  EulerCycle cycle;  ///< empty unless feasible
};

/// Pairs the edge ends at every vertex, then grows the cycle from the
/// lowest-id vertex with edges by splicing in the closed trails that the
/// pairing induces, reversed when the forward orientation would clash.
EulerAnswer build_alt_euler(const ColoredMultigraph& g);

/// Every edge exactly once, consecutive edges share their vertex, and
/// cyclically adjacent edges differ in color.
bool verify_alt_euler(const ColoredMultigraph& g, const EulerCycle& cycle);

}  // namespace qospath::euler
