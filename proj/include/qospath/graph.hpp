#pragma once

// Graph value types shared by every algorithm module, plus the text formats
// read and written by the CLI.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qospath {

using Vertex = std::int32_t;
using EdgeIndex = std::int32_t;

/// Edge and vertex costs. Exact for integer values up to 2^53.
using Cost = double;

inline constexpr Cost kInfinity = std::numeric_limits<Cost>::infinity();

/// Thrown by the parsers. `line()` is 1-based; 0 when the error is not tied
/// to a particular line (e.g. truncated input).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Raised by graph constructors when an invariant does not hold.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------

struct BiweightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint64_t w1 = 0;
  std::uint64_t w2 = 0;
  friend bool operator==(const BiweightedEdge&, const BiweightedEdge&) = default;
};

/// Directed graph with two non-negative integer weights per edge.
class BiweightedDigraph {
public:
  BiweightedDigraph() = default;
  BiweightedDigraph(Vertex n, std::vector<BiweightedEdge> edges);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<BiweightedEdge>& edges() const noexcept { return edges_; }
  const BiweightedEdge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  /// Indices of the edges leaving `u`, in input order.
  const std::vector<EdgeIndex>& out_edges(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }

  friend bool operator==(const BiweightedDigraph& a, const BiweightedDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  Vertex n_ = 0;
  std::vector<BiweightedEdge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
};

// ---------------------------------------------------------------------------

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Cost w = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Single-weight directed graph with optional per-vertex costs.
class WeightedDigraph {
public:
  WeightedDigraph() = default;
  WeightedDigraph(Vertex n, std::vector<WeightedEdge> edges,
                  std::optional<std::vector<Cost>> vertex_cost = std::nullopt);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  const WeightedEdge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<EdgeIndex>& out_edges(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }
  bool has_vertex_costs() const noexcept { return vertex_cost_.has_value(); }
  /// 0 when the graph carries no vertex costs.
  Cost vertex_cost(Vertex u) const {
    return vertex_cost_ ? (*vertex_cost_)[static_cast<std::size_t>(u)] : Cost{0};
  }
  const std::optional<std::vector<Cost>>& vertex_costs() const noexcept { return vertex_cost_; }

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.vertex_cost_ == b.vertex_cost_;
  }

private:
  Vertex n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::optional<std::vector<Cost>> vertex_cost_;
  std::vector<std::vector<EdgeIndex>> out_;
};

/// Undirected counterpart of WeightedDigraph. Edge (u, v) is stored once;
/// the incidence index lists it at both endpoints.
class WeightedGraph {
public:
  WeightedGraph() = default;
  WeightedGraph(Vertex n, std::vector<WeightedEdge> edges,
                std::optional<std::vector<Cost>> vertex_cost = std::nullopt);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  const WeightedEdge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<EdgeIndex>& incident_edges(Vertex u) const { return inc_[static_cast<std::size_t>(u)]; }
  Vertex opposite(EdgeIndex e, Vertex u) const {
    const auto& ed = edge(e);
    return ed.u == u ? ed.v : ed.u;
  }
  const std::optional<std::vector<Cost>>& vertex_costs() const noexcept { return vertex_cost_; }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.vertex_cost_ == b.vertex_cost_;
  }

private:
  Vertex n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::optional<std::vector<Cost>> vertex_cost_;
  std::vector<std::vector<EdgeIndex>> inc_;
};

// ---------------------------------------------------------------------------

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Cost cost = 0;
  std::int32_t color = 1;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Directed graph with a cost and a color in 1..C on every edge, and a cost
/// on every vertex.
class ColoredDigraph {
public:
  ColoredDigraph() = default;
  ColoredDigraph(Vertex n, std::int32_t colors, std::vector<Cost> vertex_cost,
                 std::vector<ColoredEdge> edges);

  Vertex vertex_count() const noexcept { return n_; }
  std::int32_t color_count() const noexcept { return colors_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }
  const ColoredEdge& edge(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<EdgeIndex>& out_edges(Vertex u) const { return out_[static_cast<std::size_t>(u)]; }
  const std::vector<EdgeIndex>& in_edges(Vertex u) const { return in_[static_cast<std::size_t>(u)]; }
  Cost vertex_cost(Vertex u) const { return vertex_cost_[static_cast<std::size_t>(u)]; }
  const std::vector<Cost>& vertex_costs() const noexcept { return vertex_cost_; }

  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_ && a.vertex_cost_ == b.vertex_cost_ &&
           a.edges_ == b.edges_;
  }

private:
  Vertex n_ = 0;
  std::int32_t colors_ = 0;
  std::vector<Cost> vertex_cost_;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
};

struct MultigraphEdge {
  std::int32_t id = 1;  ///< unique, dense in 1..m
  Vertex u = 0;
  Vertex v = 0;
  std::int32_t color = 1;
  friend bool operator==(const MultigraphEdge&, const MultigraphEdge&) = default;
};

/// Undirected edge-colored multigraph. Parallel edges and self-loops are
/// allowed. Edges are kept in input order; `by_id` maps an id to its slot.
class ColoredMultigraph {
public:
  ColoredMultigraph() = default;
  ColoredMultigraph(Vertex n, std::int32_t colors, std::vector<MultigraphEdge> edges);

  Vertex vertex_count() const noexcept { return n_; }
  std::int32_t color_count() const noexcept { return colors_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<MultigraphEdge>& edges() const noexcept { return edges_; }
  const MultigraphEdge& by_id(std::int32_t id) const {
    return edges_[static_cast<std::size_t>(slot_of_id_[static_cast<std::size_t>(id)])];
  }
  /// Incident edge ids of `u`, ascending. A self-loop appears twice.
  const std::vector<std::int32_t>& incident_ids(Vertex u) const { return inc_[static_cast<std::size_t>(u)]; }
  std::size_t degree(Vertex u) const { return inc_[static_cast<std::size_t>(u)].size(); }

  friend bool operator==(const ColoredMultigraph& a, const ColoredMultigraph& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_ && a.edges_ == b.edges_;
  }

private:
  Vertex n_ = 0;
  std::int32_t colors_ = 0;
  std::vector<MultigraphEdge> edges_;
  std::vector<std::int32_t> slot_of_id_;  // index 0 unused
  std::vector<std::vector<std::int32_t>> inc_;
};

// ---------------------------------------------------------------------------

/// Ordered walk through a graph. For a path `edges.size() + 1 ==
/// vertices.size()`; for a cycle the two are equal and the last edge returns
/// to `vertices.front()`. An empty edge list with a single vertex is the
/// zero-length path.
struct PathResult {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;
  friend bool operator==(const PathResult&, const PathResult&) = default;
};

// ---------------------------------------------------------------------------

enum class GraphFormat { biweighted, weighted, coloredDigraph, coloredMultigraph };

std::optional<GraphFormat> format_from_name(std::string_view name);
std::string_view format_name(GraphFormat f);

using AnyGraph = std::variant<BiweightedDigraph, WeightedDigraph, ColoredDigraph, ColoredMultigraph>;

BiweightedDigraph parse_biweighted(std::istream& in);
WeightedDigraph parse_weighted(std::istream& in);
/// Same format as parse_weighted; each edge is read as undirected.
WeightedGraph parse_weighted_undirected(std::istream& in);
ColoredDigraph parse_colored_digraph(std::istream& in);
ColoredMultigraph parse_colored_multigraph(std::istream& in);

AnyGraph parse_graph(std::string_view text, GraphFormat kind);

std::string serialize(const BiweightedDigraph& g);
std::string serialize(const WeightedDigraph& g);
std::string serialize(const WeightedGraph& g);
std::string serialize(const ColoredDigraph& g);
std::string serialize(const ColoredMultigraph& g);
std::string serialize_graph(const AnyGraph& g);

/// Formats a cost with the shortest decimal that parses back to the same
/// value; integers print without a fraction.
std::string format_cost(Cost c);

// ---------------------------------------------------------------------------

WeightedDigraph transpose(const WeightedDigraph& g);

/// Doubled directed graph of an undirected one. Directed edges 2k and 2k+1
/// are (u, v) and (v, u) for undirected edge k.
struct DirectedView {
  WeightedDigraph graph;
  std::vector<EdgeIndex> origin;  ///< directed edge -> undirected edge
};

DirectedView undirected_to_directed(const WeightedGraph& ug);

}  // namespace qospath
