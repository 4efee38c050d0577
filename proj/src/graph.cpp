#include "qospath/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace qospath {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

void check_vertex(Vertex v, Vertex n, const char* what) {
  if (v < 0 || v >= n) {
    throw GraphError(std::string(what) + " vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n) + ")");
  }
}

void check_cost(Cost c, const char* what) {
  if (!(c >= 0) || !std::isfinite(c)) {
    throw GraphError(std::string(what) + " must be a finite non-negative number");
  }
}

// Rejects self-loops and repeated (u, v) pairs. `undirected` treats (u, v)
// and (v, u) as the same pair.
template <typename Edges>
void check_simple(const Edges& edges, bool undirected) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    const std::pair<Vertex, Vertex> key = undirected ? std::pair{std::min(e.u, e.v), std::max(e.u, e.v)} : std::pair{e.u, e.v};
    if (!seen.insert(key).second) {
      throw GraphError("parallel edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
}

std::vector<std::vector<EdgeIndex>> index_by(Vertex n, std::size_t m, auto key) {
  std::vector<std::vector<EdgeIndex>> idx(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < m; ++e) idx[static_cast<std::size_t>(key(e))].push_back(static_cast<EdgeIndex>(e));
  return idx;
}

}  // namespace

BiweightedDigraph::BiweightedDigraph(Vertex n, std::vector<BiweightedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (const auto& e : edges_) {
    check_vertex(e.u, n_, "source");
    check_vertex(e.v, n_, "target");
  }
  check_simple(edges_, false);
  out_ = index_by(n_, edges_.size(), [&](std::size_t e) { return edges_[e].u; });
}

WeightedDigraph::WeightedDigraph(Vertex n, std::vector<WeightedEdge> edges,
                                 std::optional<std::vector<Cost>> vertex_cost)
    : n_(n), edges_(std::move(edges)), vertex_cost_(std::move(vertex_cost)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (const auto& e : edges_) {
    check_vertex(e.u, n_, "source");
    check_vertex(e.v, n_, "target");
    check_cost(e.w, "edge weight");
  }
  if (vertex_cost_) {
    if (vertex_cost_->size() != static_cast<std::size_t>(n_)) throw GraphError("vertex cost count differs from n");
    for (Cost c : *vertex_cost_) check_cost(c, "vertex cost");
  }
  check_simple(edges_, false);
  out_ = index_by(n_, edges_.size(), [&](std::size_t e) { return edges_[e].u; });
}

WeightedGraph::WeightedGraph(Vertex n, std::vector<WeightedEdge> edges,
                             std::optional<std::vector<Cost>> vertex_cost)
    : n_(n), edges_(std::move(edges)), vertex_cost_(std::move(vertex_cost)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (const auto& e : edges_) {
    check_vertex(e.u, n_, "endpoint");
    check_vertex(e.v, n_, "endpoint");
    check_cost(e.w, "edge weight");
  }
  if (vertex_cost_) {
    if (vertex_cost_->size() != static_cast<std::size_t>(n_)) throw GraphError("vertex cost count differs from n");
    for (Cost c : *vertex_cost_) check_cost(c, "vertex cost");
  }
  check_simple(edges_, true);
  inc_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    inc_[static_cast<std::size_t>(edges_[e].u)].push_back(static_cast<EdgeIndex>(e));
    inc_[static_cast<std::size_t>(edges_[e].v)].push_back(static_cast<EdgeIndex>(e));
  }
}

ColoredDigraph::ColoredDigraph(Vertex n, std::int32_t colors, std::vector<Cost> vertex_cost,
                               std::vector<ColoredEdge> edges)
    : n_(n), colors_(colors), vertex_cost_(std::move(vertex_cost)), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  if (colors_ < 0) throw GraphError("negative color count");
  if (vertex_cost_.size() != static_cast<std::size_t>(n_)) throw GraphError("vertex cost count differs from n");
  for (Cost c : vertex_cost_) check_cost(c, "vertex cost");
  for (const auto& e : edges_) {
    check_vertex(e.u, n_, "source");
    check_vertex(e.v, n_, "target");
    check_cost(e.cost, "edge cost");
    if (e.color < 1 || e.color > colors_) {
      throw GraphError("color " + std::to_string(e.color) + " outside 1.." + std::to_string(colors_));
    }
  }
  check_simple(edges_, false);
  out_ = index_by(n_, edges_.size(), [&](std::size_t e) { return edges_[e].u; });
  in_ = index_by(n_, edges_.size(), [&](std::size_t e) { return edges_[e].v; });
}

ColoredMultigraph::ColoredMultigraph(Vertex n, std::int32_t colors, std::vector<MultigraphEdge> edges)
    : n_(n), colors_(colors), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  if (colors_ < 0) throw GraphError("negative color count");
  const auto m = static_cast<std::int32_t>(edges_.size());
  slot_of_id_.assign(static_cast<std::size_t>(m) + 1, -1);
  for (std::int32_t i = 0; i < m; ++i) {
    const auto& e = edges_[static_cast<std::size_t>(i)];
    check_vertex(e.u, n_, "endpoint");
    check_vertex(e.v, n_, "endpoint");
    if (e.color < 1 || e.color > colors_) {
      throw GraphError("color " + std::to_string(e.color) + " outside 1.." + std::to_string(colors_));
    }
    if (e.id < 1 || e.id > m) {
      throw GraphError("edge id " + std::to_string(e.id) + " outside 1.." + std::to_string(m));
    }
    auto& slot = slot_of_id_[static_cast<std::size_t>(e.id)];
    if (slot != -1) throw GraphError("duplicate edge id " + std::to_string(e.id));
    slot = i;
  }
  inc_.assign(static_cast<std::size_t>(n_), {});
  for (std::int32_t id = 1; id <= m; ++id) {
    const auto& e = by_id(id);
    inc_[static_cast<std::size_t>(e.u)].push_back(id);
    inc_[static_cast<std::size_t>(e.v)].push_back(id);
  }
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

// Line-oriented tokenizer: skips blank lines and lines starting with '#'.
class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment line split into tokens, or nullopt at end of input.
  std::optional<std::vector<std::string>> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos || raw[first] == '#') continue;
      std::istringstream ss(raw);
      std::vector<std::string> tokens;
      for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));
      return tokens;
    }
    return std::nullopt;
  }

  std::vector<std::string> expect(const char* what) {
    auto t = next();
    if (!t) throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
    return std::move(*t);
  }

  void expect_end() {
    if (next()) throw ParseError(line_, "trailing content after the last edge line");
  }

  std::size_t line() const noexcept { return line_; }

private:
  std::istream& in_;
  std::size_t line_ = 0;
};

template <typename T>
T to_number(const std::string& tok, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return value;
}

Cost to_cost(const std::string& tok, std::size_t line, const char* what) {
  auto c = to_number<double>(tok, line, what);
  if (!(c >= 0) || !std::isfinite(c)) throw ParseError(line, std::string(what) + " must be finite and >= 0");
  return c;
}

void expect_arity(const std::vector<std::string>& t, std::size_t k, std::size_t line, const char* what) {
  if (t.size() != k) {
    throw ParseError(line, std::string(what) + ": expected " + std::to_string(k) + " fields, got " +
                               std::to_string(t.size()));
  }
}

// Runs `build` and rethrows GraphError as a ParseError at `line`.
template <typename F>
auto build_at(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const GraphError& e) {
    throw ParseError(line, e.what());
  }
}

// Per-line rejection of self-loops and repeated pairs for the simple kinds.
class SimpleEdgeGuard {
public:
  explicit SimpleEdgeGuard(bool undirected) : undirected_(undirected) {}
  void add(Vertex u, Vertex v, std::size_t line) {
    if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
    const std::pair<Vertex, Vertex> key = undirected_ ? std::pair{std::min(u, v), std::max(u, v)} : std::pair{u, v};
    if (!seen_.insert(key).second) {
      throw ParseError(line, "parallel edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }

private:
  bool undirected_;
  std::set<std::pair<Vertex, Vertex>> seen_;
};

void check_range(Vertex v, Vertex n, std::size_t line) {
  if (v < 0 || v >= n) {
    throw ParseError(line, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  }
}

struct WeightedParts {
  Vertex n = 0;
  std::vector<WeightedEdge> edges;
  std::optional<std::vector<Cost>> vertex_cost;
  std::size_t last_line = 0;
};

WeightedParts read_weighted(std::istream& in, bool undirected) {
  LineReader r(in);
  SimpleEdgeGuard guard(undirected);
  auto h = r.expect("header");
  if (h.size() != 2 && h.size() != 3) throw ParseError(r.line(), "header: expected 'n m [V]'");
  WeightedParts p;
  p.n = to_number<Vertex>(h[0], r.line(), "vertex count");
  const auto m = to_number<std::size_t>(h[1], r.line(), "edge count");
  if (h.size() == 3) {
    if (h[2] != "V") throw ParseError(r.line(), "header flag must be 'V'");
    std::vector<Cost> costs;
    if (p.n > 0) {
      auto c = r.expect("vertex costs");
      expect_arity(c, static_cast<std::size_t>(p.n), r.line(), "vertex cost line");
      for (const auto& tok : c) costs.push_back(to_cost(tok, r.line(), "vertex cost"));
    }
    p.vertex_cost = std::move(costs);
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto t = r.expect("edge line");
    expect_arity(t, 3, r.line(), "edge");
    WeightedEdge e{to_number<Vertex>(t[0], r.line(), "vertex"), to_number<Vertex>(t[1], r.line(), "vertex"),
                   to_cost(t[2], r.line(), "weight")};
    check_range(e.u, p.n, r.line());
    check_range(e.v, p.n, r.line());
    guard.add(e.u, e.v, r.line());
    p.edges.push_back(e);
  }
  p.last_line = r.line();
  r.expect_end();
  return p;
}

}  // namespace

BiweightedDigraph parse_biweighted(std::istream& in) {
  LineReader r(in);
  auto h = r.expect("header");
  expect_arity(h, 2, r.line(), "header");
  const auto n = to_number<Vertex>(h[0], r.line(), "vertex count");
  const auto m = to_number<std::size_t>(h[1], r.line(), "edge count");
  std::vector<BiweightedEdge> edges;
  SimpleEdgeGuard guard(false);
  for (std::size_t i = 0; i < m; ++i) {
    auto t = r.expect("edge line");
    expect_arity(t, 4, r.line(), "edge");
    BiweightedEdge e{to_number<Vertex>(t[0], r.line(), "vertex"), to_number<Vertex>(t[1], r.line(), "vertex"),
                     to_number<std::uint64_t>(t[2], r.line(), "w1"),
                     to_number<std::uint64_t>(t[3], r.line(), "w2")};
    check_range(e.u, n, r.line());
    check_range(e.v, n, r.line());
    guard.add(e.u, e.v, r.line());
    edges.push_back(e);
  }
  const auto last = r.line();
  r.expect_end();
  return build_at(last, [&] { return BiweightedDigraph(n, std::move(edges)); });
}

WeightedDigraph parse_weighted(std::istream& in) {
  auto p = read_weighted(in, false);
  return build_at(p.last_line,
                  [&] { return WeightedDigraph(p.n, std::move(p.edges), std::move(p.vertex_cost)); });
}

WeightedGraph parse_weighted_undirected(std::istream& in) {
  auto p = read_weighted(in, true);
  return build_at(p.last_line,
                  [&] { return WeightedGraph(p.n, std::move(p.edges), std::move(p.vertex_cost)); });
}

ColoredDigraph parse_colored_digraph(std::istream& in) {
  LineReader r(in);
  auto h = r.expect("header");
  expect_arity(h, 3, r.line(), "header");
  const auto n = to_number<Vertex>(h[0], r.line(), "vertex count");
  const auto m = to_number<std::size_t>(h[1], r.line(), "edge count");
  const auto colors = to_number<std::int32_t>(h[2], r.line(), "color count");
  std::vector<Cost> vc;
  if (n > 0) {
    auto c = r.expect("vertex costs");
    expect_arity(c, static_cast<std::size_t>(n), r.line(), "vertex cost line");
    for (const auto& tok : c) vc.push_back(to_cost(tok, r.line(), "vertex cost"));
  }
  std::vector<ColoredEdge> edges;
  SimpleEdgeGuard guard(false);
  for (std::size_t i = 0; i < m; ++i) {
    auto t = r.expect("edge line");
    expect_arity(t, 4, r.line(), "edge");
    ColoredEdge e{to_number<Vertex>(t[0], r.line(), "vertex"), to_number<Vertex>(t[1], r.line(), "vertex"),
                  to_cost(t[2], r.line(), "cost"), to_number<std::int32_t>(t[3], r.line(), "color")};
    check_range(e.u, n, r.line());
    check_range(e.v, n, r.line());
    if (e.color < 1 || e.color > colors) throw ParseError(r.line(), "color out of range 1.." + std::to_string(colors));
    guard.add(e.u, e.v, r.line());
    edges.push_back(e);
  }
  const auto last = r.line();
  r.expect_end();
  return build_at(last, [&] { return ColoredDigraph(n, colors, std::move(vc), std::move(edges)); });
}

ColoredMultigraph parse_colored_multigraph(std::istream& in) {
  LineReader r(in);
  auto h = r.expect("header");
  expect_arity(h, 3, r.line(), "header");
  const auto n = to_number<Vertex>(h[0], r.line(), "vertex count");
  const auto m = to_number<std::size_t>(h[1], r.line(), "edge count");
  const auto colors = to_number<std::int32_t>(h[2], r.line(), "color count");
  std::vector<MultigraphEdge> edges;
  std::vector<bool> seen(m + 1, false);
  for (std::size_t i = 0; i < m; ++i) {
    auto t = r.expect("edge line");
    expect_arity(t, 4, r.line(), "edge");
    MultigraphEdge e{to_number<std::int32_t>(t[0], r.line(), "edge id"), to_number<Vertex>(t[1], r.line(), "vertex"),
                     to_number<Vertex>(t[2], r.line(), "vertex"), to_number<std::int32_t>(t[3], r.line(), "color")};
    if (e.id < 1 || static_cast<std::size_t>(e.id) > m) {
      throw ParseError(r.line(), "edge id " + std::to_string(e.id) + " outside 1.." + std::to_string(m));
    }
    if (seen[static_cast<std::size_t>(e.id)]) throw ParseError(r.line(), "duplicate edge id " + std::to_string(e.id));
    seen[static_cast<std::size_t>(e.id)] = true;
    check_range(e.u, n, r.line());
    check_range(e.v, n, r.line());
    if (e.color < 1 || e.color > colors) throw ParseError(r.line(), "color out of range 1.." + std::to_string(colors));
    edges.push_back(e);
  }
  const auto last = r.line();
  r.expect_end();
  return build_at(last, [&] { return ColoredMultigraph(n, colors, std::move(edges)); });
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "biweighted") return GraphFormat::biweighted;
  if (name == "weighted") return GraphFormat::weighted;
  if (name == "colored-digraph") return GraphFormat::coloredDigraph;
  if (name == "colored-multigraph") return GraphFormat::coloredMultigraph;
  return std::nullopt;
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::biweighted: return "biweighted";
    case GraphFormat::weighted: return "weighted";
    case GraphFormat::coloredDigraph: return "colored-digraph";
    case GraphFormat::coloredMultigraph: return "colored-multigraph";
  }
  return "unknown";
}

AnyGraph parse_graph(std::string_view text, GraphFormat kind) {
  std::istringstream in{std::string(text)};
  switch (kind) {
    case GraphFormat::biweighted: return parse_biweighted(in);
    case GraphFormat::weighted: return parse_weighted(in);
    case GraphFormat::coloredDigraph: return parse_colored_digraph(in);
    case GraphFormat::coloredMultigraph: return parse_colored_multigraph(in);
  }
  throw std::logic_error("unknown graph format");
}

std::string format_cost(Cost c) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

std::string costs_line(const std::vector<Cost>& costs) {
  std::string s;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (i) s += ' ';
    s += format_cost(costs[i]);
  }
  return s + '\n';
}

template <typename G>
std::string serialize_weighted(const G& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count();
  if (g.vertex_costs()) out << " V";
  out << '\n';
  if (g.vertex_costs()) out << costs_line(*g.vertex_costs());
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_cost(e.w) << '\n';
  return out.str();
}

}  // namespace

std::string serialize(const BiweightedDigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w1 << ' ' << e.w2 << '\n';
  return out.str();
}

std::string serialize(const WeightedDigraph& g) { return serialize_weighted(g); }
std::string serialize(const WeightedGraph& g) { return serialize_weighted(g); }

std::string serialize(const ColoredDigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.color_count() << '\n';
  if (g.vertex_count() > 0) out << costs_line(g.vertex_costs());
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << format_cost(e.cost) << ' ' << e.color << '\n';
  return out.str();
}

std::string serialize(const ColoredMultigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.color_count() << '\n';
  for (const auto& e : g.edges()) out << e.id << ' ' << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

std::string serialize_graph(const AnyGraph& g) {
  return std::visit([](const auto& x) { return serialize(x); }, g);
}

// ---------------------------------------------------------------------------

WeightedDigraph transpose(const WeightedDigraph& g) {
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.push_back({e.v, e.u, e.w});
  return WeightedDigraph(g.vertex_count(), std::move(edges), g.vertex_costs());
}

DirectedView undirected_to_directed(const WeightedGraph& ug) {
  std::vector<WeightedEdge> edges;
  std::vector<EdgeIndex> origin;
  edges.reserve(2 * ug.edge_count());
  origin.reserve(2 * ug.edge_count());
  for (std::size_t k = 0; k < ug.edge_count(); ++k) {
    const auto& e = ug.edges()[k];
    edges.push_back({e.u, e.v, e.w});
    edges.push_back({e.v, e.u, e.w});
    origin.push_back(static_cast<EdgeIndex>(k));
    origin.push_back(static_cast<EdgeIndex>(k));
  }
  return {WeightedDigraph(ug.vertex_count(), std::move(edges), ug.vertex_costs()), std::move(origin)};
}

}  // namespace qospath
