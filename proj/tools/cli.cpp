#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "qospath/aggregate.hpp"
#include "qospath/bicriteria.hpp"
#include "qospath/color_alt_euler.hpp"
#include "qospath/color_alt_path.hpp"
#include "qospath/cube_ham.hpp"
#include "qospath/graph.hpp"
#include "qospath/knapsack.hpp"
#include "qospath/oracles.hpp"
#include "qospath/sensitivity.hpp"
#include "qospath/subset_path.hpp"
#include "qospath/tournament.hpp"

namespace qospath::cli {

namespace {

// Anything wrong with the files or values handed to a subcommand.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class Record {
public:
  template <class T>
  void add(std::string key, const T& value) {
    std::ostringstream os;
    os << value;
    lines_.emplace_back(std::move(key), os.str());
  }
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const char* value) { lines_.emplace_back(std::move(key), value); }

  template <class Seq>
  void add_list(std::string key, const Seq& seq) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : seq) {
      os << (first ? "" : " ") << x;
      first = false;
    }
    lines_.emplace_back(std::move(key), os.str());
  }

  void verified(std::optional<bool> v) { add("verified", !v ? "skipped" : *v ? "true" : "false"); }

  void write(std::ostream& out) const {
    for (const auto& [k, v] : lines_) out << k << '=' << v << '\n';
  }

private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

template <class F>
auto read_file(const std::string& path, F parse) {
  auto in = open_input(path);
  return parse(in);
}

void check_vertex(Vertex v, Vertex n, const char* what) {
  if (v < 0 || v >= n) throw InputError(std::string(what) + " " + std::to_string(v) + " out of range");
}

std::string cost_text(Cost c) { return format_cost(c); }

// Runs an oracle comparison, mapping an exhausted budget to "skipped".
std::optional<bool> guarded(const std::function<bool()>& check) {
  try {
    return check();
  } catch (const oracles::BudgetExceeded&) {
    return std::nullopt;
  }
}

void add_categories(Record& r, const char* key, const std::vector<sensitivity::Category>& cats) {
  for (std::size_t i = 0; i < cats.size(); ++i)
    r.add(std::string(key) + "[" + std::to_string(i) + "]", sensitivity::category_number(cats[i]));
}

// -- subcommands ------------------------------------------------------------

struct BicriteriaArgs {
  std::string graph, sense = "atmost", objective = "min";
  Vertex source = 0, target = 0;
  std::uint64_t budget = 0;
  bool exact = false, verify = false;
};

Record run_bicriteria(const BicriteriaArgs& a) {
  using namespace bicriteria;
  const auto g = read_file(a.graph, [](std::istream& in) { return parse_biweighted(in); });
  check_vertex(a.source, g.vertex_count(), "source");
  check_vertex(a.target, g.vertex_count(), "target");
  ConstrainedQuery q{a.source, a.target, a.budget, a.sense == "atleast" ? Sense::atLeast : Sense::atMost,
                     a.objective == "max" ? Objective::maximizeW1 : Objective::minimizeW1};
  const auto ans = a.exact ? exact_constrained(g, q) : solve_constrained(g, q);
  Record r;
  r.add("status", std::string(status_name(ans.status)));
  if (ans.path) {
    r.add("w1sum", ans.path->w1sum);
    r.add("w2sum", ans.path->w2sum);
    r.add_list("vertices", ans.path->path.vertices);
    r.add_list("edges", ans.path->path.edges);
  }
  if (!a.exact) {
    r.add("x", cost_text(ans.x_star));
    r.add("evaluations", ans.evaluations);
  }
  if (a.verify) {
    r.verified(guarded([&] {
      const auto paths = oracles::enumerate_constrained_paths(g, a.source, a.target);
      const bool maximize = q.objective == Objective::maximizeW1;
      auto meets = [&](std::uint64_t w2) { return q.sense == Sense::atMost ? w2 <= q.budget : w2 >= q.budget; };
      std::optional<std::uint64_t> best;
      for (const auto& p : paths) {
        if (!meets(p.w2sum)) continue;
        if (!best || (maximize ? p.w1sum > *best : p.w1sum < *best)) best = p.w1sum;
      }
      if (!ans.path) return !best.has_value();
      std::uint64_t w1 = 0, w2 = 0;
      const auto& pr = ans.path->path;
      for (std::size_t k = 0; k < pr.edges.size(); ++k) {
        const auto& e = g.edge(pr.edges[k]);
        if (e.u != pr.vertices[k] || e.v != pr.vertices[k + 1]) return false;
        w1 += e.w1;
        w2 += e.w2;
      }
      if (w1 != ans.path->w1sum || w2 != ans.path->w2sum || !meets(w2)) return false;
      // Walks may beat simple paths in the exact method, never the reverse.
      if (ans.status == Status::optimal) return !best || (maximize ? w1 >= *best : w1 <= *best);
      return !best || (maximize ? w1 <= *best : w1 >= *best);
    }));
  }
  return r;
}

struct SensitivityArgs {
  std::string graph;
  Vertex source = 0, target = 0;
  bool undirected = false, unit = false, verify = false;
};

Record run_sensitivity(const SensitivityArgs& a) {
  Record r;
  sensitivity::ElementClassification c;
  std::function<sensitivity::ElementClassification()> oracle;
  if (a.undirected) {
    const auto ug = read_file(a.graph, [](std::istream& in) { return parse_weighted_undirected(in); });
    check_vertex(a.source, ug.vertex_count(), "source");
    check_vertex(a.target, ug.vertex_count(), "target");
    c = sensitivity::classify_undirected(ug, a.source, a.target, a.unit);
    oracle = [ug, &a] { return oracles::classify_undirected_by_enumeration(ug, a.source, a.target); };
  } else {
    const auto g = read_file(a.graph, [](std::istream& in) { return parse_weighted(in); });
    check_vertex(a.source, g.vertex_count(), "source");
    check_vertex(a.target, g.vertex_count(), "target");
    c = a.unit ? sensitivity::classify_unit(g, a.source, a.target)
               : sensitivity::classify_weighted(g, a.source, a.target);
    oracle = [g, &a] { return oracles::classify_by_enumeration(g, a.source, a.target); };
  }
  r.add("status", "ok");
  add_categories(r, "vertex", c.vertex);
  add_categories(r, "edge", c.edge);
  if (a.verify) r.verified(guarded([&] { return oracle() == c; }));
  return r;
}

struct KnapsackArgs {
  std::string items, cap = "2";
  std::int64_t target = 0;
  bool costs = false, verify = false;
};

Record run_knapsack(const KnapsackArgs& a) {
  auto inst = read_file(a.items, [&](std::istream& in) { return knapsack::parse_items(in, a.target, a.costs); });
  if (a.cap == "unbounded") {
    inst.count_cap = knapsack::kUnboundedCount;
  } else {
    try {
      std::size_t used = 0;
      inst.count_cap = std::stoull(a.cap, &used);
      if (used != a.cap.size()) throw std::invalid_argument(a.cap);
    } catch (const std::logic_error&) {
      throw InputError("--cap must be an integer >= 2 or 'unbounded'");
    }
  }
  const auto cats = a.costs ? knapsack::classify_mincost(inst) : knapsack::classify_feasibility(inst);
  Record r;
  const auto tables = knapsack::feasibility_tables(inst);
  const bool feasible = tables.ok1(inst.size(), static_cast<std::size_t>(inst.target));
  r.add("status", feasible ? "feasible" : "infeasible");
  if (a.costs && feasible) r.add("mincost", *knapsack::optimal_cost(inst));
  add_categories(r, "item", cats);
  if (a.verify) r.verified(guarded([&] { return oracles::classify_knapsack_by_enumeration(inst) == cats; }));
  return r;
}

struct TournamentArgs {
  Vertex n = 0;
  std::uint64_t seed = 0;
  std::string strategy = "binaryInsertion", matrix;
  bool verify = false;
};

Record run_tournament(const TournamentArgs& a) {
  using namespace tournament;
  const auto strategy = strategy_from_name(a.strategy);
  if (!strategy) throw InputError("unknown strategy " + a.strategy);
  Vertex n = a.n;
  AskFn ask;
  std::vector<std::vector<int>> m;
  if (!a.matrix.empty()) {
    m = read_file(a.matrix, [](std::istream& in) { return parse_sign_matrix(in); });
    n = static_cast<Vertex>(m.size());
    ask = matrix_tournament(m);
  } else {
    if (n < 0) throw InputError("--n must be non-negative");
    ask = random_tournament(a.seed);
  }
  TournamentOracle oracle(n, ask);
  const auto order = ham_path(oracle, *strategy);
  Record r;
  r.add("status", "ok");
  r.add("strategy", std::string(strategy_name(*strategy)));
  r.add_list("path", order);
  r.add("queries", oracle.query_count());
  if (a.verify) {
    TournamentOracle fresh(n, ask);
    r.verified(verify_ham_path(fresh, order));
  }
  return r;
}

struct QpathArgs {
  std::string graph, agg = "sum", mode = "path";
  int q = 1;
  std::optional<std::uint32_t> allow_mask;
  bool verify = false;
};

Record run_qpath(const QpathArgs& a) {
  const auto g = read_file(a.graph, [](std::istream& in) { return parse_weighted(in); });
  subset::SubsetQuery query;
  query.q = a.q;
  query.agg = *agg_from_name(a.agg);
  if (a.allow_mask) query.vertex_mask = *a.allow_mask;
  const bool cycle = a.mode == "cycle";
  std::optional<subset::SubsetAnswer> ans;
  try {
    ans = cycle ? subset::min_q_cycle(g, query) : subset::min_q_path(g, query);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Record r;
  r.add("status", ans ? "ok" : "infeasible");
  if (ans) {
    r.add("cost", cost_text(ans->cost));
    r.add_list("vertices", ans->walk.vertices);
    r.add_list("edges", ans->walk.edges);
  }
  if (a.verify) {
    if (a.allow_mask) {
      r.verified(std::nullopt);
    } else {
      r.verified(guarded([&] {
        const auto want = cycle ? oracles::enumerate_q_cycle(g, a.q, query.agg) : oracles::enumerate_q_path(g, a.q, query.agg);
        if (!want || !ans) return want.has_value() == ans.has_value();
        return *want == ans->cost && subset::walk_cost(g, ans->walk, query.agg) == ans->cost;
      }));
    }
  }
  return r;
}

struct CubeArgs {
  std::string graph;
  std::optional<Vertex> root;
  bool verify = false;
};

Record run_cube(const CubeArgs& a) {
  const auto ug = read_file(a.graph, [](std::istream& in) { return parse_weighted_undirected(in); });
  if (a.root) check_vertex(*a.root, ug.vertex_count(), "root");
  std::vector<Vertex> hp;
  try {
    hp = cube::cube_ham_path(ug, a.root);
  } catch (const cube::DisconnectedGraphError& e) {
    Record r;
    r.add("status", "infeasible");
    r.add("reason", "disconnected");
    return r;
  }
  Record r;
  r.add("status", "ok");
  r.add_list("vertices", hp);
  r.add_list("distances", cube::consecutive_distances(ug, hp));
  if (a.verify) {
    if (ug.vertex_count() > 2000) {
      r.verified(std::nullopt);
    } else {
      const auto d = oracles::hop_distances(ug);
      std::vector<char> seen(static_cast<std::size_t>(ug.vertex_count()), 0);
      bool ok = hp.size() == seen.size();
      for (std::size_t k = 0; ok && k < hp.size(); ++k) {
        ok = !seen[static_cast<std::size_t>(hp[k])]++;
        if (ok && k > 0) {
          const int dist = d[static_cast<std::size_t>(hp[k - 1])][static_cast<std::size_t>(hp[k])];
          ok = dist >= 0 && dist <= 3;
        }
      }
      r.verified(ok);
    }
  }
  return r;
}

struct AltPathArgs {
  std::string graph, agg = "sum", method = "expanded", mode = "queue";
  Vertex source = 0, target = 0;
  bool verify = false;
};

Record run_alt_path(const AltPathArgs& a) {
  const auto g = read_file(a.graph, [](std::istream& in) { return parse_colored_digraph(in); });
  check_vertex(a.source, g.vertex_count(), "source");
  check_vertex(a.target, g.vertex_count(), "target");
  const Agg agg = *agg_from_name(a.agg);
  std::optional<altpath::AltPathResult> ans;
  if (a.method == "expanded") {
    ans = altpath::alt_path_expanded(g, a.source, a.target, agg);
  } else {
    const auto mode = altpath::mode_from_name(a.mode);
    if (!mode) throw InputError("unknown mode " + a.mode);
    ans = altpath::alt_path_two_best(g, a.source, a.target, agg, *mode);
  }
  Record r;
  r.add("status", ans ? "ok" : "infeasible");
  if (ans) {
    r.add("cost", cost_text(ans->cost));
    r.add_list("vertices", ans->path.vertices);
    r.add_list("edges", ans->path.edges);
  }
  if (a.verify) {
    if (static_cast<std::size_t>(g.vertex_count()) * (static_cast<std::size_t>(g.color_count()) + 1) > 4000) {
      r.verified(std::nullopt);
    } else {
      const auto want = oracles::alt_walk_by_rounds(g, a.source, a.target, agg);
      bool ok = want.has_value() == ans.has_value();
      if (ok && ans) {
        ok = *want == ans->cost && altpath::is_alternating_path(g, ans->path, a.source, a.target) &&
             altpath::alt_path_cost(g, ans->path, agg) == ans->cost;
      }
      r.verified(ok);
    }
  }
  return r;
}

struct AltEulerArgs {
  std::string graph;
  bool verify = false;
};

Record run_alt_euler(const AltEulerArgs& a) {
  const auto g = read_file(a.graph, [](std::istream& in) { return parse_colored_multigraph(in); });
  const auto ans = euler::build_alt_euler(g);
  Record r;
  if (!ans.feasibility.ok()) {
    r.add("status", "infeasible");
    r.add("reason", std::string(euler::reason_name(ans.feasibility.reason)));
    if (ans.feasibility.vertex >= 0) r.add("vertex", ans.feasibility.vertex);
    if (ans.feasibility.reason == euler::Reason::colorMajority) r.add("color", ans.feasibility.color);
  } else {
    r.add("status", "ok");
    r.add_list("edges", ans.cycle.edge_ids);
    r.add_list("vertices", ans.cycle.vertices);
  }
  if (a.verify) {
    if (ans.feasibility.ok()) {
      r.verified(euler::verify_alt_euler(g, ans.cycle));
    } else {
      r.verified(guarded([&] { return !oracles::alt_euler_exists(g); }));
    }
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"QoS-constrained path algorithms", "qospath"};
  app.require_subcommand(1);

  BicriteriaArgs bi;
  auto* sub_bi = app.add_subcommand("bicriteria", "budget-constrained s-t path");
  sub_bi->add_option("--graph", bi.graph, "biweighted graph file")->required();
  sub_bi->add_option("--source", bi.source)->required();
  sub_bi->add_option("--target", bi.target)->required();
  sub_bi->add_option("--budget", bi.budget)->required();
  sub_bi->add_option("--sense", bi.sense)->check(CLI::IsMember({"atmost", "atleast"}));
  sub_bi->add_option("--objective", bi.objective)->check(CLI::IsMember({"min", "max"}));
  sub_bi->add_flag("--exact", bi.exact, "exact layered-graph optimum");
  sub_bi->add_flag("--verify", bi.verify);

  SensitivityArgs se;
  auto* sub_se = app.add_subcommand("sensitivity", "classify vertices and edges against all shortest paths");
  sub_se->add_option("--graph", se.graph, "weighted graph file")->required();
  sub_se->add_option("--source", se.source)->required();
  sub_se->add_option("--target", se.target)->required();
  sub_se->add_flag("--undirected", se.undirected);
  sub_se->add_flag("--unit", se.unit, "all edge weights are equal");
  sub_se->add_flag("--verify", se.verify);

  KnapsackArgs kn;
  auto* sub_kn = app.add_subcommand("knapsack-classify", "classify items against all subsets summing to S");
  sub_kn->add_option("--items", kn.items, "one 'w [cost]' per line")->required();
  sub_kn->add_option("--target", kn.target)->required();
  sub_kn->add_flag("--costs", kn.costs, "classify against minimum-cost subsets");
  sub_kn->add_option("--cap", kn.cap, "count cap Q, or 'unbounded'");
  sub_kn->add_flag("--verify", kn.verify);

  TournamentArgs to;
  auto* sub_to = app.add_subcommand("tournament", "Hamiltonian path of a tournament");
  auto* opt_n = sub_to->add_option("--n", to.n);
  sub_to->add_option("--seed", to.seed);
  sub_to->add_option("--strategy", to.strategy)
      ->check(CLI::IsMember({"insertion", "bubble", "binaryInsertion", "mergeSort"}));
  auto* opt_matrix = sub_to->add_option("--matrix", to.matrix, "sign matrix file");
  opt_n->excludes(opt_matrix);
  sub_to->add_flag("--verify", to.verify);

  QpathArgs qp;
  auto* sub_qp = app.add_subcommand("qpath", "best path or cycle on exactly Q vertices");
  sub_qp->add_option("--graph", qp.graph, "weighted graph file")->required();
  sub_qp->add_option("--q", qp.q)->required();
  sub_qp->add_option("--agg", qp.agg)->check(CLI::IsMember({"sum", "max"}));
  sub_qp->add_option("--mode", qp.mode)->check(CLI::IsMember({"path", "cycle"}));
  sub_qp->add_option("--allow-mask", qp.allow_mask, "bit v set = vertex v may be used");
  sub_qp->add_flag("--verify", qp.verify);

  CubeArgs cu;
  auto* sub_cu = app.add_subcommand("cube-ham", "Hamiltonian path of the cube of a connected graph");
  sub_cu->add_option("--graph", cu.graph, "weighted graph file, read as undirected")->required();
  sub_cu->add_option("--root", cu.root);
  sub_cu->add_flag("--verify", cu.verify);

  AltPathArgs ap;
  auto* sub_ap = app.add_subcommand("alt-path", "cheapest color-alternating s-t walk");
  sub_ap->add_option("--graph", ap.graph, "colored digraph file")->required();
  sub_ap->add_option("--source", ap.source)->required();
  sub_ap->add_option("--target", ap.target)->required();
  sub_ap->add_option("--agg", ap.agg)->check(CLI::IsMember({"sum", "max"}));
  sub_ap->add_option("--method", ap.method)->check(CLI::IsMember({"expanded", "twobest"}));
  sub_ap->add_option("--mode", ap.mode)->check(CLI::IsMember({"dag", "queue"}));
  sub_ap->add_flag("--verify", ap.verify);

  AltEulerArgs ae;
  auto* sub_ae = app.add_subcommand("alt-euler", "color-alternating Euler cycle");
  sub_ae->add_option("--graph", ae.graph, "colored multigraph file")->required();
  sub_ae->add_flag("--verify", ae.verify);

  auto fail = [&](const char* kind, const std::string& message, int code) {
    Record r;
    r.add("status", "error");
    r.add("error", kind);
    r.add("message", message);
    r.write(out);
    err << "qospath: " << message << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 1);
  }

  try {
    Record r;
    if (sub_bi->parsed()) r = run_bicriteria(bi);
    else if (sub_se->parsed()) r = run_sensitivity(se);
    else if (sub_kn->parsed()) r = run_knapsack(kn);
    else if (sub_to->parsed()) {
      if (!opt_n->count() && !opt_matrix->count()) return fail("usage", "tournament needs --n or --matrix", 1);
      r = run_tournament(to);
    } else if (sub_qp->parsed()) r = run_qpath(qp);
    else if (sub_cu->parsed()) r = run_cube(cu);
    else if (sub_ap->parsed()) r = run_alt_path(ap);
    else r = run_alt_euler(ae);
    r.write(out);
    return 0;
  } catch (const std::bad_alloc&) {
    return fail("input", "out of memory", 2);
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error and length_error all describe the input.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::length_error*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      return fail("input", e.what(), 2);
    }
    return fail("internal", e.what(), 3);
  } catch (const std::exception& e) {
    return fail("input", e.what(), 2);
  }
}

}  // namespace qospath::cli
