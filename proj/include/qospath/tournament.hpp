#pragma once

// Hamiltonian paths in a tournament that is only reachable through
// Ask(u, v) queries.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qospath/graph.hpp"

namespace qospath::tournament {

/// +1 if the edge u -> v exists, -1 if v -> u does.
using AskFn = std::function<int(Vertex, Vertex)>;

class InconsistentOracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Memoizing wrapper around an ask callback. Each unordered pair is sent to
/// the callback at most once; query_count() is the number of distinct pairs
/// asked. With `check_antisymmetry` the first query of a pair asks both
/// orientations and rejects answers that do not differ in sign.
class TournamentOracle {
public:
  TournamentOracle(Vertex n, AskFn ask, bool check_antisymmetry = false);

  int ask(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) { return ask(u, v) == 1; }
  Vertex size() const noexcept { return n_; }
  std::size_t query_count() const noexcept { return memo_.size(); }

private:
  Vertex n_;
  AskFn ask_;
  bool check_;
  std::unordered_map<std::uint64_t, bool> memo_;  // (min, max) -> edge min -> max
};

enum class Strategy { insertion, bubble, binaryInsertion, mergeSort };

std::optional<Strategy> strategy_from_name(std::string_view name);
std::string_view strategy_name(Strategy s);

/// Vertex order v(1..n) with an edge between every consecutive pair.
std::vector<Vertex> ham_path(TournamentOracle& oracle, Strategy strategy);

/// True iff `order` is a permutation of the oracle's vertices and every
/// consecutive pair is an edge in path direction.
bool verify_ham_path(TournamentOracle& oracle, const std::vector<Vertex>& order);

/// Pair orientation drawn from a hash of (seed, min, max), so arbitrarily
/// large tournaments need no storage.
AskFn random_tournament(std::uint64_t seed);

/// i -> j iff i < j.
AskFn transitive_tournament();

/// `m[u][v]` is +1 for u -> v and -1 for v -> u; the diagonal is ignored.
AskFn matrix_tournament(std::vector<std::vector<int>> m);

/// "n" on the first line followed by n rows of n signs in {-1, 0, 1}.
/// The diagonal must be 0 and m[u][v] = -m[v][u] elsewhere.
std::vector<std::vector<int>> parse_sign_matrix(std::istream& in);

}  // namespace qospath::tournament
