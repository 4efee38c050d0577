#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qospath/oracles.hpp"
#include "qospath/tournament.hpp"
#include "support.hpp"

using namespace qospath;
using namespace qospath::tournament;
using qospath::testing::Rng;

namespace {

constexpr Strategy kAll[] = {Strategy::insertion, Strategy::bubble, Strategy::binaryInsertion, Strategy::mergeSort};

std::vector<std::vector<int>> random_matrix(Rng& rng, int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int sign = testing::uniform(rng, 0, 1) ? 1 : -1;
      m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = sign;
      m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = -sign;
    }
  return m;
}

std::size_t ceil_log2(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace

TEST_CASE("single vertex") {
  for (Strategy s : kAll) {
    TournamentOracle o(1, transitive_tournament());
    CHECK(ham_path(o, s) == std::vector<Vertex>{0});
    CHECK(o.query_count() == 0);
  }
}

TEST_CASE("3-cycle") {
  const std::vector<std::vector<int>> m{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  CHECK(oracles::count_tournament_ham_paths(m) == 3);
  for (Strategy s : kAll) {
    TournamentOracle o(3, matrix_tournament(m));
    const auto p = ham_path(o, s);
    CHECK(verify_ham_path(o, p));
  }
}

TEST_CASE("transitive tournaments give the identity order") {
  for (Vertex n : {2, 5, 17, 64}) {
    std::vector<Vertex> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    for (Strategy s : kAll) {
      TournamentOracle o(n, transitive_tournament());
      CHECK(ham_path(o, s) == id);
    }
  }
}

TEST_CASE("verify_ham_path") {
  TournamentOracle o(3, transitive_tournament());
  CHECK(verify_ham_path(o, {0, 1, 2}));
  CHECK_FALSE(verify_ham_path(o, {2, 1, 0}));
  CHECK_FALSE(verify_ham_path(o, {0, 1}));
  CHECK_FALSE(verify_ham_path(o, {0, 1, 1}));
}

TEST_CASE("memoized queries and antisymmetry check") {
  int calls = 0;
  TournamentOracle o(3, [&](Vertex u, Vertex v) {
    ++calls;
    return u < v ? 1 : -1;
  });
  CHECK(o.ask(0, 1) == 1);
  CHECK(o.ask(1, 0) == -1);
  CHECK(o.query_count() == 1);
  CHECK(calls == 1);

  TournamentOracle bad(2, [](Vertex, Vertex) { return 1; }, true);
  CHECK_THROWS_AS(bad.ask(0, 1), InconsistentOracleError);
}

TEST_CASE("random tournaments: valid paths and query bounds") {
  Rng rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    const Vertex n = testing::uniform(rng, 1, 120);
    const auto ask = random_tournament(rng());
    for (Strategy s : kAll) {
      TournamentOracle o(n, ask);
      const auto p = ham_path(o, s);
      TournamentOracle fresh(n, ask);
      CHECK(verify_ham_path(fresh, p));
      const auto nn = static_cast<std::size_t>(n);
      if (s == Strategy::binaryInsertion) CHECK(o.query_count() <= nn * (ceil_log2(nn) + 2));
      if (s == Strategy::mergeSort) CHECK(o.query_count() <= nn * ceil_log2(nn) + nn);
      TournamentOracle again(n, ask);
      CHECK(ham_path(again, s) == p);
    }
  }
}

TEST_CASE("small matrices: every strategy finds one of the enumerated paths") {
  Rng rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    const auto m = random_matrix(rng, testing::uniform(rng, 1, 7));
    CHECK(oracles::count_tournament_ham_paths(m) >= 1);
    for (Strategy s : kAll) {
      TournamentOracle o(static_cast<Vertex>(m.size()), matrix_tournament(m), true);
      CHECK(verify_ham_path(o, ham_path(o, s)));
    }
  }
}

TEST_CASE("names") {
  for (Strategy s : kAll) CHECK(strategy_from_name(strategy_name(s)) == s);
  CHECK_FALSE(strategy_from_name("quick"));
}

TEST_CASE("parse_sign_matrix") {
  std::istringstream ok("3\n0 1 -1\n-1 0 1\n1 -1 0\n");
  CHECK(parse_sign_matrix(ok).size() == 3);
  std::istringstream asym("2\n0 1\n1 0\n");
  CHECK_THROWS_AS(parse_sign_matrix(asym), ParseError);
  std::istringstream diag("1\n1\n");
  CHECK_THROWS_AS(parse_sign_matrix(diag), ParseError);
  std::istringstream short_row("2\n0 1\n-1\n");
  CHECK_THROWS_AS(parse_sign_matrix(short_row), ParseError);
}
