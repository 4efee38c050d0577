#include "qospath/tournament.hpp"

#include <istream>
#include <sstream>
#include <string>
#include <utility>

namespace qospath::tournament {

TournamentOracle::TournamentOracle(Vertex n, AskFn ask, bool check_antisymmetry)
    : n_(n), ask_(std::move(ask)), check_(check_antisymmetry) {
  if (n < 1) throw std::invalid_argument("a tournament needs at least one vertex");
}

int TournamentOracle::ask(Vertex u, Vertex v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("ask: vertex out of range");
  if (u == v) throw std::invalid_argument("ask: u and v must differ");
  const Vertex lo = std::min(u, v);
  const Vertex hi = std::max(u, v);
  const auto key = (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    const int a = ask_(lo, hi);
    if (a != 1 && a != -1) throw InconsistentOracleError("ask must answer +1 or -1");
    if (check_ && ask_(hi, lo) != -a) {
      throw InconsistentOracleError("ask(" + std::to_string(lo) + ", " + std::to_string(hi) +
                                    ") and its reverse agree");
    }
    it = memo_.emplace(key, a == 1).first;
  }
  return it->second == (u == lo) ? 1 : -1;
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
  if (name == "insertion") return Strategy::insertion;
  if (name == "bubble") return Strategy::bubble;
  if (name == "binaryInsertion") return Strategy::binaryInsertion;
  if (name == "mergeSort") return Strategy::mergeSort;
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::insertion: return "insertion";
    case Strategy::bubble: return "bubble";
    case Strategy::binaryInsertion: return "binaryInsertion";
    case Strategy::mergeSort: return "mergeSort";
  }
  return "?";
}

namespace {

std::vector<Vertex> by_insertion(TournamentOracle& o) {
  std::vector<Vertex> path{0};
  for (Vertex i = 1; i < o.size(); ++i) {
    if (o.has_edge(i, path.front())) {
      path.insert(path.begin(), i);
    } else if (o.has_edge(path.back(), i)) {
      path.push_back(i);
    } else {
      std::size_t j = 1;
      while (!o.has_edge(i, path[j])) ++j;
      path.insert(path.begin() + static_cast<std::ptrdiff_t>(j), i);
    }
  }
  return path;
}

std::vector<Vertex> by_bubble(TournamentOracle& o) {
  const auto n = static_cast<std::size_t>(o.size());
  std::vector<Vertex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i);
  // Every swap fixes one backward pair and creates none, so the loop ends;
  // the cap turns a broken oracle into an error instead of a hang.
  for (std::size_t pass = 0;; ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (o.has_edge(p[i + 1], p[i])) {
        std::swap(p[i], p[i + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
    if (pass + 1 > n) throw std::logic_error("bubble strategy exceeded its pass cap");
  }
  return p;
}

std::vector<Vertex> by_binary_insertion(TournamentOracle& o) {
  std::vector<Vertex> path{0};
  for (Vertex i = 1; i < o.size(); ++i) {
    if (o.has_edge(i, path.front())) {
      path.insert(path.begin(), i);
      continue;
    }
    if (o.has_edge(path.back(), i)) {
      path.push_back(i);
      continue;
    }
    // v(a) -> i and i -> v(b) hold throughout.
    std::size_t a = 0;
    std::size_t b = path.size() - 1;
    while (b != a + 1) {
      const std::size_t c = (a + b) / 2;
      if (o.has_edge(path[c], i)) {
        a = c;
      } else {
        b = c;
      }
    }
    path.insert(path.begin() + static_cast<std::ptrdiff_t>(b), i);
  }
  return path;
}

// Merging two valid paths keeps validity: a head is emitted only when it
// beats the other head, and list-internal neighbours are already edges.
void merge_sort(TournamentOracle& o, std::vector<Vertex>& v, std::vector<Vertex>& buf, std::size_t lo,
                std::size_t hi) {
  if (hi - lo < 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort(o, v, buf, lo, mid);
  merge_sort(o, v, buf, mid, hi);
  std::size_t l = lo, r = mid, k = lo;
  while (l < mid && r < hi) buf[k++] = o.has_edge(v[r], v[l]) ? v[r++] : v[l++];
  while (l < mid) buf[k++] = v[l++];
  while (r < hi) buf[k++] = v[r++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
}

std::vector<Vertex> by_merge_sort(TournamentOracle& o) {
  const auto n = static_cast<std::size_t>(o.size());
  std::vector<Vertex> v(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  merge_sort(o, v, buf, 0, n);
  return v;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<Vertex> ham_path(TournamentOracle& oracle, Strategy strategy) {
  switch (strategy) {
    case Strategy::insertion: return by_insertion(oracle);
    case Strategy::bubble: return by_bubble(oracle);
    case Strategy::binaryInsertion: return by_binary_insertion(oracle);
    case Strategy::mergeSort: return by_merge_sort(oracle);
  }
  throw std::invalid_argument("unknown strategy");
}

bool verify_ham_path(TournamentOracle& oracle, const std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(oracle.size());
  if (order.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!oracle.has_edge(order[i], order[i + 1])) return false;
  return true;
}

AskFn random_tournament(std::uint64_t seed) {
  return [seed](Vertex u, Vertex v) {
    const Vertex lo = std::min(u, v);
    const Vertex hi = std::max(u, v);
    const auto h = splitmix64(splitmix64(seed ^ static_cast<std::uint64_t>(lo)) ^ static_cast<std::uint64_t>(hi));
    const bool lo_to_hi = (h >> 63) != 0;
    return lo_to_hi == (u == lo) ? 1 : -1;
  };
}

AskFn transitive_tournament() {
  return [](Vertex u, Vertex v) { return u < v ? 1 : -1; };
}

AskFn matrix_tournament(std::vector<std::vector<int>> m) {
  return [m = std::move(m)](Vertex u, Vertex v) {
    return m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  };
}

std::vector<std::vector<int>> parse_sign_matrix(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_of;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream ss(raw);
    std::vector<std::string> tok;
    for (std::string s; ss >> s;) tok.push_back(s);
    rows.push_back(std::move(tok));
    line_of.push_back(line);
  }
  if (rows.empty()) throw ParseError(0, "empty matrix input");
  if (rows[0].size() != 1) throw ParseError(line_of[0], "expected the vertex count alone on the first line");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(rows[0][0], &used);
    if (used != rows[0][0].size() || n < 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError(line_of[0], "vertex count must be a positive integer");
  }
  const auto un = static_cast<std::size_t>(n);
  if (rows.size() != un + 1) throw ParseError(0, "expected " + std::to_string(n) + " matrix rows");
  std::vector<std::vector<int>> m(un, std::vector<int>(un, 0));
  for (std::size_t u = 0; u < un; ++u) {
    const auto& r = rows[u + 1];
    const auto line = line_of[u + 1];
    if (r.size() != un) throw ParseError(line, "row must have " + std::to_string(n) + " entries");
    for (std::size_t v = 0; v < un; ++v) {
      if (r[v] == "1" || r[v] == "+1") {
        m[u][v] = 1;
      } else if (r[v] == "-1") {
        m[u][v] = -1;
      } else if (r[v] != "0") {
        throw ParseError(line, "entries must be -1, 0 or 1");
      }
    }
  }
  for (std::size_t u = 0; u < un; ++u) {
    if (m[u][u] != 0) throw ParseError(line_of[u + 1], "diagonal entries must be 0");
    for (std::size_t v = u + 1; v < un; ++v) {
      if (m[u][v] == 0 || m[u][v] != -m[v][u]) {
        throw ParseError(line_of[u + 1], "entries (" + std::to_string(u) + ", " + std::to_string(v) +
                                             ") and its mirror must be opposite non-zero signs");
      }
    }
  }
  return m;
}

}  // namespace qospath::tournament
