#include "qospath/knapsack.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qospath/graph.hpp"

namespace qospath::knapsack {

namespace {

std::uint64_t add_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  std::uint64_t s = 0;
  if (__builtin_add_overflow(a, b, &s)) return cap;
  return s < cap ? s : cap;
}

std::uint64_t mul_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  std::uint64_t p = 0;
  if (__builtin_mul_overflow(a, b, &p)) return cap;
  return p < cap ? p : cap;
}

std::int64_t add_cost(std::int64_t a, std::int64_t b) {
  if (a == kNoCost || b == kNoCost) return kNoCost;
  std::int64_t s = 0;
  if (__builtin_add_overflow(a, b, &s) || s == kNoCost) throw std::overflow_error("knapsack cost sum overflows");
  return s;
}

std::size_t target_of(const KnapsackInstance& inst) { return static_cast<std::size_t>(inst.target); }

// Weight of item i (1-based) as a column offset; weights above S never fit.
std::size_t weight_of(const KnapsackInstance& inst, std::size_t i) {
  return static_cast<std::size_t>(inst.weight[i - 1]);
}

bool fits(const KnapsackInstance& inst, std::size_t i) { return inst.weight[i - 1] <= inst.target; }

}  // namespace

DpTables::DpTables(std::size_t items, std::size_t target, bool with_cost)
    : items_(items),
      target_(target),
      ok1_((items + 2) * (target + 1), 0),
      ok2_(ok1_.size(), 0),
      cnt1_(ok1_.size(), 0),
      cnt2_(ok1_.size(), 0) {
  if (with_cost) {
    cmin1_.assign(ok1_.size(), kNoCost);
    cmin2_.assign(ok1_.size(), kNoCost);
  }
}

void validate(const KnapsackInstance& inst, bool need_cost) {
  if (inst.target < 0) throw std::invalid_argument("target sum must be non-negative");
  if (inst.count_cap < 2) throw std::invalid_argument("count cap must be at least 2");
  for (auto w : inst.weight)
    if (w < 0) throw std::invalid_argument("item weights must be non-negative");
  if (need_cost && !inst.cost) throw std::invalid_argument("the cost variant needs item costs");
  if (inst.cost) {
    if (inst.cost->size() != inst.size()) throw std::invalid_argument("one cost per item expected");
    for (auto c : *inst.cost)
      if (c < 0) throw std::invalid_argument("item costs must be non-negative");
  }
  const auto rows = static_cast<long double>(inst.size() + 2);
  const auto cols = static_cast<long double>(inst.target) + 1;
  if (rows * cols > static_cast<long double>(kMaxTableCells)) throw std::length_error("knapsack tables too large");
}

DpTables feasibility_tables(const KnapsackInstance& inst) {
  validate(inst, false);
  const std::size_t n = inst.size();
  const std::size_t S = target_of(inst);
  const std::uint64_t Q = inst.count_cap;
  DpTables t(n, S, false);

  t.ok1_[t.at(0, 0)] = 1;
  t.cnt1_[t.at(0, 0)] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t split = fits(inst, i) ? weight_of(inst, i) : S + 1;
    for (std::size_t j = 0; j < split; ++j) {
      t.ok1_[t.at(i, j)] = t.ok1_[t.at(i - 1, j)];
      t.cnt1_[t.at(i, j)] = t.cnt1_[t.at(i - 1, j)];
    }
    for (std::size_t j = split; j <= S; ++j) {
      const std::size_t k = j - split;
      t.ok1_[t.at(i, j)] = t.ok1_[t.at(i - 1, j)] || t.ok1_[t.at(i - 1, k)];
      t.cnt1_[t.at(i, j)] = add_capped(t.cnt1_[t.at(i - 1, j)], t.cnt1_[t.at(i - 1, k)], Q);
    }
  }

  t.ok2_[t.at(n + 1, 0)] = 1;
  t.cnt2_[t.at(n + 1, 0)] = 1;
  for (std::size_t i = n; i >= 1; --i) {
    const std::size_t split = fits(inst, i) ? weight_of(inst, i) : S + 1;
    for (std::size_t j = 0; j < split; ++j) {
      t.ok2_[t.at(i, j)] = t.ok2_[t.at(i + 1, j)];
      t.cnt2_[t.at(i, j)] = t.cnt2_[t.at(i + 1, j)];
    }
    for (std::size_t j = split; j <= S; ++j) {
      const std::size_t k = j - split;
      t.ok2_[t.at(i, j)] = t.ok2_[t.at(i + 1, j)] || t.ok2_[t.at(i + 1, k)];
      t.cnt2_[t.at(i, j)] = add_capped(t.cnt2_[t.at(i + 1, j)], t.cnt2_[t.at(i + 1, k)], Q);
    }
  }
  return t;
}

DpTables mincost_tables(const KnapsackInstance& inst) {
  validate(inst, true);
  const std::size_t n = inst.size();
  const std::size_t S = target_of(inst);
  const std::uint64_t Q = inst.count_cap;
  const auto& cost = *inst.cost;
  DpTables t(n, S, true);

  // One step of either table: `from` is the neighbouring row (i-1 forward,
  // i+1 backward).
  auto step = [&](std::size_t i, std::size_t from, std::vector<std::int64_t>& cmin,
                  std::vector<std::uint64_t>& cnt) {
    const std::size_t split = fits(inst, i) ? weight_of(inst, i) : S + 1;
    for (std::size_t j = 0; j < split; ++j) {
      cmin[t.at(i, j)] = cmin[t.at(from, j)];
      cnt[t.at(i, j)] = cnt[t.at(from, j)];
    }
    for (std::size_t j = split; j <= S; ++j) {
      const std::size_t k = j - split;
      const std::int64_t with_item = add_cost(cmin[t.at(from, k)], cost[i - 1]);
      const std::int64_t best = std::min(cmin[t.at(from, j)], with_item);
      cmin[t.at(i, j)] = best;
      std::uint64_t c = cmin[t.at(from, j)] == best ? cnt[t.at(from, j)] : 0;
      if (with_item == best) c = add_capped(c, cnt[t.at(from, k)], Q);
      cnt[t.at(i, j)] = c < Q ? c : Q;
    }
  };

  t.cmin1_[t.at(0, 0)] = 0;
  t.cnt1_[t.at(0, 0)] = 1;
  for (std::size_t i = 1; i <= n; ++i) step(i, i - 1, t.cmin1_, t.cnt1_);
  t.cmin2_[t.at(n + 1, 0)] = 0;
  t.cnt2_[t.at(n + 1, 0)] = 1;
  for (std::size_t i = n; i >= 1; --i) step(i, i + 1, t.cmin2_, t.cnt2_);

  for (std::size_t k = 0; k < t.ok1_.size(); ++k) {
    t.ok1_[k] = t.cmin1_[k] != kNoCost;
    t.ok2_[k] = t.cmin2_[k] != kNoCost;
  }
  return t;
}

std::vector<Category> classify_feasibility(const KnapsackInstance& inst) {
  const auto t = feasibility_tables(inst);
  const std::size_t n = inst.size();
  const std::size_t S = target_of(inst);
  const std::uint64_t Q = inst.count_cap;
  std::vector<Category> out(n, Category::none);
  for (std::size_t i = 1; i <= n; ++i) {
    bool d = false;
    if (fits(inst, i)) {
      const std::size_t w = weight_of(inst, i);
      for (std::size_t j = 0; j + w <= S && !d; ++j) d = t.ok1(i - 1, j) && t.ok2(i + 1, S - j - w);
    }
    if (!d) continue;
    std::uint64_t c = 0;
    for (std::size_t j = 0; j <= S; ++j) c = add_capped(c, mul_capped(t.cnt1(i - 1, j), t.cnt2(i + 1, S - j), Q), Q);
    out[i - 1] = c > 0 ? Category::some : Category::every;
  }
  return out;
}

std::vector<Category> classify_mincost(const KnapsackInstance& inst) {
  const auto t = mincost_tables(inst);
  const std::size_t n = inst.size();
  const std::size_t S = target_of(inst);
  const std::uint64_t Q = inst.count_cap;
  std::vector<Category> out(n, Category::none);
  const std::int64_t best = t.cmin1(n, S);
  if (best == kNoCost) return out;
  for (std::size_t i = 1; i <= n; ++i) {
    std::int64_t d = kNoCost;
    if (fits(inst, i)) {
      const std::size_t w = weight_of(inst, i);
      for (std::size_t j = 0; j + w <= S; ++j) {
        d = std::min(d, add_cost(add_cost(t.cmin1(i - 1, j), (*inst.cost)[i - 1]), t.cmin2(i + 1, S - j - w)));
      }
    }
    if (d > best) continue;
    std::uint64_t c = 0;
    for (std::size_t j = 0; j <= S; ++j) {
      if (add_cost(t.cmin1(i - 1, j), t.cmin2(i + 1, S - j)) != best) continue;
      c = add_capped(c, mul_capped(t.cnt1(i - 1, j), t.cnt2(i + 1, S - j), Q), Q);
    }
    out[i - 1] = c > 0 ? Category::some : Category::every;
  }
  return out;
}

namespace {

// Minimum cost per sum over all items except `skip` (0 = none). Cost 0 per
// item turns this into a reachability table.
std::vector<std::int64_t> cost_by_sum(const KnapsackInstance& inst, std::size_t skip) {
  const std::size_t S = target_of(inst);
  std::vector<std::int64_t> best(S + 1, kNoCost);
  best[0] = 0;
  for (std::size_t i = 1; i <= inst.size(); ++i) {
    if (i == skip || !fits(inst, i)) continue;
    const std::size_t w = weight_of(inst, i);
    const std::int64_t c = inst.cost ? (*inst.cost)[i - 1] : 0;
    for (std::size_t j = S + 1; j-- > w;) best[j] = std::min(best[j], add_cost(best[j - w], c));
  }
  return best;
}

}  // namespace

std::vector<Category> classify_by_removal(const KnapsackInstance& inst) {
  validate(inst, false);
  const std::size_t n = inst.size();
  const std::size_t S = target_of(inst);
  std::vector<Category> out(n, Category::none);
  const std::int64_t best = cost_by_sum(inst, 0)[S];
  if (best == kNoCost) return out;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!fits(inst, i)) continue;
    const auto without = cost_by_sum(inst, i);
    const std::int64_t c = inst.cost ? (*inst.cost)[i - 1] : 0;
    const std::int64_t a = add_cost(without[S - weight_of(inst, i)], c);
    if (a != best) continue;
    out[i - 1] = without[S] == best ? Category::some : Category::every;
  }
  return out;
}

std::optional<std::int64_t> optimal_cost(const KnapsackInstance& inst) {
  validate(inst, false);
  const auto best = cost_by_sum(inst, 0)[target_of(inst)];
  if (best == kNoCost) return std::nullopt;
  return best;
}

KnapsackInstance parse_items(std::istream& in, std::int64_t target, bool with_cost) {
  KnapsackInstance inst;
  inst.target = target;
  if (with_cost) inst.cost.emplace();
  auto number = [](const std::string& tok, std::size_t line, const char* what) {
    std::int64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 0) {
      throw ParseError(line, std::string(what) + " must be a non-negative integer, got '" + tok + "'");
    }
    return v;
  };
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream ss(raw);
    std::vector<std::string> tok;
    for (std::string s; ss >> s;) tok.push_back(s);
    if (tok.size() > 2 || (with_cost && tok.size() != 2)) {
      throw ParseError(line, with_cost ? "expected 'weight cost'" : "expected 'weight [cost]'");
    }
    inst.weight.push_back(number(tok[0], line, "weight"));
    if (with_cost) inst.cost->push_back(number(tok[1], line, "cost"));
  }
  return inst;
}

}  // namespace qospath::knapsack
