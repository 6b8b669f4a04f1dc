#include "ballsearch/separating.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ballsearch/errors.hpp"

namespace ballsearch {

SignatureTable signatures(const Graph& g, const QuerySet& q) {
  SignatureTable t;
  t.width = q.size();
  t.rows.assign(g.order(), Bitset(q.size()));
  for (std::size_t j = 0; j < q.size(); ++j)
    ball(g, q[j].center, q[j].radius).for_each([&](std::size_t v) { t.rows[v].set(j); });
  return t;
}

bool is_separating(const SignatureTable& table) {
  auto rows = table.rows;
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

bool is_separating(const Graph& g, const QuerySet& q) { return is_separating(signatures(g, q)); }

bool is_identifying(const Graph& g, const QuerySet& q, Radius r) {
  for (const auto& b : q)
    if (b.radius != r) throw std::invalid_argument("identifying check requires every query radius to equal r");
  if (q.empty()) return false;
  auto table = signatures(g, q);
  for (const auto& row : table.rows)
    if (row.none()) return false;
  return is_separating(table);
}

QueryLint lint_queries(const Graph& g, const QuerySet& q) {
  QueryLint lint;
  std::vector<VertexSet> balls;
  balls.reserve(q.size());
  for (const auto& b : q) balls.push_back(ball(g, b.center, b.radius));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (q[i] == q[j])
        lint.duplicate_queries.emplace_back(i, j);
      else if (balls[i] == balls[j])
        lint.equal_balls.emplace_back(i, j);
    }
  return lint;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Solved: return "solved";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::BudgetExceeded: return "exceeds_budget";
  }
  return "unknown";
}

std::uint64_t SearchOptions::effective_budget(std::size_t n) const {
  if (budget) return *budget;
  if (n > exhaustive_limit)
    throw std::invalid_argument("graph has " + std::to_string(n) + " vertices, above the exhaustive limit of " +
                                std::to_string(exhaustive_limit) + "; pass an explicit budget");
  return kDefaultNodeBudget;
}

std::uint32_t ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

namespace {

using Mask = std::uint64_t;

struct BudgetExhausted {};

Mask to_mask(const VertexSet& s) { return s.words().empty() ? 0 : s.words()[0]; }

void check_small(const Graph& g) {
  if (g.order() > 64) throw std::invalid_argument("exhaustive searches support at most 64 vertices");
}

// Depth-first search for exactly `target` balls that refine the partition
// into singletons. Classes are vertex masks; balls are tried in index order.
class SeparatingSearch {
 public:
  SeparatingSearch(std::vector<Mask> balls, std::size_t n, std::uint64_t budget)
      : balls_(std::move(balls)), n_(n), budget_(budget) {}

  bool run(std::size_t target, std::vector<std::size_t>& chosen) {
    chosen.clear();
    return dfs(0, target, {n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1}, chosen);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(std::size_t start, std::size_t left, const std::vector<Mask>& classes, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (classes.size() == n_) return true;
    if (left == 0) return false;
    // k more balls split a class into at most 2^k parts.
    if (left < 7) {
      const auto cap = std::size_t{1} << left;
      for (Mask c : classes)
        if (static_cast<std::size_t>(std::popcount(c)) > cap) return false;
    }
    // Every unresolved class needs a splitter at some index >= start; the
    // smallest "last splitter" index bounds how far this level may go.
    std::size_t horizon = balls_.size();
    for (Mask c : classes) {
      if (std::popcount(c) < 2) continue;
      std::size_t last = balls_.size();
      for (std::size_t i = balls_.size(); i-- > start;) {
        const Mask in = c & balls_[i];
        if (in != 0 && in != c) {
          last = i;
          break;
        }
      }
      if (last == balls_.size()) return false;
      horizon = std::min(horizon, last);
    }
    std::vector<Mask> next;
    for (std::size_t i = start; i <= horizon && i + left <= balls_.size(); ++i) {
      next.clear();
      bool refined = false;
      for (Mask c : classes) {
        const Mask in = c & balls_[i];
        const Mask out = c & ~balls_[i];
        if (in) next.push_back(in);
        if (out) next.push_back(out);
        refined |= in != 0 && out != 0;
      }
      if (!refined) continue;
      chosen.push_back(i);
      if (dfs(i + 1, left - 1, next, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::vector<Mask> balls_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

bool masks_separate(const std::vector<Mask>& balls, std::size_t n) {
  // Signatures can be wider than 64 bits; compare vertex pairs directly.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      bool split = false;
      for (Mask b : balls)
        if (((b >> u) & 1) != ((b >> v) & 1)) {
          split = true;
          break;
        }
      if (!split) return false;
    }
  return true;
}

}  // namespace

NonAdaptiveResult min_nonadaptive(const Graph& g, const RadiusConstraint& rc, const SearchOptions& opts) {
  check_small(g);
  const std::size_t n = g.order();
  const auto budget = opts.effective_budget(n);
  NonAdaptiveResult result;
  if (n <= 1) return result;

  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> masks;
  QuerySet reps;
  for (auto& b : distinct_balls(g, rc)) {
    const Mask m = to_mask(b.members);
    if (m == 0 || m == full) continue;
    masks.push_back(m);
    reps.push_back(b.query);
  }
  if (!masks_separate(masks, n)) {
    result.status = SearchStatus::Infeasible;
    return result;
  }

  SeparatingSearch search(masks, n, budget);
  std::vector<std::size_t> chosen;
  try {
    for (std::size_t k = ceil_log2(n); k <= masks.size(); ++k) {
      if (search.run(k, chosen)) {
        result.size = k;
        for (auto i : chosen) result.witness.push_back(reps[i]);
        result.nodes_explored = search.nodes();
        return result;
      }
    }
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::BudgetExceeded;
    result.nodes_explored = search.nodes();
    return result;
  }
  throw std::logic_error("separating search exhausted although all balls separate");
}

MetricDimensionResult metric_dimension(const Graph& g, const SearchOptions& opts) {
  check_small(g);
  const std::size_t n = g.order();
  const auto budget = opts.effective_budget(n);
  if (!is_connected(g)) throw DomainError("metric dimension requires a connected graph");
  MetricDimensionResult result;
  if (n <= 1) return result;

  DistanceTable dist(g);
  std::vector<Vertex> pick;
  std::vector<std::vector<std::uint32_t>> rows(n);

  auto resolves = [&]() {
    for (Vertex v = 0; v < n; ++v) {
      rows[v].clear();
      for (Vertex z : pick) rows[v].push_back(dist(v, z));
    }
    auto sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  };

  for (std::size_t k = 1; k < n; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      if (++result.nodes_explored > budget) {
        result.status = SearchStatus::BudgetExceeded;
        return result;
      }
      if (resolves()) {
        result.size = k;
        result.witness = pick;
        return result;
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // n-1 vertices always resolve a connected graph; unreachable for n >= 2.
  throw std::logic_error("no resolving set found");
}

KatonaBound katona_lower_bound(std::uint64_t set_size, std::uint64_t max_member_size) {
  const auto M = static_cast<double>(set_size);
  const auto m = static_cast<double>(max_member_size);
  if (max_member_size == 0 || 2 * max_member_size >= set_size) return {ceil_log2(set_size), true};
  const double value = (M / m) * std::log2(M) / std::log2(std::numbers::e * M / m);
  // Tolerance keeps exact-integer values from rounding up on floating-point noise.
  return {static_cast<std::uint64_t>(std::ceil(value - 1e-9)), false};
}

SandwichReport sandwich_check(const Graph& g, const SearchOptions& opts) {
  if (!is_connected(g)) throw DomainError("sandwich check requires a connected graph");
  SandwichReport rep;
  auto beta = metric_dimension(g, opts);
  if (beta.status != SearchStatus::Solved) throw std::runtime_error("metric dimension search exceeded its budget");
  auto m = min_nonadaptive(g, RadiusConstraint::unbounded(), opts);
  if (m.status != SearchStatus::Solved) throw std::runtime_error("non-adaptive search exceeded its budget");
  rep.metric_dimension = beta.size;
  rep.resolving_set = beta.witness;
  rep.nonadaptive_minimum = m.size;
  rep.nonadaptive_witness = m.witness;
  rep.diameter = diameter(g).value_or(0);
  rep.lower_holds = rep.metric_dimension <= rep.nonadaptive_minimum;
  rep.upper_holds = rep.nonadaptive_minimum <= static_cast<std::size_t>(rep.diameter) * rep.metric_dimension;
  return rep;
}

}  // namespace ballsearch
