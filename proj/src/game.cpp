#include <algorithm>
#include <functional>

#include "ballsearch/adaptive.hpp"
#include "ballsearch/errors.hpp"

namespace ballsearch {

namespace {

// n (D + 1), with D the largest finite distance. D costs n BFS runs, so it is
// only computed once a game actually gets that long.
class QueryGuard {
 public:
  explicit QueryGuard(const Graph& g) : g_(&g) {}
  bool exceeded(std::size_t steps) {
    if (steps < g_->order()) return false;
    if (limit_ == 0) limit_ = g_->order() * (static_cast<std::size_t>(max_finite_distance(*g_)) + 1);
    return steps >= limit_;
  }

 private:
  const Graph* g_;
  std::size_t limit_ = 0;  // 0 until computed
};

VertexSet checked_ball(const Graph& g, const BallQuery& q, const RadiusConstraint& rc) {
  if (q.center >= g.order()) throw ContractViolation("query centre " + std::to_string(q.center) + " is not a vertex");
  if (!rc.allows(q.radius))
    throw ContractViolation("query radius " + std::to_string(q.radius) + " violates constraint " + rc.to_string());
  return ball(g, q.center, q.radius);
}

}  // namespace

Transcript run_search(const Graph& g, Strategy& strategy, Oracle& oracle, const RadiusConstraint& rc) {
  if (g.order() == 0) throw DomainError("empty graph");
  if (!strategy.supports_disconnected() && !is_connected(g))
    throw DomainError("strategy '" + strategy.name() + "' requires a connected graph");

  QueryGuard guard(g);
  Transcript t;
  auto candidates = VertexSet::full(g.order());
  while (candidates.count() > 1) {
    if (guard.exceeded(t.steps.size())) throw ContractViolation("strategy '" + strategy.name() + "' exceeded the query guard");
    const auto q = strategy.next_query(candidates);
    const auto b = checked_ball(g, q, rc);
    const bool yes = oracle.answer(b, candidates);
    if (yes)
      candidates &= b;
    else
      candidates -= b;
    if (candidates.none()) throw ContractViolation("oracle answer is inconsistent with every vertex");
    strategy.observe(q, yes);
    t.steps.push_back({q, yes});
  }
  t.resolved = static_cast<Vertex>(candidates.first());
  return t;
}

std::vector<VertexSet> replay(const Graph& g, const Transcript& t) {
  std::vector<VertexSet> seq{VertexSet::full(g.order())};
  for (const auto& s : t.steps) {
    auto next = seq.back();
    const auto b = ball(g, s.query.center, s.query.radius);
    if (s.answer)
      next &= b;
    else
      next -= b;
    seq.push_back(std::move(next));
  }
  return seq;
}

std::size_t worst_case_queries(const Graph& g, const Strategy& strategy, const RadiusConstraint& rc) {
  if (g.order() == 0) throw DomainError("empty graph");
  if (!strategy.supports_disconnected() && !is_connected(g))
    throw DomainError("strategy '" + strategy.name() + "' requires a connected graph");
  QueryGuard guard(g);

  std::function<std::size_t(Strategy&, const VertexSet&, std::size_t)> explore =
      [&](Strategy& s, const VertexSet& candidates, std::size_t depth) -> std::size_t {
    if (candidates.count() <= 1) return depth;
    if (guard.exceeded(depth)) throw ContractViolation("strategy '" + s.name() + "' exceeded the query guard");
    const auto q = s.next_query(candidates);
    const auto b = checked_ball(g, q, rc);
    std::size_t worst = depth;
    const VertexSet sides[2] = {candidates - b, candidates & b};
    for (int yes = 0; yes < 2; ++yes) {
      if (sides[yes].none()) continue;
      auto branch = s.clone();
      branch->observe(q, yes == 1);
      worst = std::max(worst, explore(*branch, sides[yes], depth + 1));
    }
    return worst;
  };

  auto root = strategy.clone();
  return explore(*root, VertexSet::full(g.order()), 0);
}

}  // namespace ballsearch
