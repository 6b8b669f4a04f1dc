#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ballsearch/adaptive.hpp"

namespace ballsearch {

namespace {

using Mask = std::uint64_t;
constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

struct BudgetExhausted {};

class Minimax {
 public:
  Minimax(std::vector<Mask> balls, std::uint64_t budget) : balls_(std::move(balls)), budget_(budget) {}

  std::uint32_t solve(Mask s, std::size_t* best_ball = nullptr) {
    const auto size = static_cast<std::uint64_t>(std::popcount(s));
    if (size <= 1) return 0;
    if (!best_ball)
      if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    if (++states_ > budget_) throw BudgetExhausted{};

    struct Option {
      Mask in;
      std::size_t ball;
      std::uint64_t balance;
    };
    std::vector<Option> options;
    std::unordered_set<Mask> seen;
    for (std::size_t i = 0; i < balls_.size(); ++i) {
      const Mask in = s & balls_[i];
      if (in == 0 || in == s) continue;
      if (!seen.insert(std::min(in, s ^ in)).second) continue;
      const auto k = static_cast<std::uint64_t>(std::popcount(in));
      options.push_back({in, i, std::min(k, size - k)});
    }
    // Most balanced first so the log2 floor is reached early; ties keep ball order.
    std::stable_sort(options.begin(), options.end(),
                     [](const Option& a, const Option& b) { return a.balance > b.balance; });

    const auto floor = ceil_log2(size);
    std::uint32_t best = kInfinite;
    for (const auto& o : options) {
      const Mask out = s ^ o.in;
      const auto bound = 1 + std::max(ceil_log2(std::popcount(o.in)), ceil_log2(std::popcount(out)));
      if (bound >= best) continue;
      const auto a = solve(o.in);
      if (a == kInfinite || a + 1 >= best) continue;
      const auto b = solve(out);
      if (b == kInfinite) continue;
      const auto value = 1 + std::max(a, b);
      if (value < best) {
        best = value;
        if (best_ball) *best_ball = o.ball;
        if (best == floor) break;
      }
    }
    memo_[s] = best;
    return best;
  }

  std::uint64_t states() const { return states_; }

 private:
  std::vector<Mask> balls_;
  std::uint64_t budget_;
  std::uint64_t states_ = 0;
  std::unordered_map<Mask, std::uint32_t> memo_;
};

}  // namespace

ExactAdaptiveResult exact_adaptive(const Graph& g, const RadiusConstraint& rc, const SearchOptions& opts) {
  if (g.order() > 64) throw std::invalid_argument("exact adaptive search supports at most 64 vertices");
  const auto n = g.order();
  const auto budget = opts.effective_budget(n);
  ExactAdaptiveResult result;
  if (n <= 1) return result;

  std::vector<Mask> masks;
  QuerySet reps;
  for (auto& b : distinct_balls(g, rc)) {
    masks.push_back(b.members.words()[0]);
    reps.push_back(b.query);
  }
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  Minimax search(std::move(masks), budget);
  std::size_t first = 0;
  try {
    const auto value = search.solve(full, &first);
    result.states_explored = search.states();
    if (value == kInfinite) {
      result.status = SearchStatus::Infeasible;
      return result;
    }
    result.value = value;
    result.optimal_first_query = reps[first];
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::BudgetExceeded;
    result.states_explored = search.states();
  }
  return result;
}

}  // namespace ballsearch
