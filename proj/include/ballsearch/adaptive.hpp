#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ballsearch/graph.hpp"
#include "ballsearch/query.hpp"
#include "ballsearch/separating.hpp"

namespace ballsearch {

struct Step {
  BallQuery query;
  bool answer = false;
};

struct Transcript {
  std::vector<Step> steps;
  Vertex resolved = 0;

  std::size_t length() const { return steps.size(); }
};

/// Answer source for the adaptive game.
class Oracle {
 public:
  virtual ~Oracle() = default;
  /// `ball` is the queried ball; `candidates` the vertices still consistent.
  virtual bool answer(const VertexSet& ball, const VertexSet& candidates) = 0;
  virtual std::string describe() const = 0;
};

/// Answers truthfully for a fixed hidden vertex.
class FixedOracle final : public Oracle {
 public:
  explicit FixedOracle(Vertex hidden) : hidden_(hidden) {}
  bool answer(const VertexSet& ball, const VertexSet&) override { return ball.test(hidden_); }
  std::string describe() const override { return "fixed:" + std::to_string(hidden_); }
  Vertex hidden() const { return hidden_; }

 private:
  Vertex hidden_;
};

/// Keeps the larger consistent candidate set; ties answer "no".
class AdversarialOracle final : public Oracle {
 public:
  bool answer(const VertexSet& ball, const VertexSet& candidates) override {
    const auto in = ball.intersection_count(candidates);
    return in > candidates.count() - in;
  }
  std::string describe() const override { return "adversarial"; }
};

/**
 * One side of the game. The harness calls next_query while more than one
 * candidate remains and reports each answer through observe. Strategies are
 * copyable through clone so that a game tree can be explored branch by branch.
 */
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual BallQuery next_query(const VertexSet& candidates) = 0;
  virtual void observe(const BallQuery&, bool) {}
  virtual std::unique_ptr<Strategy> clone() const = 0;
  virtual bool supports_disconnected() const { return false; }
};

/**
 * Plays one game until the candidate set is a singleton (no confirming query).
 *
 * Throws DomainError on a disconnected graph unless the strategy supports it,
 * and ContractViolation if the strategy leaves the radius constraint, names an
 * invalid centre, or exceeds n * (diam + 1) queries.
 */
Transcript run_search(const Graph& g, Strategy& strategy, Oracle& oracle, const RadiusConstraint& rc);

/// Candidate sets after 0, 1, ..., length() answers.
std::vector<VertexSet> replay(const Graph& g, const Transcript& t);

/// Longest game over every consistent answer sequence (full game tree).
std::size_t worst_case_queries(const Graph& g, const Strategy& strategy, const RadiusConstraint& rc);

/**
 * Distance bisection from the origin followed by coordinate probing with
 * B(e_i, d-1); the last coordinate is inferred. Uses at most
 * n - 1 + ceil(log2(n+1)) queries; queries whose answer is already forced by
 * the candidate set are skipped. Throws std::invalid_argument unless g is a hypercube.
 */
std::unique_ptr<Strategy> hypercube_strategy(const Graph& g);

enum class CoverMode { AtMost, Exact };

/**
 * Asks the cover's radius-r balls until one answers yes, then locates the
 * vertex inside it: AtMost re-runs the hypercube strategy around the found
 * centre with distances 0..r (hypercubes only); Exact asks the most balanced
 * splitting radius-r ball each round.
 *
 * Throws std::invalid_argument on wrong radii or graph kind, DomainError if
 * the cover misses a vertex.
 */
std::unique_ptr<Strategy> covering_then_locate_strategy(const Graph& g, Radius r, QuerySet cover, CoverMode mode);

struct Split {
  BallQuery query;
  std::size_t hits = 0;  // |B(query) ∩ X|
};

/// |X|/(delta+2) <= hits <= (delta+1)|X|/(delta+2), in integer arithmetic.
bool split_is_balanced(std::size_t hits, std::size_t candidates, std::size_t max_degree);

/**
 * Finds a ball whose intersection with X holds between 1/(Δ+2) and
 * (Δ+1)/(Δ+2) of X, Δ the maximum degree of g. Scans radii upward and
 * centres in id order, returning the first balanced pair; the result is
 * checked before returning. Throws DomainError if |X| < Δ+2 or g is disconnected.
 */
Split predelta_split(const Graph& g, const VertexSet& candidates);
Split predelta_split(const Graph& g, const DistanceTable& dist, const VertexSet& candidates);

/// The existence argument made constructive: a neighbour of a vertex minimising
/// the radius needed to reach (Δ+1)/(Δ+2) of X, at one less than that radius.
Split predelta_split_by_construction(const Graph& g, const DistanceTable& dist, const VertexSet& candidates);

/// Memoised split decisions for one graph, shared by halving games on it.
class HalvingPlanner {
 public:
  explicit HalvingPlanner(const Graph& g);

  BallQuery next(const VertexSet& candidates);
  std::size_t max_degree() const { return delta_; }
  /// Splits computed (and certified) so far.
  std::size_t verified_splits() const { return verified_; }

 private:
  const Graph* graph_;
  DistanceTable dist_;
  std::size_t delta_;
  std::unordered_map<VertexSet, BallQuery, BitsetHash> cache_;
  std::size_t verified_ = 0;
};

/// Repeated balanced splits; once |X| <= Δ+2, singletons one by one.
std::unique_ptr<Strategy> halving_strategy(const Graph& g);
std::unique_ptr<Strategy> halving_strategy(std::shared_ptr<HalvingPlanner> planner);

/// log_{(Δ+3)/(Δ+2)} n + Δ + additive.
double halving_query_bound(std::size_t n, std::size_t max_degree, std::size_t additive);

struct ExactAdaptiveResult {
  SearchStatus status = SearchStatus::Solved;
  std::uint32_t value = 0;
  std::optional<BallQuery> optimal_first_query;
  std::uint64_t states_explored = 0;
};

/**
 * Exact adaptive query count by minimax over candidate sets:
 * value(S) = 0 if |S| <= 1, else 1 + min over splitting balls B of
 * max(value(S ∩ B), value(S \ B)). Candidate sets are memoised as bit masks.
 * Infeasible when some reachable set cannot be split under `rc`.
 */
ExactAdaptiveResult exact_adaptive(const Graph& g, const RadiusConstraint& rc,
                                   const SearchOptions& opts = SearchOptions{std::nullopt, 10});

}  // namespace ballsearch
