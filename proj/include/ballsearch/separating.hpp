#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ballsearch/graph.hpp"
#include "ballsearch/query.hpp"

namespace ballsearch {

/// Row v holds vertex v's answers: bit j set iff v lies in query j's ball.
struct SignatureTable {
  std::size_t width = 0;
  std::vector<Bitset> rows;
};

SignatureTable signatures(const Graph& g, const QuerySet& q);

/// True iff all signature rows are pairwise distinct.
bool is_separating(const SignatureTable& table);
bool is_separating(const Graph& g, const QuerySet& q);

/**
 * (r, <=1)-identifying check: separating and no vertex has an empty
 * signature. Throws std::invalid_argument if some query radius differs from r.
 */
bool is_identifying(const Graph& g, const QuerySet& q, Radius r);

struct QueryLint {
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_queries;  // same (center, radius)
  std::vector<std::pair<std::size_t, std::size_t>> equal_balls;        // different queries, same vertex set
  bool clean() const { return duplicate_queries.empty() && equal_balls.empty(); }
};

QueryLint lint_queries(const Graph& g, const QuerySet& q);

enum class SearchStatus { Solved, Infeasible, BudgetExceeded };

std::string to_string(SearchStatus s);

/**
 * Limits for the exhaustive searches. Without an explicit budget a search
 * refuses graphs above `exhaustive_limit` vertices; with one it runs until
 * the node count passes the budget and reports BudgetExceeded.
 */
struct SearchOptions {
  std::optional<std::uint64_t> budget;
  std::size_t exhaustive_limit = 12;

  std::uint64_t effective_budget(std::size_t n) const;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

struct NonAdaptiveResult {
  SearchStatus status = SearchStatus::Solved;
  std::size_t size = 0;
  QuerySet witness;
  std::uint64_t nodes_explored = 0;
};

/**
 * Minimum number of non-adaptive ball queries under `rc` that separate all
 * vertices, with a witness. Candidate balls are deduplicated as vertex sets;
 * sizes are tried in increasing order and, within a size, subsets in
 * lexicographic (radius, center) order, so the witness is deterministic.
 * Infeasible only occurs under exact:r when even all balls together fail.
 */
NonAdaptiveResult min_nonadaptive(const Graph& g, const RadiusConstraint& rc, const SearchOptions& opts = {});

struct MetricDimensionResult {
  SearchStatus status = SearchStatus::Solved;
  std::size_t size = 0;
  std::vector<Vertex> witness;
  std::uint64_t nodes_explored = 0;
};

/// Exact metric dimension by subset enumeration. Throws DomainError if g is disconnected.
MetricDimensionResult metric_dimension(const Graph& g, const SearchOptions& opts = {});

struct KatonaBound {
  std::uint64_t value = 0;
  /// m >= M/2 (or m == 0): the bound is the pigeonhole ceil(log2 M).
  bool trivial_regime = false;
};

/// ceil((M/m) * log M / log(eM/m)), base-2 logs, valid for 1 <= m < M/2.
KatonaBound katona_lower_bound(std::uint64_t set_size, std::uint64_t max_member_size);

/// ceil(log2 n) for n >= 1.
std::uint32_t ceil_log2(std::uint64_t n);

struct SandwichReport {
  std::size_t metric_dimension = 0;
  std::vector<Vertex> resolving_set;
  std::size_t nonadaptive_minimum = 0;  // M(G)
  QuerySet nonadaptive_witness;
  Radius diameter = 0;
  bool lower_holds = false;  // beta <= M
  bool upper_holds = false;  // M <= diam * beta
  bool holds() const { return lower_holds && upper_holds; }
};

/// Throws DomainError if g is disconnected, std::runtime_error on budget exhaustion.
SandwichReport sandwich_check(const Graph& g, const SearchOptions& opts = {});

}  // namespace ballsearch
