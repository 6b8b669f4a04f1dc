#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ballsearch/graph.hpp"
#include "ballsearch/separating.hpp"

namespace ballsearch {

struct DiameterPrediction {
  std::optional<unsigned> diameter;  // nullopt: too close to a threshold to call
  unsigned candidate = 0;            // least d with p^d n^(d-1) >= 2 log2 n
  double threshold = 0.0;            // 2 log2 n
};

/**
 * Diameter of G(n, p) from the threshold p^d n^(d-1) vs 2 log2 n. The least d
 * that clears the threshold is returned only if it clears it by `margin` and
 * p^(d-1) n^(d-2) falls short of it by the same factor.
 */
DiameterPrediction predicted_diameter(std::size_t n, double p, double margin = 2.0);

/// Which of the four ball-growth regimes (np)^(d-1) = n f(n) falls in.
enum class BallRegime { Sparse, Linear, Saturating, ComplementSmall, Boundary };
std::string to_string(BallRegime r);

struct RegimeReport {
  BallRegime regime = BallRegime::Boundary;
  double f = 0.0;
};

/**
 * Regime classifier with fixed desk-scale margins: Sparse when f < 0.1,
 * Linear when f <= 10, then Saturating / ComplementSmall when f is below /
 * above log2(n)/(d-1) by a factor (1 -/+ eps); Boundary otherwise.
 */
RegimeReport classify_ball_regime(std::size_t n, double p, unsigned d, double eps = 0.25);

struct BallStats {
  Radius r = 0;
  std::size_t samples = 0;
  std::size_t min_ball = 0;
  std::size_t max_ball = 0;
  double mean_ball = 0.0;
  double mean_intersection = 0.0;
  double mean_symdiff = 0.0;
  double p = 0.0;                  // edge probability used for predictions
  double predicted_ball = 0.0;     // (np)^r
  double predicted_symdiff = 0.0;  // 2 (np)^r
  /// |B(x)△B(y)| == |B(x)| + |B(y)| - 2|B(x)∩B(y)| on every sampled pair.
  bool symdiff_identity = true;
};

/**
 * Samples `sample_size` vertices and `sample_size` distinct-vertex pairs
 * uniformly with replacement. When p is not given the edge density of g is
 * used for the predictions.
 */
BallStats ball_stats(const Graph& g, Radius r, std::size_t sample_size, std::uint64_t seed,
                     std::optional<double> p = std::nullopt);

struct CenterTrial {
  bool separating = false;
  std::uint64_t unseparated_pairs = 0;
  std::vector<Edge> example_pairs;  // at most 10
  std::vector<Vertex> centers;
};

/// t centres drawn uniformly with replacement; radius-r balls checked for separation.
CenterTrial random_center_trial(const Graph& g, Radius r, std::size_t t, std::uint64_t seed);

/// ceil(n^(1-r) p^(-r) ln n).
std::size_t random_center_count(std::size_t n, double p, Radius r);

struct ExperimentConfig {
  std::size_t n = 0;
  double p = 0.0;
  Radius r = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> centers_override;
  std::size_t pair_samples = 200;
  unsigned threads = 1;

  /// Throws std::invalid_argument unless 0 < p < 1, r >= 1, trials >= 1, n >= 2.
  void validate() const;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::optional<Radius> diameter;
  std::size_t centers = 0;
  bool success = false;
  std::uint64_t unseparated_pairs = 0;
  std::vector<Edge> example_pairs;
  std::size_t min_ball = 0;
  std::size_t max_ball = 0;
  double mean_ball = 0.0;
  double mean_symdiff = 0.0;
  KatonaBound katona;
  /// Successful trial with katona.value > centers while the bound applies.
  bool sandwich_violation = false;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t centers = 0;
  double predicted_upper = 0.0;                 // n^(1-r) p^(-r) ln n
  std::optional<double> predicted_lower;        // nullopt when n^(1-r) p^(-r) <= 1
  DiameterPrediction diameter_prediction;
  std::optional<RegimeReport> regime;           // when a diameter is predicted
  std::vector<TrialRecord> trials;
  double success_rate = 0.0;
  bool sandwich_holds = true;
};

/**
 * Per trial i: graph seed and centre seed are derived from (seed, i), so each
 * trial is reproducible on its own and the report does not depend on the
 * thread count.
 */
ExperimentReport gnp_center_experiment(const ExperimentConfig& cfg);

struct HalvingExperimentConfig {
  std::vector<std::size_t> max_degrees{2, 3, 4, 5};
  std::vector<std::size_t> sizes{50, 100, 200};
  std::size_t graphs_per_cell = 50;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct HalvingCell {
  std::size_t degree_cap = 0;
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t games = 0;
  std::size_t unresolved = 0;      // games whose result was not the hidden vertex
  std::size_t max_queries = 0;
  std::size_t max_graph_degree = 0;
  double min_slack_loose = 0.0;    // min over games of (bound with +Δ+2) - queries
  double min_slack_tight = 0.0;    // min over games of (bound with +Δ+1) - queries
  std::size_t violations_loose = 0;
  std::size_t violations_tight = 0;
  std::size_t splits_verified = 0;
};

struct HalvingExperimentReport {
  HalvingExperimentConfig config;
  std::vector<HalvingCell> cells;
  bool all_within_loose_bound() const;
};

/// Halving games for every hidden vertex on seeded bounded-degree graphs.
/// Bounds use each graph's actual maximum degree.
HalvingExperimentReport halving_experiment(const HalvingExperimentConfig& cfg);

}  // namespace ballsearch
