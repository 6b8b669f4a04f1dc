#include "ballsearch/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "ballsearch/adaptive.hpp"
#include "ballsearch/generators.hpp"
#include "ballsearch/rng.hpp"

namespace ballsearch {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
// writes only its own output slot, so results do not depend on scheduling.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count && !failed;) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

DiameterPrediction predicted_diameter(std::size_t n, double p, double margin) {
  DiameterPrediction out;
  out.threshold = 2.0 * std::log2(static_cast<double>(n));
  if (n < 2 || !(p > 0.0)) return out;
  if (p >= 1.0) {
    out.candidate = 1;
    out.diameter = 1;
    return out;
  }
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_p = std::log(p);
  // ln(p^d n^(d-1))
  auto level = [&](unsigned d) { return d * ln_p + (static_cast<double>(d) - 1.0) * ln_n; };
  const double ln_threshold = std::log(out.threshold);
  for (unsigned d = 2; d <= 256; ++d) {
    if (level(d) < ln_threshold) continue;
    out.candidate = d;
    const double ln_margin = std::log(margin);
    if (level(d) >= ln_threshold + ln_margin && level(d - 1) <= ln_threshold - ln_margin) out.diameter = d;
    return out;
  }
  return out;
}

std::string to_string(BallRegime r) {
  switch (r) {
    case BallRegime::Sparse: return "sparse";
    case BallRegime::Linear: return "linear";
    case BallRegime::Saturating: return "saturating";
    case BallRegime::ComplementSmall: return "complement-small";
    case BallRegime::Boundary: return "boundary";
  }
  return "boundary";
}

RegimeReport classify_ball_regime(std::size_t n, double p, unsigned d, double eps) {
  if (d < 2) throw std::invalid_argument("regime classification needs d >= 2");
  const auto nd = static_cast<double>(n);
  RegimeReport rep;
  rep.f = std::pow(nd * p, static_cast<double>(d) - 1.0) / nd;
  const double pivot = std::log2(nd) / (static_cast<double>(d) - 1.0);
  if (rep.f < 0.1)
    rep.regime = BallRegime::Sparse;
  else if (rep.f <= 10.0)
    rep.regime = BallRegime::Linear;
  else if (rep.f <= (1.0 - eps) * pivot)
    rep.regime = BallRegime::Saturating;
  else if (rep.f >= (1.0 + eps) * pivot)
    rep.regime = BallRegime::ComplementSmall;
  else
    rep.regime = BallRegime::Boundary;
  return rep;
}

BallStats ball_stats(const Graph& g, Radius r, std::size_t sample_size, std::uint64_t seed, std::optional<double> p) {
  const auto n = g.order();
  if (n == 0) throw std::invalid_argument("ball statistics need a non-empty graph");
  if (sample_size == 0) throw std::invalid_argument("sample size must be positive");
  BallStats st;
  st.r = r;
  st.samples = sample_size;
  st.p = p ? *p : (n > 1 ? 2.0 * static_cast<double>(g.edge_count()) / (static_cast<double>(n) * (n - 1)) : 0.0);
  st.predicted_ball = std::pow(static_cast<double>(n) * st.p, static_cast<double>(r));
  st.predicted_symdiff = 2.0 * st.predicted_ball;

  std::map<Vertex, VertexSet> cache;
  auto ball_of = [&](Vertex v) -> const VertexSet& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, ball(g, v, r)).first;
    return it->second;
  };

  Rng rng(seed);
  st.min_ball = std::numeric_limits<std::size_t>::max();
  double total = 0;
  for (std::size_t i = 0; i < sample_size; ++i) {
    const auto size = ball_of(static_cast<Vertex>(rng.below(n))).count();
    st.min_ball = std::min(st.min_ball, size);
    st.max_ball = std::max(st.max_ball, size);
    total += static_cast<double>(size);
  }
  st.mean_ball = total / static_cast<double>(sample_size);

  if (n >= 2) {
    double inter = 0, sym = 0;
    for (std::size_t i = 0; i < sample_size; ++i) {
      const auto x = static_cast<Vertex>(rng.below(n));
      auto y = static_cast<Vertex>(rng.below(n - 1));
      if (y >= x) ++y;
      const auto& bx = ball_of(x);
      const auto& by = ball_of(y);
      const auto common = bx.intersection_count(by);
      const auto diff = (bx ^ by).count();
      if (diff != bx.count() + by.count() - 2 * common) st.symdiff_identity = false;
      inter += static_cast<double>(common);
      sym += static_cast<double>(diff);
    }
    st.mean_intersection = inter / static_cast<double>(sample_size);
    st.mean_symdiff = sym / static_cast<double>(sample_size);
  }
  return st;
}

CenterTrial random_center_trial(const Graph& g, Radius r, std::size_t t, std::uint64_t seed) {
  if (t == 0) throw std::invalid_argument("at least one centre is required");
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  Rng rng(seed);
  CenterTrial trial;
  QuerySet q;
  for (std::size_t i = 0; i < t; ++i) {
    const auto c = static_cast<Vertex>(rng.below(g.order()));
    trial.centers.push_back(c);
    q.push_back({c, r});
  }
  const auto table = signatures(g, q);
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return table.rows[a] < table.rows[b]; });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && table.rows[order[j]] == table.rows[order[i]]) ++j;
    const std::uint64_t k = j - i;
    trial.unseparated_pairs += k * (k - 1) / 2;
    for (std::size_t a = i; a < j && trial.example_pairs.size() < 10; ++a)
      for (std::size_t b = a + 1; b < j && trial.example_pairs.size() < 10; ++b)
        trial.example_pairs.emplace_back(std::min(order[a], order[b]), std::max(order[a], order[b]));
    i = j;
  }
  trial.separating = trial.unseparated_pairs == 0;
  return trial;
}

std::size_t random_center_count(std::size_t n, double p, Radius r) {
  const auto nd = static_cast<double>(n);
  const double value = std::pow(nd, 1.0 - r) * std::pow(p, -static_cast<double>(r)) * std::log(nd);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(value - 1e-9)));
}

void ExperimentConfig::validate() const {
  if (n < 2) throw std::invalid_argument("experiment needs n >= 2");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("experiment needs 0 < p < 1");
  if (r < 1) throw std::invalid_argument("experiment needs r >= 1");
  if (trials < 1) throw std::invalid_argument("experiment needs at least one trial");
  if (centers_override && *centers_override == 0) throw std::invalid_argument("centre count must be positive");
}

ExperimentReport gnp_center_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport rep;
  rep.config = cfg;
  const auto nd = static_cast<double>(cfg.n);
  const double scale = std::pow(nd, 1.0 - cfg.r) * std::pow(cfg.p, -static_cast<double>(cfg.r));
  rep.predicted_upper = scale * std::log(nd);
  if (scale > 1.0) rep.predicted_lower = scale * std::log2(nd) / std::log2(scale);
  rep.centers = cfg.centers_override ? *cfg.centers_override : random_center_count(cfg.n, cfg.p, cfg.r);
  rep.diameter_prediction = predicted_diameter(cfg.n, cfg.p);
  if (rep.diameter_prediction.diameter && *rep.diameter_prediction.diameter >= 2)
    rep.regime = classify_ball_regime(cfg.n, cfg.p, *rep.diameter_prediction.diameter);

  rep.trials.resize(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t i) {
    TrialRecord& tr = rep.trials[i];
    tr.trial = i;
    tr.seed = derive_seed(cfg.seed, i);
    const auto g = gnp(cfg.n, cfg.p, derive_seed(tr.seed, 0));
    tr.diameter = diameter(g);
    tr.centers = rep.centers;

    tr.min_ball = std::numeric_limits<std::size_t>::max();
    double total = 0;
    std::vector<VertexSet> balls;
    balls.reserve(cfg.n);
    for (Vertex v = 0; v < cfg.n; ++v) {
      balls.push_back(ball(g, v, cfg.r));
      const auto s = balls.back().count();
      tr.min_ball = std::min(tr.min_ball, s);
      tr.max_ball = std::max(tr.max_ball, s);
      total += static_cast<double>(s);
    }
    tr.mean_ball = total / nd;

    Rng pairs(derive_seed(tr.seed, 2));
    double sym = 0;
    for (std::size_t k = 0; k < cfg.pair_samples; ++k) {
      const auto x = static_cast<Vertex>(pairs.below(cfg.n));
      auto y = static_cast<Vertex>(pairs.below(cfg.n - 1));
      if (y >= x) ++y;
      sym += static_cast<double>((balls[x] ^ balls[y]).count());
    }
    tr.mean_symdiff = cfg.pair_samples ? sym / static_cast<double>(cfg.pair_samples) : 0.0;

    const auto trial = random_center_trial(g, cfg.r, rep.centers, derive_seed(tr.seed, 1));
    tr.success = trial.separating;
    tr.unseparated_pairs = trial.unseparated_pairs;
    tr.example_pairs = trial.example_pairs;
    tr.katona = katona_lower_bound(cfg.n, tr.max_ball);
    tr.sandwich_violation = tr.success && !tr.katona.trivial_regime && tr.katona.value > tr.centers;
  });

  std::size_t wins = 0;
  for (const auto& tr : rep.trials) {
    wins += tr.success;
    if (tr.sandwich_violation) rep.sandwich_holds = false;
  }
  rep.success_rate = static_cast<double>(wins) / static_cast<double>(cfg.trials);
  return rep;
}

bool HalvingExperimentReport::all_within_loose_bound() const {
  for (const auto& c : cells)
    if (c.violations_loose || c.unresolved) return false;
  return true;
}

HalvingExperimentReport halving_experiment(const HalvingExperimentConfig& cfg) {
  HalvingExperimentReport rep;
  rep.config = cfg;
  for (auto delta : cfg.max_degrees)
    for (auto n : cfg.sizes) {
      HalvingCell cell;
      cell.degree_cap = delta;
      cell.n = n;
      rep.cells.push_back(cell);
    }

  parallel_for(rep.cells.size(), cfg.threads, [&](std::size_t ci) {
    HalvingCell& cell = rep.cells[ci];
    cell.min_slack_loose = cell.min_slack_tight = std::numeric_limits<double>::infinity();
    const auto cell_seed = derive_seed(cfg.seed, ci);
    for (std::size_t gi = 0; gi < cfg.graphs_per_cell; ++gi) {
      const auto g = bounded_degree_connected(cell.n, cell.degree_cap, derive_seed(cell_seed, gi));
      auto planner = std::make_shared<HalvingPlanner>(g);
      const auto delta = g.max_degree();
      const double loose = halving_query_bound(cell.n, delta, 2);
      const double tight = halving_query_bound(cell.n, delta, 1);
      cell.max_graph_degree = std::max(cell.max_graph_degree, delta);
      ++cell.graphs;
      for (Vertex hidden = 0; hidden < g.order(); ++hidden) {
        auto strategy = halving_strategy(planner);
        FixedOracle oracle(hidden);
        const auto t = run_search(g, *strategy, oracle, RadiusConstraint::unbounded());
        const auto q = static_cast<double>(t.length());
        ++cell.games;
        cell.unresolved += t.resolved != hidden;
        cell.max_queries = std::max(cell.max_queries, t.length());
        cell.min_slack_loose = std::min(cell.min_slack_loose, loose - q);
        cell.min_slack_tight = std::min(cell.min_slack_tight, tight - q);
        cell.violations_loose += q > loose;
        cell.violations_tight += q > tight;
      }
      cell.splits_verified += planner->verified_splits();
    }
  });
  return rep;
}

}  // namespace ballsearch
