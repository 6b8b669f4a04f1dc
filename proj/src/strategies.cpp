#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "ballsearch/adaptive.hpp"
#include "ballsearch/errors.hpp"

namespace ballsearch {

namespace {

/**
 * Locates a vertex of Q_n known to lie within max_distance of `origin`:
 * bisect d(origin, u) by asking B(origin, median), then probe coordinates
 * 1..n-1 with B(origin ^ e_i, d-1), which contains u iff u differs from the
 * origin in coordinate i. Queries whose answer the candidate set already
 * determines are applied silently instead of being asked.
 */
class CoordinateLocator {
 public:
  CoordinateLocator(unsigned n, Vertex origin, Radius max_distance)
      : n_(n), origin_(origin), lo_(0), hi_(std::min<Radius>(max_distance, n)) {
    if (lo_ == hi_) enter_probing();
  }

  BallQuery next(const VertexSet& candidates) {
    const auto total = candidates.count();
    while (true) {
      const auto q = current();
      std::size_t hits = 0;
      candidates.for_each([&](std::size_t x) {
        if (static_cast<Radius>(std::popcount(static_cast<Vertex>(x) ^ q.center)) <= q.radius) ++hits;
      });
      if (hits != 0 && hits != total) return q;
      advance(hits == total);
    }
  }

  void observe(bool answer) { advance(answer); }

 private:
  BallQuery current() const {
    if (!probing_) return {origin_, lo_ + (hi_ - lo_) / 2};
    if (distance_ == 0 || coordinate_ >= n_) throw std::logic_error("coordinate locator ran out of queries");
    return {origin_ ^ (Vertex{1} << coordinate_), distance_ - 1};
  }

  void advance(bool answer) {
    if (!probing_) {
      const Radius mid = lo_ + (hi_ - lo_) / 2;
      if (answer)
        hi_ = mid;
      else
        lo_ = mid + 1;
      if (lo_ == hi_) enter_probing();
    } else {
      ++coordinate_;
    }
  }

  void enter_probing() {
    probing_ = true;
    distance_ = lo_;
  }

  unsigned n_;
  Vertex origin_;
  Radius lo_, hi_;
  bool probing_ = false;
  Radius distance_ = 0;
  unsigned coordinate_ = 0;
};

class HypercubeStrategy final : public Strategy {
 public:
  explicit HypercubeStrategy(unsigned n) : locator_(n, 0, n) {}
  std::string name() const override { return "hypercube"; }
  BallQuery next_query(const VertexSet& candidates) override { return locator_.next(candidates); }
  void observe(const BallQuery&, bool answer) override { locator_.observe(answer); }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<HypercubeStrategy>(*this); }

 private:
  CoordinateLocator locator_;
};

class CoveringThenLocate final : public Strategy {
 public:
  CoveringThenLocate(const Graph& g, Radius r, QuerySet cover, CoverMode mode)
      : dimension_(g.dimension()),
        radius_(r),
        cover_(std::move(cover)),
        mode_(mode),
        dist_(std::make_shared<const DistanceTable>(g)) {}

  std::string name() const override { return mode_ == CoverMode::AtMost ? "cover-atmost" : "cover-exact"; }
  bool supports_disconnected() const override { return mode_ == CoverMode::Exact; }

  BallQuery next_query(const VertexSet& candidates) override {
    const auto total = candidates.count();
    while (!found_) {
      if (next_cover_ >= cover_.size()) throw std::logic_error("cover exhausted without containing the candidates");
      const Vertex c = cover_[next_cover_].center;
      const auto in = hits(c, candidates);
      if (in == total) {
        found(c);
      } else if (in == 0) {
        ++next_cover_;
      } else {
        return {c, radius_};
      }
    }
    if (mode_ == CoverMode::AtMost) return locator_->next(candidates);
    return best_exact_split(candidates);
  }

  void observe(const BallQuery& q, bool answer) override {
    if (!found_) {
      if (answer)
        found(q.center);
      else
        ++next_cover_;
      return;
    }
    if (mode_ == CoverMode::AtMost) locator_->observe(answer);
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<CoveringThenLocate>(*this); }

 private:
  std::size_t hits(Vertex center, const VertexSet& candidates) const {
    std::size_t in = 0;
    candidates.for_each([&](std::size_t x) {
      if ((*dist_)(center, static_cast<Vertex>(x)) <= radius_) ++in;
    });
    return in;
  }

  void found(Vertex center) {
    found_ = true;
    if (mode_ == CoverMode::AtMost) locator_.emplace(dimension_, center, radius_);
  }

  BallQuery best_exact_split(const VertexSet& candidates) const {
    const auto total = candidates.count();
    std::size_t best_balance = 0;
    Vertex best_center = 0;
    for (Vertex c = 0; c < dist_->order(); ++c) {
      const auto in = hits(c, candidates);
      const auto balance = std::min(in, total - in);
      if (balance > best_balance) {
        best_balance = balance;
        best_center = c;
      }
    }
    if (best_balance == 0) throw DomainError("no radius-" + std::to_string(radius_) + " ball splits the candidates");
    return {best_center, radius_};
  }

  unsigned dimension_;
  Radius radius_;
  QuerySet cover_;
  CoverMode mode_;
  std::shared_ptr<const DistanceTable> dist_;
  std::size_t next_cover_ = 0;
  bool found_ = false;
  std::optional<CoordinateLocator> locator_;
};

class HalvingStrategy final : public Strategy {
 public:
  explicit HalvingStrategy(std::shared_ptr<HalvingPlanner> planner) : planner_(std::move(planner)) {}
  std::string name() const override { return "halving"; }
  BallQuery next_query(const VertexSet& candidates) override { return planner_->next(candidates); }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<HalvingStrategy>(*this); }

 private:
  std::shared_ptr<HalvingPlanner> planner_;
};

// hits(v, r) = |B(v, r) ∩ X| for every vertex and radius, as cumulative counts.
struct BallCounts {
  std::size_t max_radius = 0;
  std::vector<std::size_t> cumulative;  // [v * (max_radius + 1) + r]

  BallCounts(const DistanceTable& dist, const std::vector<Vertex>& members) {
    max_radius = dist.max_finite();
    const auto width = max_radius + 1;
    cumulative.assign(dist.order() * width, 0);
    for (Vertex v = 0; v < dist.order(); ++v) {
      auto* row = &cumulative[v * width];
      for (Vertex x : members) ++row[dist(v, x)];
      for (std::size_t r = 1; r < width; ++r) row[r] += row[r - 1];
    }
  }
  std::size_t operator()(Vertex v, std::size_t r) const {
    return cumulative[v * (max_radius + 1) + std::min(r, max_radius)];
  }
};

void check_split_input(const Graph& g, const DistanceTable& dist, const VertexSet& candidates) {
  if (!dist.connected()) throw DomainError("balanced split requires a connected graph");
  if (candidates.size() != g.order()) throw std::invalid_argument("candidate set width differs from graph order");
  if (candidates.count() < g.max_degree() + 2)
    throw DomainError("balanced split needs at least max_degree + 2 candidates");
}

}  // namespace

std::unique_ptr<Strategy> hypercube_strategy(const Graph& g) {
  if (!g.is_hypercube()) throw std::invalid_argument("hypercube strategy requires a hypercube graph");
  return std::make_unique<HypercubeStrategy>(g.dimension());
}

std::unique_ptr<Strategy> covering_then_locate_strategy(const Graph& g, Radius r, QuerySet cover, CoverMode mode) {
  if (mode == CoverMode::AtMost && !g.is_hypercube())
    throw std::invalid_argument("at-most covering strategy requires a hypercube graph");
  auto covered = VertexSet(g.order());
  for (const auto& q : cover) {
    g.check_vertex(q.center);
    if (q.radius != r) throw std::invalid_argument("every covering ball must have radius r");
    covered |= ball(g, q.center, r);
  }
  if (covered.count() != g.order()) throw DomainError("cover does not cover every vertex");
  return std::make_unique<CoveringThenLocate>(g, r, std::move(cover), mode);
}

bool split_is_balanced(std::size_t hits, std::size_t candidates, std::size_t max_degree) {
  const auto scaled = hits * (max_degree + 2);
  return scaled >= candidates && scaled <= (max_degree + 1) * candidates;
}

Split predelta_split(const Graph& g, const VertexSet& candidates) {
  DistanceTable dist(g);
  return predelta_split(g, dist, candidates);
}

Split predelta_split(const Graph& g, const DistanceTable& dist, const VertexSet& candidates) {
  check_split_input(g, dist, candidates);
  const auto delta = g.max_degree();
  const auto total = candidates.count();
  const auto members = candidates.members<Vertex>();
  const BallCounts counts(dist, members);

  for (std::size_t r = 0; r <= counts.max_radius; ++r)
    for (Vertex v = 0; v < g.order(); ++v)
      if (split_is_balanced(counts(v, r), total, delta)) return {{v, static_cast<Radius>(r)}, counts(v, r)};

  auto fallback = predelta_split_by_construction(g, dist, candidates);
  if (!split_is_balanced(fallback.hits, total, delta)) throw std::logic_error("balanced split postcondition failed");
  return fallback;
}

Split predelta_split_by_construction(const Graph& g, const DistanceTable& dist, const VertexSet& candidates) {
  check_split_input(g, dist, candidates);
  const auto delta = g.max_degree();
  const auto total = candidates.count();
  const BallCounts counts(dist, candidates.members<Vertex>());

  // f(w) = least r with |B(w, r) ∩ X| >= (Δ+1)/(Δ+2) |X|; w minimises f.
  std::size_t best_f = counts.max_radius + 1;
  Vertex w = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    for (std::size_t r = 0; r <= counts.max_radius && r < best_f; ++r)
      if (counts(v, r) * (delta + 2) >= (delta + 1) * total) {
        best_f = r;
        w = v;
        break;
      }
  if (best_f == 0 || best_f > counts.max_radius) throw std::logic_error("degenerate split radius");

  for (Vertex u : g.neighbors(w)) {
    const auto hits = counts(u, best_f - 1);
    if (split_is_balanced(hits, total, delta)) return {{u, static_cast<Radius>(best_f - 1)}, hits};
  }
  throw std::logic_error("no neighbour of the minimiser yields a balanced split");
}

HalvingPlanner::HalvingPlanner(const Graph& g) : graph_(&g), dist_(g), delta_(g.max_degree()) {
  if (!dist_.connected()) throw DomainError("halving strategy requires a connected graph");
}

BallQuery HalvingPlanner::next(const VertexSet& candidates) {
  if (candidates.count() <= delta_ + 2) return {static_cast<Vertex>(candidates.first()), 0};
  if (auto it = cache_.find(candidates); it != cache_.end()) return it->second;
  const auto split = predelta_split(*graph_, dist_, candidates);
  if (!split_is_balanced(split.hits, candidates.count(), delta_))
    throw std::logic_error("balanced split postcondition failed");
  ++verified_;
  cache_.emplace(candidates, split.query);
  return split.query;
}

std::unique_ptr<Strategy> halving_strategy(const Graph& g) {
  return std::make_unique<HalvingStrategy>(std::make_shared<HalvingPlanner>(g));
}

std::unique_ptr<Strategy> halving_strategy(std::shared_ptr<HalvingPlanner> planner) {
  return std::make_unique<HalvingStrategy>(std::move(planner));
}

double halving_query_bound(std::size_t n, std::size_t max_degree, std::size_t additive) {
  const auto d = static_cast<double>(max_degree);
  return std::log(static_cast<double>(n)) / std::log((d + 3) / (d + 2)) + d + static_cast<double>(additive);
}

}  // namespace ballsearch
