#include <doctest.h>

#include <random>

#include "ballsearch/errors.hpp"
#include "ballsearch/generators.hpp"
#include "ballsearch/separating.hpp"
#include "oracles.hpp"

using namespace ballsearch;

namespace {

bool pairwise_separating(const Graph& g, const QuerySet& q) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      bool split = false;
      for (const auto& b : q) split = split || (distance(g, b.center, u) <= b.radius) != (distance(g, b.center, v) <= b.radius);
      if (!split) return false;
    }
  return true;
}

std::function<bool(std::uint32_t)> allows(const RadiusConstraint& rc) {
  return [rc](std::uint32_t r) { return rc.allows(r); };
}

std::vector<Graph> small_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 7; ++n) out.push_back(path_graph(n));
  for (std::size_t n = 3; n <= 7; ++n) out.push_back(cycle_graph(n));
  for (std::size_t n = 2; n <= 7; ++n) out.push_back(star_graph(n));
  for (std::size_t n = 1; n <= 5; ++n) out.push_back(complete_graph(n));
  out.push_back(Graph::hypercube(2));
  out.push_back(Graph::hypercube(3));
  for (std::uint32_t s = 0; s < 12; ++s) out.push_back(oracle::random_connected(5 + s % 3, 0.25, s));
  return out;
}

}  // namespace

TEST_CASE("signatures of singleton balls on P_3") {
  const auto t = signatures(path_graph(3), {{0, 0}, {1, 0}});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.width == 2);
  CHECK(t.rows[0].test(0));
  CHECK_FALSE(t.rows[0].test(1));
  CHECK(t.rows[1].test(1));
  CHECK_FALSE(t.rows[1].test(0));
  CHECK(t.rows[2].none());

  const auto empty = signatures(path_graph(4), {});
  for (const auto& row : empty.rows) CHECK(row == empty.rows[0]);
}

TEST_CASE("separating and identifying examples") {
  const auto p3 = path_graph(3);
  CHECK(is_separating(p3, {{0, 0}, {1, 0}}));
  CHECK_FALSE(is_separating(p3, {{0, 1}}));
  CHECK(is_identifying(complete_graph(2), {{0, 0}, {1, 0}}, 0));
  CHECK_FALSE(is_identifying(p3, {}, 1));
  CHECK_FALSE(is_identifying(p3, {{0, 0}, {1, 0}}, 0));  // vertex 2 has an empty row
  CHECK_THROWS_AS(is_identifying(p3, {{0, 0}, {1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("sorted-row separation agrees with pairwise comparison") {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    const auto g = oracle::random_connected(4 + round % 6, 0.2, static_cast<std::uint32_t>(round));
    std::uniform_int_distribution<Vertex> centre(0, static_cast<Vertex>(g.order() - 1));
    std::uniform_int_distribution<Radius> radius(0, 3);
    QuerySet q;
    for (int k = 0; k < 1 + round % 5; ++k) q.push_back({centre(rng), radius(rng)});
    CHECK(is_separating(g, q) == pairwise_separating(g, q));
  }
}

TEST_CASE("query linter") {
  const auto g = path_graph(4);
  const auto lint = lint_queries(g, {{0, 3}, {1, 2}, {0, 3}, {2, 0}});
  CHECK(lint.duplicate_queries == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});
  CHECK(lint.equal_balls.size() == 2);  // B(0,3) = B(1,2) = V, twice
  CHECK(lint_queries(g, {{0, 0}, {1, 0}}).clean());
}

TEST_CASE("min_nonadaptive examples") {
  const auto p3 = min_nonadaptive(path_graph(3), RadiusConstraint::unbounded());
  CHECK(p3.status == SearchStatus::Solved);
  CHECK(p3.size == 2);
  CHECK(is_separating(path_graph(3), p3.witness));

  const auto k2 = min_nonadaptive(complete_graph(2), RadiusConstraint::exactly(1));
  CHECK(k2.status == SearchStatus::Infeasible);

  CHECK(min_nonadaptive(complete_graph(1), RadiusConstraint::unbounded()).size == 0);
  CHECK(min_nonadaptive(complete_graph(2), RadiusConstraint::unbounded()).size == 1);
}

TEST_CASE("star values match brute force") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto g = star_graph(n);
    const auto res = min_nonadaptive(g, RadiusConstraint::unbounded());
    const int reference = oracle::min_separating(oracle::distinct_ball_masks(g, [](std::uint32_t) { return true; }), n);
    CHECK(static_cast<int>(res.size) == reference);
    CHECK(res.size >= n - 2);
    MESSAGE("M(K_{1," << n - 1 << ")) = " << res.size);
  }
}

TEST_CASE("min_nonadaptive matches brute force in every mode") {
  for (const auto& g : small_corpus()) {
    const auto n = g.order();
    for (const auto& rc : {RadiusConstraint::unbounded(), RadiusConstraint::at_most(1), RadiusConstraint::at_most(2),
                           RadiusConstraint::exactly(1), RadiusConstraint::exactly(2)}) {
      const auto res = min_nonadaptive(g, rc);
      const int reference = oracle::min_separating(oracle::distinct_ball_masks(g, allows(rc)), n);
      if (reference < 0) {
        CHECK(res.status == SearchStatus::Infeasible);
        continue;
      }
      REQUIRE(res.status == SearchStatus::Solved);
      CHECK(static_cast<int>(res.size) == reference);
      CHECK(res.witness.size() == res.size);
      CHECK(is_separating(g, res.witness));
      for (const auto& q : res.witness) CHECK(rc.allows(q.radius));
      CHECK(res.size >= ceil_log2(n));
    }
  }
}

TEST_CASE("min_nonadaptive is monotone in the radius constraint") {
  for (const auto& g : small_corpus()) {
    const auto any = min_nonadaptive(g, RadiusConstraint::unbounded()).size;
    for (Radius r = 0; r < 3; ++r) {
      const auto le = min_nonadaptive(g, RadiusConstraint::at_most(r));
      const auto le1 = min_nonadaptive(g, RadiusConstraint::at_most(r + 1));
      REQUIRE(le.status == SearchStatus::Solved);  // radius 0 is always allowed
      CHECK(le1.size <= le.size);
      CHECK(any <= le1.size);
      const auto ex = min_nonadaptive(g, RadiusConstraint::exactly(r));
      if (ex.status == SearchStatus::Solved) CHECK(le.size <= ex.size);
    }
  }
}

TEST_CASE("min_nonadaptive witness is deterministic") {
  const auto g = oracle::random_connected(8, 0.2, 3);
  const auto a = min_nonadaptive(g, RadiusConstraint::unbounded());
  const auto b = min_nonadaptive(g, RadiusConstraint::unbounded());
  CHECK(a.witness == b.witness);
  CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("exhaustive limit and budget") {
  const auto big = path_graph(14);
  CHECK_THROWS_AS(min_nonadaptive(big, RadiusConstraint::unbounded()), std::invalid_argument);
  const auto tight = min_nonadaptive(big, RadiusConstraint::unbounded(), SearchOptions{5, 12});
  CHECK(tight.status == SearchStatus::BudgetExceeded);
  const auto roomy = min_nonadaptive(big, RadiusConstraint::unbounded(), SearchOptions{50'000'000, 12});
  CHECK(roomy.status == SearchStatus::Solved);
  CHECK(is_separating(big, roomy.witness));
}

TEST_CASE("path balls are intervals and each splits at most two adjacent pairs") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto g = path_graph(n);
    for (const auto& b : distinct_balls(g, RadiusConstraint::unbounded())) {
      const auto members = b.members.members<Vertex>();
      CHECK(members.back() - members.front() + 1 == members.size());
      std::size_t cut = 0;
      for (Vertex v = 0; v + 1 < n; ++v) cut += b.members.test(v) != b.members.test(v + 1);
      CHECK(cut <= 2);
    }
    const auto m = min_nonadaptive(g, RadiusConstraint::unbounded()).size;
    CHECK(2 * m >= n - 1);
    CHECK(m >= ceil_log2(n));
    MESSAGE("M(P_" << n << ") = " << m << ", ceil((n-1)/2) = " << n / 2);
  }
}

TEST_CASE("identifying codes from separating witnesses") {
  for (std::uint32_t s = 0; s < 30; ++s) {
    const auto g = oracle::random_connected(7, 0.2, s);
    for (Radius r = 1; r <= 2; ++r) {
      const auto res = min_nonadaptive(g, RadiusConstraint::exactly(r));
      if (res.status != SearchStatus::Solved) continue;
      const auto table = signatures(g, res.witness);
      std::vector<Vertex> empty;
      for (Vertex v = 0; v < g.order(); ++v)
        if (table.rows[v].none()) empty.push_back(v);
      CHECK(empty.size() <= 1);
      if (is_identifying(g, res.witness, r)) {
        CHECK(is_separating(g, res.witness));
        continue;
      }
      REQUIRE(empty.size() == 1);
      auto grown = res.witness;
      grown.push_back({empty[0], r});
      CHECK(is_identifying(g, grown, r));
    }
  }
}

TEST_CASE("metric dimension") {
  for (std::size_t n = 2; n <= 9; ++n) CHECK(metric_dimension(path_graph(n)).size == 1);
  for (std::size_t n = 2; n <= 7; ++n) CHECK(metric_dimension(complete_graph(n)).size == n - 1);
  CHECK(metric_dimension(cycle_graph(4)).size == 2);
  CHECK(metric_dimension(complete_graph(1)).size == 0);
  CHECK_THROWS_AS(metric_dimension(disjoint_cliques(2, 2)), DomainError);
  for (std::uint32_t s = 0; s < 25; ++s) {
    const auto g = oracle::random_connected(7, 0.3, s);
    const auto res = metric_dimension(g);
    CHECK(static_cast<int>(res.size) == oracle::metric_dimension(g));
    CHECK(res.witness.size() == res.size);
  }
}

TEST_CASE("katona bound") {
  const auto trivial = katona_lower_bound(128, 64);
  CHECK(trivial.trivial_regime);
  CHECK(trivial.value == 7);
  const auto mid = katona_lower_bound(128, 32);
  CHECK_FALSE(mid.trivial_regime);
  // 4 * 7 / log2(4e) = 8.13
  CHECK(mid.value == 9);
  for (std::uint64_t m = 1; m < 40; ++m) {
    const auto edge = katona_lower_bound(2 * m + 1, m);
    CHECK_FALSE(edge.trivial_regime);
    CHECK(edge.value >= 1);
  }
  CHECK(katona_lower_bound(10, 0).trivial_regime);
}

TEST_CASE("katona bound below exact minimum") {
  for (const auto& g : small_corpus()) {
    const auto n = g.order();
    for (Radius r = 1; r <= 2; ++r) {
      std::size_t max_ball = 0;
      for (Vertex v = 0; v < n; ++v) max_ball = std::max(max_ball, ball(g, v, r).count());
      if (2 * max_ball >= n) continue;
      const auto res = min_nonadaptive(g, RadiusConstraint::exactly(r));
      if (res.status != SearchStatus::Solved) continue;
      CHECK(katona_lower_bound(n, max_ball).value <= res.size);
    }
  }
}

TEST_CASE("sandwich examples") {
  const auto p4 = sandwich_check(path_graph(4));
  CHECK(p4.metric_dimension == 1);
  CHECK(p4.diameter == 3);
  CHECK(p4.holds());
  const auto k3 = sandwich_check(complete_graph(3));
  CHECK(k3.metric_dimension == 2);
  CHECK(k3.nonadaptive_minimum == 2);
  const auto k2 = sandwich_check(complete_graph(2));
  CHECK(k2.metric_dimension == 1);
  CHECK(k2.nonadaptive_minimum == 1);
  CHECK_THROWS_AS(sandwich_check(disjoint_cliques(2, 2)), DomainError);
}

TEST_CASE("P_4 needs three non-adaptive queries") {
  // Balls of P_4 are centred intervals clipped at the ends; no two of them
  // produce the four patterns 00, 01, 10, 11.
  const auto g = path_graph(4);
  CHECK(oracle::min_separating(oracle::distinct_ball_masks(g, [](std::uint32_t) { return true; }), 4) == 3);
  CHECK(min_nonadaptive(g, RadiusConstraint::unbounded()).size == 3);
}
