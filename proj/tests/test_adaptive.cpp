#include <doctest.h>

#include <cmath>
#include <random>

#include "ballsearch/adaptive.hpp"
#include "ballsearch/errors.hpp"
#include "ballsearch/generators.hpp"
#include "ballsearch/hypercube_codes.hpp"
#include "oracles.hpp"

using namespace ballsearch;

namespace {

std::size_t hypercube_bound(unsigned n) { return n - 1 + ceil_log2(n + 1); }

// Plays every hidden vertex; checks soundness and replay, returns the longest game.
std::size_t play_all(const Graph& g, const Strategy& prototype, const RadiusConstraint& rc) {
  std::size_t longest = 0;
  for (Vertex hidden = 0; hidden < g.order(); ++hidden) {
    auto s = prototype.clone();
    FixedOracle o(hidden);
    const auto t = run_search(g, *s, o, rc);
    CHECK(t.resolved == hidden);
    const auto seq = replay(g, t);
    CHECK(seq.back().count() == 1);
    for (std::size_t i = 0; i < seq.size(); ++i) {
      CHECK(seq[i].test(hidden));
      if (i > 0) CHECK(seq[i].is_subset_of(seq[i - 1]));
    }
    longest = std::max(longest, t.length());
  }
  return longest;
}

// Always asks B(0, 0): useless once vertex 0 is excluded.
class Stubborn final : public Strategy {
 public:
  std::string name() const override { return "stubborn"; }
  BallQuery next_query(const VertexSet&) override { return {0, 0}; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<Stubborn>(); }
};

class WideRadius final : public Strategy {
 public:
  std::string name() const override { return "wide"; }
  BallQuery next_query(const VertexSet&) override { return {0, 5}; }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<WideRadius>(); }
};

std::vector<Graph> connected_corpus() {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= 9; ++n) out.push_back(path_graph(n));
  for (std::size_t n = 3; n <= 9; ++n) out.push_back(cycle_graph(n));
  for (std::size_t n = 2; n <= 9; ++n) out.push_back(star_graph(n));
  for (std::size_t n = 1; n <= 7; ++n) out.push_back(complete_graph(n));
  out.push_back(Graph::hypercube(3));
  for (std::uint32_t s = 0; s < 20; ++s) out.push_back(oracle::random_connected(6 + s % 4, 0.2, s));
  return out;
}

}  // namespace

TEST_CASE("trivial games") {
  const auto k1 = complete_graph(1);
  FixedOracle zero(0);
  auto h = halving_strategy(k1);
  CHECK(run_search(k1, *h, zero, RadiusConstraint::unbounded()).length() == 0);

  const auto p2 = path_graph(2);
  for (Vertex v = 0; v < 2; ++v) {
    FixedOracle o(v);
    auto s = halving_strategy(p2);
    const auto t = run_search(p2, *s, o, RadiusConstraint::unbounded());
    CHECK(t.length() == 1);
    CHECK(t.resolved == v);
  }
  const auto q1 = Graph::hypercube(1);
  CHECK(play_all(q1, *hypercube_strategy(q1), RadiusConstraint::unbounded()) == 1);
}

TEST_CASE("hypercube strategy trace on Q_3") {
  const auto q3 = Graph::hypercube(3);
  auto s = hypercube_strategy(q3);
  FixedOracle o(0b101);
  const auto t = run_search(q3, *s, o, RadiusConstraint::unbounded());
  REQUIRE(t.length() == 4);
  CHECK(t.steps[0].query == BallQuery{0, 1});
  CHECK_FALSE(t.steps[0].answer);
  CHECK(t.steps[1].query == BallQuery{0, 2});
  CHECK(t.steps[1].answer);
  CHECK(t.steps[2].query == BallQuery{0b001, 1});
  CHECK(t.steps[2].answer);
  CHECK(t.steps[3].query == BallQuery{0b010, 1});
  CHECK_FALSE(t.steps[3].answer);
  CHECK(t.resolved == 0b101);

  auto s0 = hypercube_strategy(q3);
  FixedOracle origin(0);
  CHECK(run_search(q3, *s0, origin, RadiusConstraint::unbounded()).length() <= 2);
}

TEST_CASE("hypercube strategy bound, every hidden vertex") {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto g = Graph::hypercube(n);
    const auto s = hypercube_strategy(g);
    CHECK(play_all(g, *s, RadiusConstraint::unbounded()) <= hypercube_bound(n));
    CHECK(worst_case_queries(g, *s, RadiusConstraint::unbounded()) <= hypercube_bound(n));
  }
  CHECK_THROWS_AS(hypercube_strategy(path_graph(4)), std::invalid_argument);
}

TEST_CASE("adversarial oracle") {
  AdversarialOracle adv;
  Bitset cand = Bitset::full(4), b(4);
  b.set(0);
  b.set(1);
  CHECK_FALSE(adv.answer(b, cand));  // 2 vs 2 tie
  b.set(2);
  CHECK(adv.answer(b, cand));

  // The adversary stays consistent: replaying its answers for the final vertex gives the same game.
  for (unsigned n = 2; n <= 8; ++n) {
    const auto g = Graph::hypercube(n);
    auto s = hypercube_strategy(g);
    AdversarialOracle o;
    const auto t = run_search(g, *s, o, RadiusConstraint::unbounded());
    auto s2 = hypercube_strategy(g);
    FixedOracle fixed(t.resolved);
    const auto t2 = run_search(g, *s2, fixed, RadiusConstraint::unbounded());
    CHECK(t2.length() == t.length());
    CHECK(t.length() <= worst_case_queries(g, *hypercube_strategy(g), RadiusConstraint::unbounded()));
  }
}

TEST_CASE("covering-then-locate on Q_4 with a greedy cover") {
  const auto g = Graph::hypercube(4);
  const auto cover = greedy_covering(4, 1);
  const auto atmost = covering_then_locate_strategy(g, 1, cover.queries(), CoverMode::AtMost);
  CHECK(play_all(g, *atmost, RadiusConstraint::at_most(1)) <= cover.size() + 3 + 1);
  const auto exact = covering_then_locate_strategy(g, 1, cover.queries(), CoverMode::Exact);
  CHECK(play_all(g, *exact, RadiusConstraint::exactly(1)) <= cover.size() + v_ball(4, 1));
}

TEST_CASE("covering-then-locate with the whole cube as one ball") {
  const auto g = Graph::hypercube(3);
  const auto s = covering_then_locate_strategy(g, 3, {{0, 3}}, CoverMode::AtMost);
  CHECK(play_all(g, *s, RadiusConstraint::at_most(3)) <= 1 + 2 + 2);
}

TEST_CASE("covering-then-locate preconditions") {
  const auto g = Graph::hypercube(3);
  CHECK_THROWS_AS(covering_then_locate_strategy(g, 1, {{0, 1}}, CoverMode::AtMost), DomainError);
  CHECK_THROWS_AS(covering_then_locate_strategy(g, 1, {{0, 1}, {7, 2}}, CoverMode::AtMost), std::invalid_argument);
  CHECK_THROWS_AS(covering_then_locate_strategy(path_graph(5), 1, {{1, 1}, {3, 1}, {4, 1}}, CoverMode::AtMost),
                  std::invalid_argument);
}

TEST_CASE("exact-mode covering works on general graphs") {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::random_connected(12, 0.05, seed);
    QuerySet cover;
    for (Vertex v = 0; v < g.order(); ++v) cover.push_back({v, 1});
    const auto s = covering_then_locate_strategy(g, 1, cover, CoverMode::Exact);
    try {
      play_all(g, *s, RadiusConstraint::exactly(1));
    } catch (const DomainError&) {
      // Some graphs have two vertices no radius-1 ball separates.
    }
  }
  // A path separates everything with radius-1 balls.
  const auto p = path_graph(9);
  QuerySet cover{{1, 1}, {4, 1}, {7, 1}};
  const auto s = covering_then_locate_strategy(p, 1, cover, CoverMode::Exact);
  CHECK(play_all(p, *s, RadiusConstraint::exactly(1)) <= cover.size() + 3);
}

TEST_CASE("split balance uses exact integer bounds") {
  // |X| = 7, delta = 2: need 2 <= hits <= 5.
  CHECK_FALSE(split_is_balanced(1, 7, 2));
  CHECK(split_is_balanced(2, 7, 2));
  CHECK(split_is_balanced(5, 7, 2));
  CHECK_FALSE(split_is_balanced(6, 7, 2));
  // |X| = 8: 2 <= hits <= 6.
  CHECK(split_is_balanced(2, 8, 2));
  CHECK(split_is_balanced(6, 8, 2));
  CHECK_FALSE(split_is_balanced(7, 8, 2));
}

TEST_CASE("predelta split examples") {
  const auto p7 = path_graph(7);
  const auto s = predelta_split(p7, Bitset::full(7));
  CHECK(s.hits >= 2);
  CHECK(s.hits <= 5);
  CHECK(ball(p7, s.query.center, s.query.radius).count() == s.hits);

  const auto c8 = cycle_graph(8);
  const auto t = predelta_split(c8, Bitset::full(8));
  CHECK(t.hits >= 2);
  CHECK(t.hits <= 6);

  Bitset small(7);
  small.set(0);
  small.set(3);
  small.set(6);
  CHECK_THROWS_AS(predelta_split(p7, small), DomainError);
  CHECK_THROWS_AS(predelta_split(disjoint_cliques(2, 3), Bitset::full(6)), DomainError);
}

TEST_CASE("predelta split postcondition on random candidate sets") {
  std::mt19937 rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = bounded_degree_connected(30, 2 + seed % 4, seed);
    const DistanceTable dist(g);
    const auto delta = g.max_degree();
    for (int round = 0; round < 10; ++round) {
      Bitset x(g.order());
      std::bernoulli_distribution keep(0.15 + 0.08 * round);
      for (Vertex v = 0; v < g.order(); ++v)
        if (keep(rng)) x.set(v);
      if (x.count() < delta + 2) continue;
      const auto s = predelta_split(g, dist, x);
      CHECK(split_is_balanced(s.hits, x.count(), delta));
      CHECK(ball(g, s.query.center, s.query.radius).intersection_count(x) == s.hits);
      const auto c = predelta_split_by_construction(g, dist, x);
      CHECK(split_is_balanced(c.hits, x.count(), delta));
      CHECK(ball(g, c.query.center, c.query.radius).intersection_count(x) == c.hits);
    }
  }
}

TEST_CASE("halving strategy bounds") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto g = complete_graph(n);  // n <= delta + 2
    CHECK(play_all(g, *halving_strategy(g), RadiusConstraint::unbounded()) <= g.max_degree() + 1);
  }
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = bounded_degree_connected(100, 3, seed);
    const auto delta = g.max_degree();
    const auto bound = halving_query_bound(100, delta, 1);
    auto planner = std::make_shared<HalvingPlanner>(g);
    const auto proto = halving_strategy(planner);
    CHECK(static_cast<double>(play_all(g, *proto, RadiusConstraint::unbounded())) <= bound);
    CHECK(static_cast<double>(worst_case_queries(g, *proto, RadiusConstraint::unbounded())) <= bound);
    CHECK(planner->verified_splits() > 0);
  }
  CHECK(halving_query_bound(100, 3, 1) == doctest::Approx(std::log(100.0) / std::log(6.0 / 5.0) + 4));
  CHECK_THROWS_AS(halving_strategy(disjoint_cliques(2, 3)), DomainError);
}

TEST_CASE("run_search contract checks") {
  const auto g = path_graph(5);
  Stubborn stubborn;
  FixedOracle o(3);
  CHECK_THROWS_AS(run_search(g, stubborn, o, RadiusConstraint::unbounded()), ContractViolation);
  WideRadius wide;
  CHECK_THROWS_AS(run_search(g, wide, o, RadiusConstraint::at_most(2)), ContractViolation);
  auto halving = halving_strategy(g);
  CHECK_THROWS_AS(run_search(disjoint_cliques(2, 2), *halving, o, RadiusConstraint::unbounded()), DomainError);
}

TEST_CASE("exact adaptive examples") {
  const auto q3 = exact_adaptive(Graph::hypercube(3), RadiusConstraint::unbounded());
  CHECK(q3.status == SearchStatus::Solved);
  CHECK(q3.value >= 3);
  CHECK(q3.value <= 4);
  REQUIRE(q3.optimal_first_query.has_value());

  const auto star = exact_adaptive(star_graph(4), RadiusConstraint::unbounded());
  CHECK(star.value >= 2);
  MESSAGE("A(K_{1,3}) = " << star.value);

  CHECK(exact_adaptive(complete_graph(1), RadiusConstraint::unbounded()).value == 0);
  CHECK(exact_adaptive(complete_graph(2), RadiusConstraint::exactly(1)).status == SearchStatus::Infeasible);
  CHECK_THROWS_AS(exact_adaptive(path_graph(11), RadiusConstraint::unbounded()), std::invalid_argument);
}

TEST_CASE("exact adaptive matches plain minimax") {
  for (const auto& g : connected_corpus()) {
    if (g.order() > 8) continue;
    for (const auto& rc : {RadiusConstraint::unbounded(), RadiusConstraint::at_most(1), RadiusConstraint::exactly(1),
                           RadiusConstraint::exactly(2)}) {
      const auto res = exact_adaptive(g, rc);
      const auto reference = oracle::exact_adaptive(g, [rc](std::uint32_t r) { return rc.allows(r); });
      if (reference >= oracle::kInf) {
        CHECK(res.status == SearchStatus::Infeasible);
      } else {
        REQUIRE(res.status == SearchStatus::Solved);
        CHECK(res.value == reference);
        CHECK(res.value >= ceil_log2(g.order()));
      }
    }
  }
}

TEST_CASE("optimal first query achieves the value") {
  for (std::uint32_t s = 0; s < 10; ++s) {
    const auto g = oracle::random_connected(7, 0.2, s);
    const auto res = exact_adaptive(g, RadiusConstraint::unbounded());
    REQUIRE(res.optimal_first_query.has_value());
    const auto b = ball(g, res.optimal_first_query->center, res.optimal_first_query->radius);
    const auto full = (oracle::Set{1} << g.order()) - 1;
    const auto in = b.words()[0] & full;
    const auto balls = oracle::distinct_ball_masks(g, [](std::uint32_t) { return true; });
    std::map<oracle::Set, std::uint32_t> memo;
    const auto v = 1 + std::max(oracle::minimax(balls, in, memo), oracle::minimax(balls, full & ~in, memo));
    CHECK(v == res.value);
  }
}

TEST_CASE("exact adaptive is monotone in the radius constraint") {
  for (const auto& g : connected_corpus()) {
    if (g.order() > 8) continue;
    for (Radius r = 0; r < 3; ++r) {
      const auto le = exact_adaptive(g, RadiusConstraint::at_most(r));
      const auto le1 = exact_adaptive(g, RadiusConstraint::at_most(r + 1));
      const auto ex = exact_adaptive(g, RadiusConstraint::exactly(r));
      CHECK(le1.value <= le.value);
      if (ex.status == SearchStatus::Solved) CHECK(le.value <= ex.value);
      CHECK(exact_adaptive(g, RadiusConstraint::unbounded()).value <= le1.value);
    }
  }
}

TEST_CASE("strategies are sound and never beat the minimax value") {
  for (const auto& g : connected_corpus()) {
    const auto best = exact_adaptive(g, RadiusConstraint::unbounded()).value;
    auto planner = std::make_shared<HalvingPlanner>(g);
    const auto proto = halving_strategy(planner);
    const auto fixed_max = play_all(g, *proto, RadiusConstraint::unbounded());
    const auto worst = worst_case_queries(g, *proto, RadiusConstraint::unbounded());
    CHECK(worst == fixed_max);
    CHECK(best <= worst);
    auto s = proto->clone();
    AdversarialOracle adv;
    const auto t = run_search(g, *s, adv, RadiusConstraint::unbounded());
    CHECK(t.length() <= worst);
  }
  const auto q3 = Graph::hypercube(3);
  const auto best = exact_adaptive(q3, RadiusConstraint::unbounded()).value;
  CHECK(best <= worst_case_queries(q3, *hypercube_strategy(q3), RadiusConstraint::unbounded()));
}

TEST_CASE("disjoint cliques need a query per component") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t size = 1; size <= 3; ++size) {
      const auto g = disjoint_cliques(k, size);
      if (g.order() > 10) continue;
      const auto res = exact_adaptive(g, RadiusConstraint::unbounded());
      REQUIRE(res.status == SearchStatus::Solved);
      const auto one = exact_adaptive(complete_graph(size), RadiusConstraint::unbounded()).value;
      CHECK(res.value >= k - 1 + one);
      CHECK(static_cast<double>(res.value) >= static_cast<double>(g.order()) / static_cast<double>(size) - 1);
      CHECK(res.value == oracle::exact_adaptive(g, [](std::uint32_t) { return true; }));
    }
}
