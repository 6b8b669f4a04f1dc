#include "ballsearch/query.hpp"

#include <charconv>
#include <stdexcept>
#include <unordered_set>

namespace ballsearch {

RadiusConstraint RadiusConstraint::parse(std::string_view text) {
  if (text == "any") return unbounded();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("radius mode must be exact:R, atmost:R or any");
  auto kind = text.substr(0, colon);
  auto num = text.substr(colon + 1);
  Radius r = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), r);
  if (ec != std::errc{} || ptr != num.data() + num.size() || num.empty())
    throw std::invalid_argument("bad radius in mode '" + std::string(text) + "'");
  if (kind == "exact") return exactly(r);
  if (kind == "atmost") return at_most(r);
  throw std::invalid_argument("radius mode must be exact:R, atmost:R or any");
}

std::string RadiusConstraint::to_string() const {
  switch (mode_) {
    case Mode::Exactly: return "exact:" + std::to_string(radius_);
    case Mode::AtMost: return "atmost:" + std::to_string(radius_);
    case Mode::Unbounded: return "any";
  }
  return "any";
}

std::vector<DistinctBall> distinct_balls(const Graph& g, const RadiusConstraint& rc) {
  Radius lo = 0;
  Radius hi = 0;
  switch (rc.mode()) {
    case RadiusConstraint::Mode::Exactly: lo = hi = rc.radius(); break;
    case RadiusConstraint::Mode::AtMost: hi = rc.radius(); break;
    case RadiusConstraint::Mode::Unbounded: hi = max_finite_distance(g); break;
  }
  // Radii past the largest finite distance add nothing new.
  const Radius cap = max_finite_distance(g);
  std::vector<DistinctBall> out;
  std::unordered_set<VertexSet, BitsetHash> seen;
  for (Radius r = lo; r <= hi; ++r) {
    const Radius effective = std::min(r, cap);
    for (Vertex v = 0; v < g.order(); ++v) {
      auto members = ball(g, v, effective);
      if (seen.insert(members).second) out.push_back({BallQuery{v, r}, std::move(members)});
    }
    if (r >= cap && rc.mode() != RadiusConstraint::Mode::Exactly) break;
  }
  return out;
}

}  // namespace ballsearch
