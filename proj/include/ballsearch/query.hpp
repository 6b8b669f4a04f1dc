#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ballsearch/graph.hpp"

namespace ballsearch {

/// "Does the unknown vertex lie in B(center, radius)?"
struct BallQuery {
  Vertex center = 0;
  Radius radius = 0;

  friend bool operator==(const BallQuery&, const BallQuery&) = default;
  friend auto operator<=>(const BallQuery&, const BallQuery&) = default;
};

/// Ordered: query j contributes bit j of every signature.
using QuerySet = std::vector<BallQuery>;

/// Which radii a search may use: exactly r, at most r, or any.
class RadiusConstraint {
 public:
  enum class Mode { Exactly, AtMost, Unbounded };

  static RadiusConstraint exactly(Radius r) { return {Mode::Exactly, r}; }
  static RadiusConstraint at_most(Radius r) { return {Mode::AtMost, r}; }
  static RadiusConstraint unbounded() { return {Mode::Unbounded, 0}; }

  /// "exact:R", "atmost:R" or "any".
  static RadiusConstraint parse(std::string_view text);

  Mode mode() const { return mode_; }
  Radius radius() const { return radius_; }
  bool allows(Radius r) const {
    switch (mode_) {
      case Mode::Exactly: return r == radius_;
      case Mode::AtMost: return r <= radius_;
      case Mode::Unbounded: return true;
    }
    return false;
  }
  std::string to_string() const;

  friend bool operator==(const RadiusConstraint&, const RadiusConstraint&) = default;

 private:
  RadiusConstraint(Mode m, Radius r) : mode_(m), radius_(r) {}
  Mode mode_ = Mode::Unbounded;
  Radius radius_ = 0;
};

struct DistinctBall {
  BallQuery query;   // representative: smallest (radius, center)
  VertexSet members;
};

/**
 * Every ball allowed by `rc`, deduplicated by vertex set and ordered by the
 * (radius, center) of its first representative. Unbounded mode stops at the
 * largest finite distance, beyond which balls are whole components.
 * Materialises every ball; meant for small graphs.
 */
std::vector<DistinctBall> distinct_balls(const Graph& g, const RadiusConstraint& rc);

}  // namespace ballsearch
