#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qm/steps.hpp"

namespace qm {

struct Point {
  int x = 0;
  int y = 0;
  friend constexpr bool operator==(Point, Point) = default;
};

// A walk over the six-step set whose every prefix stays in the first
// quadrant. Immutable after construction; construction validates eagerly.
class QuarterPlaneWalk {
 public:
  QuarterPlaneWalk() = default;
  // Throws Error{LeavesQuadrant, position} at the first offending step.
  explicit QuarterPlaneWalk(std::vector<WalkStep> steps);

  const std::vector<WalkStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  Point endpoint() const;
  bool uses_only_y_steps() const;
  // Max of x+y over every point of the walk, origin included.
  int max_coordinate_sum() const;

  friend bool operator==(const QuarterPlaneWalk&, const QuarterPlaneWalk&) = default;

 private:
  std::vector<WalkStep> steps_;
};

// True iff every prefix sum has x >= 0 and y >= 0.
bool quadrant_valid(std::span<const WalkStep> steps);

// Throws Error{BadChar, position} or Error{LeavesQuadrant, position}.
QuarterPlaneWalk parse_walk(std::string_view text);
std::string format_walk(const QuarterPlaneWalk& w);
Point walk_endpoint(const QuarterPlaneWalk& w);

}  // namespace qm
