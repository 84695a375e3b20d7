#include "qm/walk.hpp"

#include <algorithm>

#include "qm/error.hpp"

namespace qm {

bool quadrant_valid(std::span<const WalkStep> steps) {
  int x = 0, y = 0;
  for (WalkStep s : steps) {
    x += step_dx(s);
    y += step_dy(s);
    if (x < 0 || y < 0) return false;
  }
  return true;
}

QuarterPlaneWalk::QuarterPlaneWalk(std::vector<WalkStep> steps) : steps_(std::move(steps)) {
  int x = 0, y = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    x += step_dx(steps_[i]);
    y += step_dy(steps_[i]);
    if (x < 0 || y < 0) throw Error(ErrorKind::LeavesQuadrant, {i + 1});
  }
}

Point QuarterPlaneWalk::endpoint() const {
  int x = 0, y = 0;
  for (WalkStep s : steps_) {
    x += step_dx(s);
    y += step_dy(s);
  }
  return Point{x, y};
}

bool QuarterPlaneWalk::uses_only_y_steps() const {
  return std::ranges::all_of(steps_, is_y_step);
}

int QuarterPlaneWalk::max_coordinate_sum() const {
  int x = 0, y = 0, best = 0;
  for (WalkStep s : steps_) {
    x += step_dx(s);
    y += step_dy(s);
    best = std::max(best, x + y);
  }
  return best;
}

QuarterPlaneWalk parse_walk(std::string_view text) {
  std::vector<WalkStep> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto step = step_from_char(text[i]);
    if (!step) throw Error(ErrorKind::BadChar, {i + 1});
    steps.push_back(*step);
  }
  return QuarterPlaneWalk(std::move(steps));
}

std::string format_walk(const QuarterPlaneWalk& walk) {
  std::string out;
  out.reserve(walk.size());
  for (WalkStep s : walk.steps()) out.push_back(step_char(s));
  return out;
}

Point walk_endpoint(const QuarterPlaneWalk& walk) { return walk.endpoint(); }

}  // namespace qm
