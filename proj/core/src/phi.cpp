#include "qm/phi.hpp"

#include "qm/error.hpp"
#include "qm/psi.hpp"

namespace qm {

namespace {

using PathStep = MarkedBicolouredPath::Step;

constexpr PathStep make(MotzkinKind kind, Colour colour, Mark mark) {
  return PathStep{kind, ColourMark{colour, mark}};
}

// Flat -> up, down -> flat, mark dropped. Colour survives.
void lift(PathStep& s) {
  s.kind = s.kind == MotzkinKind::Flat ? MotzkinKind::Up : MotzkinKind::Flat;
  s.deco.mark = Mark::Unmarked;
}

}  // namespace

MarkedBicolouredPath phi(const QuarterPlaneWalk& walk) {
  std::vector<PathStep> out;
  out.reserve(walk.size());
  // Positions (0-based) of surviving marked steps: stack_p holds
  // {red flat, black down}, stack_q holds {black flat, red down}.
  // |stack_p| and |stack_q| track the walk's current y and x.
  std::vector<std::size_t> stack_p, stack_q;

  auto pop_lift = [&](std::vector<std::size_t>& stack, std::size_t at) {
    if (stack.empty()) throw Error(ErrorKind::NoMatchableStep, {at + 1});
    lift(out[stack.back()]);
    stack.pop_back();
  };

  for (std::size_t i = 0; i < walk.size(); ++i) {
    switch (walk.steps()[i]) {
      case WalkStep::U:
        stack_p.push_back(out.size());
        out.push_back(make(MotzkinKind::Flat, Colour::Red, Mark::Marked));
        break;
      case WalkStep::R:
        stack_q.push_back(out.size());
        out.push_back(make(MotzkinKind::Flat, Colour::Black, Mark::Marked));
        break;
      case WalkStep::A:
        pop_lift(stack_p, i);
        stack_q.push_back(out.size());
        out.push_back(make(MotzkinKind::Down, Colour::Red, Mark::Marked));
        break;
      case WalkStep::B:
        pop_lift(stack_q, i);
        stack_p.push_back(out.size());
        out.push_back(make(MotzkinKind::Down, Colour::Black, Mark::Marked));
        break;
      case WalkStep::L:
        pop_lift(stack_q, i);
        out.push_back(make(MotzkinKind::Down, Colour::Red, Mark::Unmarked));
        break;
      case WalkStep::D:
        pop_lift(stack_p, i);
        out.push_back(make(MotzkinKind::Down, Colour::Black, Mark::Unmarked));
        break;
    }
  }
  return MarkedBicolouredPath(std::move(out));
}

UnmapResult g_unmap(const MarkedBicolouredPath& path) {
  UnmapResult result;
  result.steps.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const PathStep& s = path.steps()[i];
    bool red = s.deco.colour == Colour::Red;
    bool marked = s.deco.mark == Mark::Marked;
    switch (s.kind) {
      case MotzkinKind::Up:
        if (marked) throw Error(ErrorKind::MarkedUpStep, {i + 1});
        result.steps.push_back(red ? WalkStep::U : WalkStep::R);
        break;
      case MotzkinKind::Flat:
        if (marked)
          result.steps.push_back(red ? WalkStep::U : WalkStep::R);
        else
          result.steps.push_back(red ? WalkStep::A : WalkStep::B);
        break;
      case MotzkinKind::Down:
        if (marked)
          result.steps.push_back(red ? WalkStep::A : WalkStep::B);
        else
          result.steps.push_back(red ? WalkStep::L : WalkStep::D);
        break;
    }
  }
  result.quarterplane_valid = quadrant_valid(result.steps);
  return result;
}

bool phi_image_contains(const MarkedBicolouredPath& path) {
  // psi produces the unique image marking, so membership is re-marking.
  return psi(forget_marks(path)) == path;
}

}  // namespace qm
