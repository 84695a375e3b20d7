#include "qm/psi.hpp"

#include "qm/error.hpp"

namespace qm {

BicolouredPath forget_marks(const MarkedBicolouredPath& path) {
  std::vector<BicolouredPath::Step> out;
  out.reserve(path.size());
  for (const auto& s : path.steps()) out.push_back({s.kind, s.deco.colour});
  return BicolouredPath(std::move(out));
}

MarkedBicolouredPath psi(const BicolouredPath& path) {
  enum class State : char { Unassigned, Marked, Unmarked };
  const auto& in = path.steps();
  std::vector<State> state(in.size(), State::Unassigned);
  // 0-based positions of unassigned steps: stack_p holds {red up,
  // black flat}, stack_q holds {black up, red flat}. Flats keep the
  // total stack size constant and ups/downs move it with the height,
  // so on Motzkin input a down always finds a waiter and both stacks
  // drain to empty by the end.
  std::vector<std::size_t> stack_p, stack_q;

  auto close = [&](std::vector<std::size_t>& stack) {
    state[stack.back()] = State::Unmarked;
    stack.pop_back();
  };

  for (std::size_t i = 0; i < in.size(); ++i) {
    bool red = in[i].deco == Colour::Red;
    switch (in[i].kind) {
      case MotzkinKind::Up:
        (red ? stack_p : stack_q).push_back(i);
        break;
      case MotzkinKind::Flat: {
        auto& search = red ? stack_p : stack_q;
        if (!search.empty()) {
          close(search);
          (red ? stack_q : stack_p).push_back(i);
        } else {
          state[i] = State::Marked;
        }
        break;
      }
      case MotzkinKind::Down: {
        auto& preferred = red ? stack_q : stack_p;
        auto& other = red ? stack_p : stack_q;
        if (!preferred.empty()) {
          close(preferred);
          state[i] = State::Unmarked;
        } else if (!other.empty()) {
          close(other);
          state[i] = State::Marked;
        }
        break;
      }
    }
  }

  std::vector<std::size_t> leftover;
  for (std::size_t i = 0; i < state.size(); ++i)
    if (state[i] == State::Unassigned) leftover.push_back(i + 1);
  if (!leftover.empty()) throw Error(ErrorKind::UnassignedResidue, std::move(leftover));

  std::vector<MarkedBicolouredPath::Step> out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    Mark mark = state[i] == State::Marked ? Mark::Marked : Mark::Unmarked;
    out.push_back({in[i].kind, ColourMark{in[i].deco, mark}});
  }
  return MarkedBicolouredPath(std::move(out));
}

}  // namespace qm
