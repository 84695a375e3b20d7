#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace qm {

// The six quarter-plane steps. Enumerator order is the frozen enumeration
// order (R < A < D < L < B < U), so comparing enum values compares steps.
enum class WalkStep : std::uint8_t { R, A, D, L, B, U };

inline constexpr std::array<WalkStep, 6> all_walk_steps = {
    WalkStep::R, WalkStep::A, WalkStep::D, WalkStep::L, WalkStep::B, WalkStep::U};

// The three-step subset, in the same global order.
inline constexpr std::array<WalkStep, 3> y_walk_steps = {WalkStep::A, WalkStep::L,
                                                         WalkStep::U};

constexpr int step_dx(WalkStep s) {
  switch (s) {
    case WalkStep::R: return 1;
    case WalkStep::A: return 1;
    case WalkStep::D: return 0;
    case WalkStep::L: return -1;
    case WalkStep::B: return -1;
    case WalkStep::U: return 0;
  }
  return 0;
}

constexpr int step_dy(WalkStep s) {
  switch (s) {
    case WalkStep::R: return 0;
    case WalkStep::A: return -1;
    case WalkStep::D: return -1;
    case WalkStep::L: return 0;
    case WalkStep::B: return 1;
    case WalkStep::U: return 1;
  }
  return 0;
}

constexpr char step_char(WalkStep s) {
  switch (s) {
    case WalkStep::R: return 'R';
    case WalkStep::A: return 'A';
    case WalkStep::D: return 'D';
    case WalkStep::L: return 'L';
    case WalkStep::B: return 'B';
    case WalkStep::U: return 'U';
  }
  return '?';
}

constexpr std::optional<WalkStep> step_from_char(char c) {
  switch (c) {
    case 'R': return WalkStep::R;
    case 'A': return WalkStep::A;
    case 'D': return WalkStep::D;
    case 'L': return WalkStep::L;
    case 'B': return WalkStep::B;
    case 'U': return WalkStep::U;
    default: return std::nullopt;
  }
}

constexpr bool is_y_step(WalkStep s) {
  return s == WalkStep::U || s == WalkStep::A || s == WalkStep::L;
}

// Motzkin step kinds, in the frozen output order u < f < d.
enum class MotzkinKind : std::uint8_t { Up, Flat, Down };

constexpr int kind_delta(MotzkinKind k) {
  switch (k) {
    case MotzkinKind::Up: return 1;
    case MotzkinKind::Flat: return 0;
    case MotzkinKind::Down: return -1;
  }
  return 0;
}

constexpr char kind_char(MotzkinKind k) {
  switch (k) {
    case MotzkinKind::Up: return 'u';
    case MotzkinKind::Flat: return 'f';
    case MotzkinKind::Down: return 'd';
  }
  return '?';
}

constexpr std::optional<MotzkinKind> kind_from_char(char c) {
  switch (c) {
    case 'u': return MotzkinKind::Up;
    case 'f': return MotzkinKind::Flat;
    case 'd': return MotzkinKind::Down;
    default: return std::nullopt;
  }
}

enum class Colour : std::uint8_t { Red, Black };  // r < b

constexpr char colour_char(Colour c) { return c == Colour::Red ? 'r' : 'b'; }

constexpr std::optional<Colour> colour_from_char(char c) {
  switch (c) {
    case 'r': return Colour::Red;
    case 'b': return Colour::Black;
    default: return std::nullopt;
  }
}

enum class Mark : std::uint8_t { Marked, Unmarked };  // '*' < '.'

constexpr char mark_char(Mark m) { return m == Mark::Marked ? '*' : '.'; }

constexpr std::optional<Mark> mark_from_char(char c) {
  switch (c) {
    case '*': return Mark::Marked;
    case '.': return Mark::Unmarked;
    default: return std::nullopt;
  }
}

}  // namespace qm
