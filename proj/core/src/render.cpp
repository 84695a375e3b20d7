#include "qm/render.hpp"

#include <algorithm>
#include <functional>

namespace qm {

namespace {

// Grid rows top-down, one per height; column width 1 or 2. The row a step
// lands in: ups the row they rise to, downs the row they fall from, flats
// their own height. Heights 1..max are always inked (any crossing writes a
// '/'), so only a blank bottom row can remain, and stripping blank tails
// removes it.
template <class Deco>
std::string draw(const BasicPath<Deco>& path, std::size_t cell,
                 const std::function<void(std::string&, const typename BasicPath<Deco>::Step&)>&
                     annotate) {
  if (path.empty()) return "";
  int max = path.max_height();
  std::vector<std::string> rows(max + 1, std::string(path.size() * cell, ' '));
  int h = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& s = path.steps()[i];
    int nh = h + kind_delta(s.kind);
    int row;
    char glyph;
    switch (s.kind) {
      case MotzkinKind::Up: row = nh, glyph = '/'; break;
      case MotzkinKind::Down: row = h, glyph = '\\'; break;
      default: row = h, glyph = '-'; break;
    }
    rows[max - row][i * cell] = glyph;
    h = nh;
  }
  while (!rows.empty() &&
         rows.back().find_first_not_of(' ') == std::string::npos)
    rows.pop_back();
  std::string out;
  for (std::string& row : rows) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  if (annotate) {
    std::string line;
    for (const auto& s : path.steps()) annotate(line, s);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_path(const MotzkinPath& path) { return draw(path, 1, nullptr); }

std::string render_path(const BicolouredPath& path) {
  return draw<Colour>(path, 1, [](std::string& line, const BicolouredPath::Step& s) {
    line += colour_char(s.deco);
  });
}

std::string render_path(const MarkedBicolouredPath& path) {
  return draw<ColourMark>(
      path, 2, [](std::string& line, const MarkedBicolouredPath::Step& s) {
        line += colour_char(s.deco.colour);
        line += mark_char(s.deco.mark);
      });
}

std::string render_walk(const QuarterPlaneWalk& walk) {
  int x = 0, y = 0, max_x = 0, max_y = 0;
  std::vector<Point> visited = {Point{0, 0}};
  for (WalkStep s : walk.steps()) {
    x += step_dx(s);
    y += step_dy(s);
    visited.push_back(Point{x, y});
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  Point end{x, y};
  std::string out;
  for (int row = max_y; row >= 0; --row) {
    std::string line;
    for (int col = 0; col <= max_x; ++col) {
      Point p{col, row};
      char cell = '.';
      if (std::ranges::find(visited, p) != visited.end()) cell = 'o';
      bool is_start = p == Point{0, 0};
      bool is_end = p == end;
      if (is_start && is_end) cell = 'B';
      else if (is_start) cell = 'S';
      else if (is_end) cell = 'E';
      if (col > 0) line += ' ';
      line += cell;
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace qm
