#include "qm/tableaux.hpp"

#include <charconv>

#include "qm/error.hpp"
#include "qm/phi.hpp"
#include "qm/psi.hpp"

namespace qm {

Tableau3::Tableau3(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  if (rows_.size() > 3) throw Error(ErrorKind::BadTableau);
  std::size_t n = 0;
  for (const auto& row : rows_) {
    if (row.empty()) throw Error(ErrorKind::BadTableau);
    n += row.size();
  }
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) throw Error(ErrorKind::BadTableau);
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int e = rows_[r][c];
      if (e < 1 || e > static_cast<int>(n) || seen[e - 1])
        throw Error(ErrorKind::BadTableau);
      seen[e - 1] = true;
      if (c > 0 && rows_[r][c - 1] >= e) throw Error(ErrorKind::BadTableau);
      if (r > 0 && rows_[r - 1][c] >= e) throw Error(ErrorKind::BadTableau);
    }
  }
}

std::size_t Tableau3::entries() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Tableau3 walk_to_tableau(const QuarterPlaneWalk& walk) {
  std::vector<std::vector<int>> rows(3);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    switch (walk.steps()[i]) {
      case WalkStep::U: rows[0].push_back(static_cast<int>(i + 1)); break;
      case WalkStep::A: rows[1].push_back(static_cast<int>(i + 1)); break;
      case WalkStep::L: rows[2].push_back(static_cast<int>(i + 1)); break;
      default: throw Error(ErrorKind::NotYWalk, {i + 1});
    }
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return Tableau3(std::move(rows));
}

QuarterPlaneWalk tableau_to_walk(const Tableau3& tableau) {
  static constexpr WalkStep row_step[3] = {WalkStep::U, WalkStep::A, WalkStep::L};
  std::vector<WalkStep> steps(tableau.entries());
  for (std::size_t r = 0; r < tableau.rows().size(); ++r)
    for (int e : tableau.rows()[r]) steps[e - 1] = row_step[r];
  return QuarterPlaneWalk(std::move(steps));
}

Tableau3 motzkin_to_tableau(const MotzkinPath& path) {
  std::vector<BicolouredPath::Step> red;
  red.reserve(path.size());
  for (const auto& s : path.steps()) red.push_back({s.kind, Colour::Red});
  UnmapResult walk = g_unmap(psi(BicolouredPath(std::move(red))));
  return walk_to_tableau(QuarterPlaneWalk(std::move(walk.steps)));
}

MotzkinPath tableau_to_motzkin(const Tableau3& tableau) {
  MarkedBicolouredPath image = phi(tableau_to_walk(tableau));
  std::vector<MotzkinPath::Step> plain;
  plain.reserve(image.size());
  for (const auto& s : image.steps()) plain.push_back({s.kind, {}});
  return MotzkinPath(std::move(plain));
}

Tableau3 parse_tableau(std::string_view text) {
  std::vector<std::vector<int>> rows;
  if (!text.empty()) {
    std::size_t start = 0;
    for (;;) {
      std::size_t slash = text.find('/', start);
      std::string_view part = text.substr(
          start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
      std::vector<int> row;
      std::size_t at = 0;
      for (;;) {
        std::size_t comma = part.find(',', at);
        std::string_view cell = part.substr(
            at, comma == std::string_view::npos ? std::string_view::npos : comma - at);
        int value = 0;
        auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc{} || end != cell.data() + cell.size())
          throw Error(ErrorKind::BadTableau);
        row.push_back(value);
        if (comma == std::string_view::npos) break;
        at = comma + 1;
      }
      rows.push_back(std::move(row));
      if (slash == std::string_view::npos) break;
      start = slash + 1;
    }
  }
  return Tableau3(std::move(rows));
}

std::string format_tableau(const Tableau3& tableau) {
  std::string out;
  for (std::size_t r = 0; r < tableau.rows().size(); ++r) {
    if (r > 0) out += '/';
    for (std::size_t c = 0; c < tableau.rows()[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(tableau.rows()[r][c]);
    }
  }
  return out;
}

}  // namespace qm
