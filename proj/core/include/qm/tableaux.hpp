#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qm/path.hpp"
#include "qm/walk.hpp"

namespace qm {

// A standard Young tableau with at most 3 rows: entries are exactly 1..n,
// rows and columns strictly increase, row lengths weakly decrease.
// Validated eagerly; throws Error{BadTableau}.
class Tableau3 {
 public:
  Tableau3() = default;
  explicit Tableau3(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::size_t entries() const;

  friend bool operator==(const Tableau3&, const Tableau3&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Entry i goes to row 1/2/3 according as step i is U/A/L. The standard
// Young property is exactly the quarter-plane condition, so the result is
// always valid. Throws Error{NotYWalk, position} on R, D or B.
Tableau3 walk_to_tableau(const QuarterPlaneWalk& walk);

// Inverse of walk_to_tableau: the Yamanouchi word of the tableau, read as
// a walk over {U, A, L}.
QuarterPlaneWalk tableau_to_walk(const Tableau3& tableau);

// Colour the path red, mark it with psi, read the walk off with g_unmap,
// then place entries with walk_to_tableau.
Tableau3 motzkin_to_tableau(const MotzkinPath& path);

// Inverse of motzkin_to_tableau: walk to path, colours and marks dropped.
MotzkinPath tableau_to_motzkin(const Tableau3& tableau);

// Text form: rows joined by '/', entries by ','; "1,3/2" is [[1,3],[2]].
// The empty tableau is the empty string. Throws Error{BadTableau}.
Tableau3 parse_tableau(std::string_view text);
std::string format_tableau(const Tableau3& tableau);

}  // namespace qm
