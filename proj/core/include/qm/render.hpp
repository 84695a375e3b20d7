#pragma once

#include <string>

#include "qm/path.hpp"
#include "qm/walk.hpp"

namespace qm {

// Deterministic ASCII figures; every line ends in '\n', trailing blanks
// stripped, the empty object renders as the empty string.
//
// Paths sit on a height grid, one text row per height from the top down:
// '/' on the row it rises to, '\' on the row it falls from, '-' on its own
// row. Coloured paths get one annotation line of per-step tokens under the
// grid ("r"/"b", with "*"/"." appended for marked paths); marked paths use
// two-column cells so tokens stay under their step.
std::string render_path(const MotzkinPath& path);
std::string render_path(const BicolouredPath& path);
std::string render_path(const MarkedBicolouredPath& path);

// Walks sit on the visited coordinate grid, row y = max down to 0, cells
// space-separated: 'S' start, 'E' end, 'B' both, 'o' visited, '.' not.
std::string render_walk(const QuarterPlaneWalk& walk);

}  // namespace qm
