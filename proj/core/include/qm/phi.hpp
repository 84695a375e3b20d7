#pragma once

#include <vector>

#include "qm/path.hpp"
#include "qm/steps.hpp"
#include "qm/walk.hpp"

namespace qm {

// Length-preserving map from quarter-plane walks to marked bicoloured
// Motzkin paths. U and R append a marked flat (red resp. black); the other
// four steps lift the rightmost matching marked step — flat to up, down to
// flat, mark dropped — and append a down step:
//
//   A lifts a marked {red flat | black down}, appends a marked red down.
//   B lifts a marked {black flat | red down}, appends a marked black down.
//   L lifts like B but appends an unmarked red down.
//   D lifts like A but appends an unmarked black down.
//
// At any prefix the liftable steps for A/D number y and those for B/L
// number x, (x, y) the walk's current position, so a matching step always
// exists; the map never fails on a quadrant-confined walk.
MarkedBicolouredPath phi(const QuarterPlaneWalk& walk);

struct UnmapResult {
  std::vector<WalkStep> steps;
  // Whether those steps stay in the quarter plane. Callers that need a
  // walk object should construct one only when this is true.
  bool quarterplane_valid = false;
};

// Step-by-step left inverse of phi. Position i of the path decides walk
// letter i from the step's final state (lifting turns marked flats into
// unmarked ups and marked downs into unmarked flats):
//
//         up      marked flat   unmarked flat   marked down   unmarked down
//   red   U       U             A               A             L
//   black R       R             B               B             D
//
// Total except on marked up steps, which no phi image contains:
// throws Error{MarkedUpStep, position}.
UnmapResult g_unmap(const MarkedBicolouredPath& path);

// True iff the path is the phi image of some quarter-plane walk.
bool phi_image_contains(const MarkedBicolouredPath& path);

}  // namespace qm
