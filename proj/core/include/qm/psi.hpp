#pragma once

#include "qm/path.hpp"

namespace qm {

// Drop the marks, keep kinds and colours.
BicolouredPath forget_marks(const MarkedBicolouredPath& path);

// Canonical marking of a bicoloured Motzkin path: the unique marking of s
// that phi can produce, so psi inverts forget_marks on the image of phi.
//
// Scans left to right with two stacks of still-unassigned positions,
// P = {red up, black flat} and Q = {black up, red flat}. Up steps wait on
// their stack. A flat pops the rightmost waiter of the other-colour stack
// (P for red flats, Q for black): the waiter becomes unmarked and the flat
// itself starts waiting; with no waiter the flat is marked. A down pops Q
// first if red, P first if black: on the preferred stack both steps come
// out unmarked, on the other the waiter is unmarked and the down marked.
//
// Steps still unassigned at the end mean the input was not a Motzkin path
// (impossible past BicolouredPath validation):
// Error{UnassignedResidue, positions}.
MarkedBicolouredPath psi(const BicolouredPath& path);

}  // namespace qm
