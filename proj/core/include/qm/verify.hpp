#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qm/walk.hpp"

namespace qm {

// Outcome of one exhaustive check. passed + failed = total and
// first_failure is present iff failed > 0. Identical inputs give identical
// reports except for elapsed_ms.
struct VerificationReport {
  std::string check_name;
  std::size_t length = 0;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::optional<std::string> first_failure;
  std::int64_t elapsed_ms = 0;
};

// Line-oriented "key: value" block, one field per line, first_failure
// printed as '-' when absent.
std::string report_text(const VerificationReport& report);
std::string report_json(const VerificationReport& report);

// For every walk w of length n: phi(w) has length n, no marked up step,
// the marked-step counts give the endpoint, g_unmap inverts, and re-marking
// the forgotten image reproduces phi(w); globally the forgotten images are
// pairwise distinct and exactly fill the bicoloured Motzkin class.
// check_name "bijection", total = |S_n|.
VerificationReport check_bijection_suite(std::size_t n);

// For every walk w of length n and split index 0 <= i <= n: the suffix
// w[i..] is a quarter-plane walk iff phi(w) returns to height 0 at i, and
// at every such i phi(w) is phi(prefix) followed by phi(suffix).
// check_name "shift", total = |S_n| * (n+1).
VerificationReport check_shift_property(std::size_t n);

// For every walk w of length n: w uses only {U, A, L} iff every step of
// phi(w) is red. check_name "restriction", total = |S_n|.
VerificationReport check_restriction(std::size_t n);

// The two strip/triangle counting identities at (n, H):
//   |S-walks, x+y <= 2H+1|  = |bicoloured Motzkin, height <= H|
//   |S-walks, x+y <= 2H|    = |bicoloured Motzkin, height <= H, no flat at H|
// check_name "mp-equinumerosity(H=<H>)", total = 2.
VerificationReport check_mp_equinumerosity(std::size_t n, int strip_height);

// A walk whose own height stays within the triangle for H but whose phi
// image leaves the strip of height H.
struct HeightWitness {
  QuarterPlaneWalk walk;
  int strip_height = 0;       // the H it defeats
  int walk_max_total = 0;     // max of x+y along the walk, <= 2H+1
  int image_strip_height = 0; // max height of phi(walk), > H
};

std::string format_witness(const HeightWitness& witness);
// Recomputes both heights through phi and checks the two inequalities.
bool witness_valid(const HeightWitness& witness);

// The shortest, then lexicographically first, walk of length <= n_max with
// max(x+y) <= 2H+1 whose image exceeds height H; absent if none exists.
std::optional<HeightWitness> find_height_counterexample(std::size_t n_max,
                                                        int strip_height);

// Report wrapper around the search: walks examined up to and including the
// witness; the witness lands in first_failure, so a found witness means
// failed = 1. check_name "height-counterexample(H=<H>)", length = n_max.
VerificationReport check_height_property(std::size_t n_max, int strip_height);

}  // namespace qm
