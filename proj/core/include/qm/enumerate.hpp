#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qm/path.hpp"
#include "qm/walk.hpp"

namespace qm {

enum class Family {
  YWalks,
  SWalks,
  Motzkin,
  BicolouredMotzkin,
  MarkedBicolouredMotzkin,
};

constexpr bool is_walk_family(Family f) {
  return f == Family::YWalks || f == Family::SWalks;
}

// Kebab-case name used by the CLI and corpus headers ("s-walks", ...).
const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// A class of objects to enumerate or count. Bounds are family-specific:
// triangle_bound c keeps walks inside x+y <= c, strip_height H keeps paths
// inside height <= H, and forbid_flat_at_top additionally bans flat steps
// at height H (it needs strip_height). The two filters apply to both kinds
// of family; for walks, no_interior_return is read off the phi image.
struct ClassSpec {
  Family family = Family::SWalks;
  std::size_t length = 0;
  std::optional<int> triangle_bound;
  std::optional<int> strip_height;
  bool forbid_flat_at_top = false;
  bool begins_with_up = false;
  bool no_interior_return = false;
};

// Throws Error{SpecMismatch} when a bound does not fit the family
// (including negative bounds and forbid_flat_at_top without a strip).
void validate(const ClassSpec& spec);

using ClassObject =
    std::variant<QuarterPlaneWalk, MotzkinPath, BicolouredPath, MarkedBicolouredPath>;

std::string format_object(const ClassObject& obj);

// Visit every object of the class exactly once, in the frozen enumeration
// order: walk steps R < A < D < L < B < U, path steps by kind u < f < d,
// then colour r < b, then mark * < '.'. Throws SpecMismatch as validate.
void for_each_in_class(const ClassSpec& spec,
                       const std::function<void(const ClassObject&)>& fn);

std::vector<ClassObject> enumerate_class(const ClassSpec& spec);

// Cardinality of the class without materializing objects. Checked 64-bit:
// throws Error{Overflow} should a count ever exceed the range.
std::uint64_t count_class(const ClassSpec& spec);

// Same total as count_class, computed by partitioning the search on every
// valid prefix of length prefix_depth and merging per-prefix subtotals in
// prefix order. The result is independent of thread count.
std::uint64_t count_class_sharded(const ClassSpec& spec, std::size_t prefix_depth,
                                  std::size_t threads);

// One '#' header line recording the spec, then one object per line.
void write_corpus(const ClassSpec& spec, std::ostream& out);

// The header line written by write_corpus, without the trailing newline.
std::string corpus_header(const ClassSpec& spec);

}  // namespace qm
