#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qm {

enum class ErrorKind {
  BadChar,
  LeavesQuadrant,
  BadToken,
  NotMotzkin,
  NoMatchableStep,
  MarkedUpStep,
  UnassignedResidue,
  NotYWalk,
  BadTableau,
  SpecMismatch,
  Overflow,
  Network,
};

// Domain error. what() is frozen as "Kind(args)" where args are the 1-based
// offending positions or a short detail string, e.g. "LeavesQuadrant(2)".
class Error : public std::runtime_error {
 public:
  explicit Error(ErrorKind kind, std::vector<std::size_t> positions = {},
                 std::string detail = {});

  ErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& positions() const { return positions_; }
  // First offending position, 1-based; 0 when the error carries none.
  std::size_t position() const { return positions_.empty() ? 0 : positions_.front(); }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> positions_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace qm
