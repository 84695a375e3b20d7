#include "qm/error.hpp"

namespace qm {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadChar: return "BadChar";
    case ErrorKind::LeavesQuadrant: return "LeavesQuadrant";
    case ErrorKind::BadToken: return "BadToken";
    case ErrorKind::NotMotzkin: return "NotMotzkin";
    case ErrorKind::NoMatchableStep: return "NoMatchableStep";
    case ErrorKind::MarkedUpStep: return "MarkedUpStep";
    case ErrorKind::UnassignedResidue: return "UnassignedResidue";
    case ErrorKind::NotYWalk: return "NotYWalk";
    case ErrorKind::BadTableau: return "BadTableau";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Network: return "Network";
  }
  return "Error";
}

namespace {

std::string build_message(ErrorKind kind, const std::vector<std::size_t>& positions,
                          const std::string& detail) {
  std::string msg = error_kind_name(kind);
  if (!detail.empty()) {
    msg += '(' + detail + ')';
  } else if (!positions.empty()) {
    msg += '(';
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (i > 0) msg += ',';
      msg += std::to_string(positions[i]);
    }
    msg += ')';
  }
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, std::vector<std::size_t> positions, std::string detail)
    : std::runtime_error(build_message(kind, positions, detail)),
      kind_(kind),
      positions_(std::move(positions)) {}

}  // namespace qm
