#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qm {

struct SequenceMatch {
  std::string id;
  std::string name;
};

// Snapshot rows are `identifier<TAB>name<TAB>t0,t1,...`; '#' lines and
// blank lines are skipped. A query matches a row when the two agree on
// their first min(length) terms and at least four terms were compared.
std::vector<SequenceMatch> snapshot_lookup(std::string_view snapshot_text,
                                           std::span<const long long> terms);

// GET https://oeis.org/search?q=<comma-joined terms>&fmt=json, reading the
// identifier and name of each result. Throws Error{Network} when the
// endpoint cannot be reached or answers badly.
std::vector<SequenceMatch> oeis_lookup_online(std::span<const long long> terms);

}  // namespace qm
