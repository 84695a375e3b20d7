#include <algorithm>
#include <set>
#include <variant>

#include "doctest.h"
#include "qm/enumerate.hpp"
#include "qm/error.hpp"
#include "qm/tableaux.hpp"

using namespace qm;

namespace {

void for_each_ywalk(std::size_t n, const std::function<void(const QuarterPlaneWalk&)>& fn) {
  ClassSpec spec;
  spec.family = Family::YWalks;
  spec.length = n;
  for_each_in_class(spec,
                    [&](const ClassObject& o) { fn(std::get<QuarterPlaneWalk>(o)); });
}

void for_each_motzkin(std::size_t n, const std::function<void(const MotzkinPath&)>& fn) {
  ClassSpec spec;
  spec.family = Family::Motzkin;
  spec.length = n;
  for_each_in_class(spec, [&](const ClassObject& o) { fn(std::get<MotzkinPath>(o)); });
}

// Brute-force enumeration of <=3-row standard Young tableaux: place entries
// 1..n in increasing order, each appended to a row strictly shorter than the
// row above it. Rows increase because entries arrive in order, columns
// because the cell above was filled first.
void collect_syt(int n, int next, std::vector<std::vector<int>>& rows,
                 std::vector<std::vector<std::vector<int>>>& out) {
  if (next > n) {
    std::vector<std::vector<int>> shape;
    for (const auto& row : rows)
      if (!row.empty()) shape.push_back(row);
    out.push_back(std::move(shape));
    return;
  }
  for (int r = 0; r < 3; ++r) {
    if (r > 0 && rows[r].size() >= rows[r - 1].size()) continue;
    rows[r].push_back(next);
    collect_syt(n, next + 1, rows, out);
    rows[r].pop_back();
  }
}

std::vector<std::vector<std::vector<int>>> all_syt(int n) {
  std::vector<std::vector<int>> rows(3);
  std::vector<std::vector<std::vector<int>>> out;
  collect_syt(n, 1, rows, out);
  return out;
}

std::size_t motzkin_count(std::size_t n) {
  ClassSpec spec;
  spec.family = Family::Motzkin;
  spec.length = n;
  return static_cast<std::size_t>(count_class(spec));
}

}  // namespace

TEST_CASE("walk_to_tableau on hand-worked walks") {
  CHECK(format_tableau(walk_to_tableau(parse_walk(""))) == "");
  CHECK(format_tableau(walk_to_tableau(parse_walk("U"))) == "1");
  CHECK(format_tableau(walk_to_tableau(parse_walk("UU"))) == "1,2");
  CHECK(format_tableau(walk_to_tableau(parse_walk("UAL"))) == "1/2/3");
  CHECK(format_tableau(walk_to_tableau(parse_walk("UAU"))) == "1,3/2");
  CHECK(format_tableau(walk_to_tableau(parse_walk("UUAAL"))) == "1,2/3,4/5");
}

TEST_CASE("tableau_to_walk on hand-worked tableaux") {
  CHECK(format_walk(tableau_to_walk(parse_tableau(""))) == "");
  CHECK(format_walk(tableau_to_walk(parse_tableau("1,3/2"))) == "UAU");
  CHECK(format_walk(tableau_to_walk(parse_tableau("1/2/3"))) == "UAL");
  CHECK(format_walk(tableau_to_walk(parse_tableau("1,2,3"))) == "UUU");
}

TEST_CASE("walk_to_tableau rejects steps outside the three-letter alphabet") {
  CHECK_THROWS_AS(walk_to_tableau(parse_walk("R")), Error);
  try {
    walk_to_tableau(parse_walk("UR"));
    FAIL("expected NotYWalk");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotYWalk);
    CHECK(e.position() == 2);
    CHECK(std::string(e.what()) == "NotYWalk(2)");
  }
  try {
    walk_to_tableau(parse_walk("UUD"));
    FAIL("expected NotYWalk");
  } catch (const Error& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("Tableau3 validation") {
  CHECK_NOTHROW(Tableau3({{1, 3}, {2}}));
  CHECK_NOTHROW(Tableau3({{1, 2, 5}, {3, 4}}));

  auto rejects = [](std::vector<std::vector<int>> rows) {
    try {
      Tableau3 t(std::move(rows));
      return false;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadTableau);
      CHECK(std::string(e.what()) == "BadTableau");
      return true;
    }
  };
  CHECK(rejects({{1}, {2}, {3}, {4}}));   // four rows
  CHECK(rejects({{1, 2}, {}}));           // empty row
  CHECK(rejects({{1, 1}}));               // duplicate entry
  CHECK(rejects({{1, 3}}));               // entries not 1..n
  CHECK(rejects({{0, 1}}));               // entry below 1
  CHECK(rejects({{1}, {2, 3}}));          // row lengths increase
  CHECK(rejects({{2, 1}}));               // row not increasing
  CHECK(rejects({{2, 3}, {1}}));          // column not increasing
}

TEST_CASE("parse_tableau rejects malformed text") {
  auto rejects = [](std::string_view text) {
    try {
      parse_tableau(text);
      return false;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadTableau);
      return true;
    }
  };
  CHECK(rejects("1,a/2"));
  CHECK(rejects("x"));
  CHECK(rejects("1,/2"));
  CHECK(rejects("1,2/"));
  CHECK(rejects("1 2"));
  CHECK(rejects("-1"));
  CHECK(rejects("1/2/3/4"));  // parses, but has four rows
}

TEST_CASE("motzkin_to_tableau on hand-worked paths") {
  CHECK(format_tableau(motzkin_to_tableau(parse_path<Plain>(""))) == "");
  CHECK(format_tableau(motzkin_to_tableau(parse_path<Plain>("f"))) == "1");
  CHECK(format_tableau(motzkin_to_tableau(parse_path<Plain>("ud"))) == "1/2");
  CHECK(format_tableau(motzkin_to_tableau(parse_path<Plain>("ff"))) == "1,2");
}

TEST_CASE("tableau_to_motzkin on hand-worked tableaux") {
  CHECK(format_path(tableau_to_motzkin(parse_tableau(""))) == "");
  CHECK(format_path(tableau_to_motzkin(parse_tableau("1"))) == "f");
  CHECK(format_path(tableau_to_motzkin(parse_tableau("1/2"))) == "ud");
  CHECK(format_path(tableau_to_motzkin(parse_tableau("1,2"))) == "ff");
}

TEST_CASE("walk_to_tableau is a bijection onto <=3-row tableaux") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::set<std::string> seen;
    for_each_ywalk(n, [&](const QuarterPlaneWalk& w) {
      Tableau3 t = walk_to_tableau(w);
      CHECK(t.entries() == n);
      CHECK(t.rows().size() <= 3);
      CHECK(tableau_to_walk(t) == w);
      seen.insert(format_tableau(t));
    });

    std::set<std::string> expected;
    for (const auto& rows : all_syt(static_cast<int>(n))) {
      Tableau3 t(rows);  // every brute-forced tableau must validate
      expected.insert(format_tableau(t));
    }
    CHECK(seen == expected);
    CHECK(seen.size() == motzkin_count(n));
  }
}

TEST_CASE("motzkin_to_tableau is a bijection with inverse tableau_to_motzkin") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::set<std::string> from_paths;
    for_each_motzkin(n, [&](const MotzkinPath& m) {
      Tableau3 t = motzkin_to_tableau(m);
      CHECK(t.entries() == n);
      CHECK(tableau_to_motzkin(t) == m);
      from_paths.insert(format_tableau(t));
    });
    CHECK(from_paths.size() == motzkin_count(n));

    std::set<std::string> from_walks;
    for_each_ywalk(n, [&](const QuarterPlaneWalk& w) {
      from_walks.insert(format_tableau(walk_to_tableau(w)));
    });
    CHECK(from_paths == from_walks);
  }
}

TEST_CASE("tableau text form round-trips") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_ywalk(n, [&](const QuarterPlaneWalk& w) {
      Tableau3 t = walk_to_tableau(w);
      CHECK(parse_tableau(format_tableau(t)) == t);
    });
  }
}
