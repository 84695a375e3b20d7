#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qm/verify.hpp"

using namespace qm;

namespace {

constexpr std::uint64_t motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};

std::uint64_t s_count(std::size_t n) { return (std::uint64_t{1} << n) * motzkin[n]; }

}  // namespace

TEST_CASE("report_text layout is stable") {
  VerificationReport report;
  report.check_name = "bijection";
  report.length = 3;
  report.total = 32;
  report.passed = 32;
  report.failed = 0;
  report.elapsed_ms = 7;
  CHECK(report_text(report) ==
        "check_name: bijection\n"
        "length: 3\n"
        "total: 32\n"
        "passed: 32\n"
        "failed: 0\n"
        "first_failure: -\n"
        "elapsed_ms: 7\n");

  report.failed = 1;
  report.passed = 31;
  report.first_failure = "walk=RL assert=endpoint";
  CHECK(report_text(report) ==
        "check_name: bijection\n"
        "length: 3\n"
        "total: 32\n"
        "passed: 31\n"
        "failed: 1\n"
        "first_failure: walk=RL assert=endpoint\n"
        "elapsed_ms: 7\n");
}

TEST_CASE("report_json carries every field") {
  VerificationReport report;
  report.check_name = "shift";
  report.length = 2;
  report.total = 24;
  report.passed = 24;
  report.elapsed_ms = 3;

  auto j = nlohmann::json::parse(report_json(report));
  CHECK(j["check_name"] == "shift");
  CHECK(j["length"] == 2);
  CHECK(j["total"] == 24);
  CHECK(j["passed"] == 24);
  CHECK(j["failed"] == 0);
  CHECK(j["first_failure"].is_null());
  CHECK(j["elapsed_ms"] == 3);

  report.first_failure = "walk=RL split=1 assert=concatenation";
  j = nlohmann::json::parse(report_json(report));
  CHECK(j["first_failure"] == "walk=RL split=1 assert=concatenation");
}

TEST_CASE("bijection suite passes exhaustively") {
  for (std::size_t n = 0; n <= 5; ++n) {
    VerificationReport r = check_bijection_suite(n);
    CHECK(r.check_name == "bijection");
    CHECK(r.length == n);
    CHECK(r.total == s_count(n));
    CHECK(r.passed == r.total);
    CHECK(r.failed == 0);
    CHECK(!r.first_failure);
  }
}

TEST_CASE("shift property passes exhaustively") {
  for (std::size_t n = 0; n <= 4; ++n) {
    VerificationReport r = check_shift_property(n);
    CHECK(r.check_name == "shift");
    CHECK(r.total == s_count(n) * (n + 1));
    CHECK(r.failed == 0);
  }
}

TEST_CASE("restriction to the three-letter alphabet passes exhaustively") {
  for (std::size_t n = 0; n <= 5; ++n) {
    VerificationReport r = check_restriction(n);
    CHECK(r.check_name == "restriction");
    CHECK(r.total == s_count(n));
    CHECK(r.failed == 0);
  }
}

TEST_CASE("strip/triangle equinumerosity holds at small sizes") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (int h = 0; h <= 2; ++h) {
      VerificationReport r = check_mp_equinumerosity(n, h);
      CHECK(r.check_name == "mp-equinumerosity(H=" + std::to_string(h) + ")");
      CHECK(r.total == 2);
      CHECK(r.passed == 2);
      CHECK(r.failed == 0);
    }
  }
}

TEST_CASE("height counterexample search") {
  CHECK(!find_height_counterexample(0, 0));
  CHECK(!find_height_counterexample(1, 0));

  auto witness = find_height_counterexample(2, 0);
  REQUIRE(witness.has_value());
  CHECK(format_walk(witness->walk) == "RL");
  CHECK(witness->strip_height == 0);
  CHECK(witness->walk_max_total == 1);
  CHECK(witness->image_strip_height == 1);
  CHECK(witness_valid(*witness));
  CHECK(format_witness(*witness) == "walk=RL H=0 walk_max_total=1 image_strip_height=1");

  // The search is shortest-first, so a longer horizon finds the same walk.
  auto again = find_height_counterexample(5, 0);
  REQUIRE(again.has_value());
  CHECK(format_walk(again->walk) == "RL");

  HeightWitness tampered = *witness;
  tampered.strip_height = 1;
  CHECK(!witness_valid(tampered));
  tampered = *witness;
  tampered.image_strip_height = 2;
  CHECK(!witness_valid(tampered));
}

TEST_CASE("height property report counts candidates up to the witness") {
  VerificationReport r = check_height_property(2, 0);
  CHECK(r.check_name == "height-counterexample(H=0)");
  CHECK(r.length == 2);
  CHECK(r.total == 4);
  CHECK(r.passed == 3);
  CHECK(r.failed == 1);
  REQUIRE(r.first_failure.has_value());
  CHECK(*r.first_failure == "walk=RL H=0 walk_max_total=1 image_strip_height=1");

  VerificationReport clean = check_height_property(1, 0);
  CHECK(clean.total == 3);
  CHECK(clean.passed == 3);
  CHECK(clean.failed == 0);
  CHECK(!clean.first_failure);
}
