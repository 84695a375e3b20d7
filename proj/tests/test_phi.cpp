#include <variant>

#include "doctest.h"
#include "oracles.hpp"
#include "qm/enumerate.hpp"
#include "qm/error.hpp"
#include "qm/phi.hpp"

using namespace qm;

namespace {

std::string map_text(const std::string& walk) { return format_path(phi(parse_walk(walk))); }

void for_each_swalk(std::size_t n, const std::function<void(const QuarterPlaneWalk&)>& fn) {
  ClassSpec spec;
  spec.family = Family::SWalks;
  spec.length = n;
  for_each_in_class(spec,
                    [&](const ClassObject& o) { fn(std::get<QuarterPlaneWalk>(o)); });
}

}  // namespace

TEST_CASE("phi on hand-worked walks") {
  CHECK(map_text("") == "");
  CHECK(map_text("U") == "fr*");
  CHECK(map_text("R") == "fb*");
  CHECK(map_text("UA") == "ur.dr*");
  CHECK(map_text("RL") == "ub.dr.");
  CHECK(map_text("UAL") == "ur.fr.dr.");
  CHECK(map_text("UU") == "fr*fr*");
  CHECK(map_text("UD") == "ur.db.");
  CHECK(map_text("RB") == "ub.db*");
}

TEST_CASE("phi preserves length and never marks an up step") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_swalk(n, [&](const QuarterPlaneWalk& w) {
      MarkedBicolouredPath p = phi(w);
      REQUIRE(p.size() == n);
      for (const auto& s : p.steps())
        REQUIRE((s.kind != MotzkinKind::Up || s.deco.mark == Mark::Unmarked));
    });
  }
}

TEST_CASE("marked step counts give the endpoint") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_swalk(n, [&](const QuarterPlaneWalk& w) {
      MarkedBicolouredPath p = phi(w);
      int x = 0, y = 0;
      for (const auto& s : p.steps()) {
        if (s.deco.mark != Mark::Marked) continue;
        bool red = s.deco.colour == Colour::Red;
        if (s.kind == MotzkinKind::Down) (red ? x : y) += 1;
        if (s.kind == MotzkinKind::Flat) (red ? y : x) += 1;
      }
      REQUIRE(w.endpoint() == Point{x, y});
    });
  }
}

TEST_CASE("g_unmap inverts phi step by step") {
  CHECK(g_unmap(parse_path<ColourMark>("ur.dr*")).steps ==
        std::vector{WalkStep::U, WalkStep::A});
  CHECK(g_unmap(parse_path<ColourMark>("ur.dr*")).quarterplane_valid);
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_swalk(n, [&](const QuarterPlaneWalk& w) {
      UnmapResult back = g_unmap(phi(w));
      REQUIRE(back.quarterplane_valid);
      REQUIRE(back.steps == w.steps());
    });
  }
}

TEST_CASE("g_unmap flags step lists that leave the quadrant") {
  UnmapResult r = g_unmap(parse_path<ColourMark>("fr.fb."));  // reads off A then B
  CHECK(r.steps == std::vector{WalkStep::A, WalkStep::B});
  CHECK_FALSE(r.quarterplane_valid);
}

TEST_CASE("g_unmap rejects marked up steps") {
  CHECK_THROWS_WITH_AS(g_unmap(MarkedBicolouredPath(
                           {{MotzkinKind::Up, {Colour::Red, Mark::Marked}},
                            {MotzkinKind::Down, {Colour::Red, Mark::Marked}}})),
                       "MarkedUpStep(1)", Error);
}

TEST_CASE("phi image membership is decided by re-marking") {
  CHECK(phi_image_contains(phi(parse_walk("UAL"))));
  CHECK(phi_image_contains(phi(parse_walk("RRBB"))));
  CHECK_FALSE(phi_image_contains(parse_path<ColourMark>("fr.")));
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_swalk(n, [&](const QuarterPlaneWalk& w) {
      REQUIRE(phi_image_contains(phi(w)));
    });
  }
}

TEST_CASE("stack phi agrees with the rescan oracle") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_swalk(n, [&](const QuarterPlaneWalk& w) {
      auto expected = oracle::naive_phi(w);
      REQUIRE(expected.has_value());
      REQUIRE(phi(w) == *expected);
    });
  }
}
