#include <variant>

#include "doctest.h"
#include "oracles.hpp"
#include "qm/enumerate.hpp"
#include "qm/phi.hpp"
#include "qm/psi.hpp"

using namespace qm;

namespace {

std::string mark_text(const std::string& path) {
  return format_path(psi(parse_path<Colour>(path)));
}

void for_each_m2(std::size_t n, const std::function<void(const BicolouredPath&)>& fn) {
  ClassSpec spec;
  spec.family = Family::BicolouredMotzkin;
  spec.length = n;
  for_each_in_class(spec,
                    [&](const ClassObject& o) { fn(std::get<BicolouredPath>(o)); });
}

}  // namespace

TEST_CASE("psi on hand-worked paths") {
  CHECK(mark_text("") == "");
  CHECK(mark_text("fr") == "fr*");
  CHECK(mark_text("fb") == "fb*");
  CHECK(mark_text("urdr") == "ur.dr*");
  CHECK(mark_text("urdb") == "ur.db.");
  CHECK(mark_text("frfb") == "fr*fb*");
  CHECK(mark_text("ubdr") == "ub.dr.");
  CHECK(mark_text("urfrdr") == "ur.fr.dr.");
}

TEST_CASE("forget_marks is a projection") {
  CHECK(format_path(forget_marks(parse_path<ColourMark>(""))) == "");
  CHECK(format_path(forget_marks(parse_path<ColourMark>("fr*fb*"))) == "frfb");
  CHECK(format_path(forget_marks(parse_path<ColourMark>("ur.dr*"))) == "urdr");
}

TEST_CASE("psi undoes forgetting on every image, and forgetting undoes psi") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_m2(n, [&](const BicolouredPath& s) {
      MarkedBicolouredPath marked = psi(s);
      REQUIRE(forget_marks(marked) == s);
      for (const auto& step : marked.steps())
        REQUIRE((step.kind != MotzkinKind::Up || step.deco.mark == Mark::Unmarked));
      REQUIRE(phi_image_contains(marked));
    });
  }
}

TEST_CASE("psi lands exactly on phi of the read-off walk") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_m2(n, [&](const BicolouredPath& s) {
      MarkedBicolouredPath marked = psi(s);
      UnmapResult walk = g_unmap(marked);
      REQUIRE(walk.quarterplane_valid);
      REQUIRE(phi(QuarterPlaneWalk(walk.steps)) == marked);
    });
  }
}

TEST_CASE("stack psi agrees with the rescan oracle") {
  for (std::size_t n = 0; n <= 6; ++n) {
    for_each_m2(n, [&](const BicolouredPath& s) {
      auto expected = oracle::naive_psi(s);
      REQUIRE(expected.has_value());
      REQUIRE(psi(s) == *expected);
    });
  }
}
