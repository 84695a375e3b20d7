#include "qm/verify.hpp"

#include <chrono>
#include <unordered_set>

#include "json.hpp"

#include "qm/enumerate.hpp"
#include "qm/error.hpp"
#include "qm/phi.hpp"
#include "qm/psi.hpp"

namespace qm {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
      .count();
}

// Runs body(record) where record(ok, witness) tallies one object, then
// fills in the timing. Keeps every check's bookkeeping identical.
template <class Body>
VerificationReport run_check(std::string name, std::size_t length, Body body) {
  VerificationReport report;
  report.check_name = std::move(name);
  report.length = length;
  auto start = Clock::now();
  auto record = [&report](bool ok, const std::function<std::string()>& witness) {
    ++report.total;
    if (ok) {
      ++report.passed;
    } else {
      ++report.failed;
      if (!report.first_failure) report.first_failure = witness();
    }
  };
  body(record);
  report.elapsed_ms = ms_since(start);
  return report;
}

bool endpoint_formula_holds(const QuarterPlaneWalk& walk,
                            const MarkedBicolouredPath& image) {
  int marked_red_down = 0, marked_black_flat = 0;
  int marked_red_flat = 0, marked_black_down = 0;
  for (const auto& s : image.steps()) {
    if (s.deco.mark != Mark::Marked) continue;
    bool red = s.deco.colour == Colour::Red;
    if (s.kind == MotzkinKind::Down) ++(red ? marked_red_down : marked_black_down);
    if (s.kind == MotzkinKind::Flat) ++(red ? marked_red_flat : marked_black_flat);
  }
  Point end = walk.endpoint();
  return marked_red_down + marked_black_flat == end.x &&
         marked_red_flat + marked_black_down == end.y;
}

void for_each_walk(std::size_t n, const std::function<void(const QuarterPlaneWalk&)>& fn) {
  ClassSpec spec;
  spec.family = Family::SWalks;
  spec.length = n;
  for_each_in_class(spec,
                    [&](const ClassObject& obj) { fn(std::get<QuarterPlaneWalk>(obj)); });
}

}  // namespace

std::string report_text(const VerificationReport& report) {
  std::string out;
  out += "check_name: " + report.check_name + '\n';
  out += "length: " + std::to_string(report.length) + '\n';
  out += "total: " + std::to_string(report.total) + '\n';
  out += "passed: " + std::to_string(report.passed) + '\n';
  out += "failed: " + std::to_string(report.failed) + '\n';
  out += "first_failure: " + report.first_failure.value_or("-") + '\n';
  out += "elapsed_ms: " + std::to_string(report.elapsed_ms) + '\n';
  return out;
}

std::string report_json(const VerificationReport& report) {
  nlohmann::json j{
      {"check_name", report.check_name}, {"length", report.length},
      {"total", report.total},           {"passed", report.passed},
      {"failed", report.failed},         {"elapsed_ms", report.elapsed_ms},
  };
  j["first_failure"] =
      report.first_failure ? nlohmann::json(*report.first_failure) : nlohmann::json();
  return j.dump();
}

VerificationReport check_bijection_suite(std::size_t n) {
  return run_check("bijection", n, [&](auto& record) {
    std::unordered_set<std::string> forgotten_images;
    for_each_walk(n, [&](const QuarterPlaneWalk& walk) {
      const char* broken = nullptr;
      MarkedBicolouredPath image = phi(walk);
      BicolouredPath forgotten = forget_marks(image);
      if (image.size() != walk.size()) broken = "length";
      for (const auto& s : image.steps())
        if (s.kind == MotzkinKind::Up && s.deco.mark == Mark::Marked)
          broken = "marked-up-step";
      if (!broken && !endpoint_formula_holds(walk, image)) broken = "endpoint";
      if (!broken) {
        UnmapResult back = g_unmap(image);
        if (!back.quarterplane_valid || back.steps != walk.steps()) broken = "g-inverse";
      }
      if (!broken && psi(forgotten) != image) broken = "re-marking";
      if (!broken && !forgotten_images.insert(format_path(forgotten)).second)
        broken = "forgotten-image-collision";
      record(broken == nullptr, [&] {
        return "walk=" + format_walk(walk) + " assert=" + broken;
      });
    });
    ClassSpec m2;
    m2.family = Family::BicolouredMotzkin;
    m2.length = n;
    std::uint64_t m2_count = count_class(m2);
    if (forgotten_images.size() != m2_count)
      record(false, [&] {
        return "image-count=" + std::to_string(forgotten_images.size()) +
               " m2-count=" + std::to_string(m2_count);
      });
  });
}

VerificationReport check_shift_property(std::size_t n) {
  return run_check("shift", n, [&](auto& record) {
    for_each_walk(n, [&](const QuarterPlaneWalk& walk) {
      MarkedBicolouredPath image = phi(walk);
      std::vector<int> heights = image.heights();
      const auto& steps = walk.steps();
      for (std::size_t i = 0; i <= n; ++i) {
        std::span<const WalkStep> suffix(steps.data() + i, n - i);
        bool suffix_in_s = quadrant_valid(suffix);
        bool returns_to_zero = i == 0 || heights[i - 1] == 0;
        const char* broken = nullptr;
        if (suffix_in_s != returns_to_zero) {
          broken = "biconditional";
        } else if (suffix_in_s) {
          MarkedBicolouredPath front = phi(
              QuarterPlaneWalk(std::vector<WalkStep>(steps.begin(), steps.begin() + i)));
          MarkedBicolouredPath back = phi(
              QuarterPlaneWalk(std::vector<WalkStep>(steps.begin() + i, steps.end())));
          std::vector<MarkedBicolouredPath::Step> glued = front.steps();
          glued.insert(glued.end(), back.steps().begin(), back.steps().end());
          if (MarkedBicolouredPath(glued) != image) broken = "concatenation";
        }
        record(broken == nullptr, [&] {
          return "walk=" + format_walk(walk) + " split=" + std::to_string(i) +
                 " assert=" + broken;
        });
      }
    });
  });
}

VerificationReport check_restriction(std::size_t n) {
  return run_check("restriction", n, [&](auto& record) {
    for_each_walk(n, [&](const QuarterPlaneWalk& walk) {
      MarkedBicolouredPath image = phi(walk);
      bool all_red = true;
      for (const auto& s : image.steps())
        if (s.deco.colour != Colour::Red) all_red = false;
      record(all_red == walk.uses_only_y_steps(),
             [&] { return "walk=" + format_walk(walk); });
    });
  });
}

VerificationReport check_mp_equinumerosity(std::size_t n, int strip_height) {
  std::string name = "mp-equinumerosity(H=" + std::to_string(strip_height) + ")";
  return run_check(std::move(name), n, [&](auto& record) {
    ClassSpec walks;
    walks.family = Family::SWalks;
    walks.length = n;
    ClassSpec paths;
    paths.family = Family::BicolouredMotzkin;
    paths.length = n;
    paths.strip_height = strip_height;

    walks.triangle_bound = 2 * strip_height + 1;
    std::uint64_t lhs = count_class(walks);
    std::uint64_t rhs = count_class(paths);
    record(lhs == rhs, [&] {
      return "identity=1 lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
    });

    walks.triangle_bound = 2 * strip_height;
    paths.forbid_flat_at_top = true;
    lhs = count_class(walks);
    rhs = count_class(paths);
    record(lhs == rhs, [&] {
      return "identity=2 lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
    });
  });
}

std::string format_witness(const HeightWitness& witness) {
  return "walk=" + format_walk(witness.walk) + " H=" + std::to_string(witness.strip_height) +
         " walk_max_total=" + std::to_string(witness.walk_max_total) +
         " image_strip_height=" + std::to_string(witness.image_strip_height);
}

bool witness_valid(const HeightWitness& witness) {
  return witness.walk.max_coordinate_sum() == witness.walk_max_total &&
         phi(witness.walk).max_height() == witness.image_strip_height &&
         witness.walk_max_total <= 2 * witness.strip_height + 1 &&
         witness.image_strip_height > witness.strip_height;
}

std::optional<HeightWitness> find_height_counterexample(std::size_t n_max,
                                                        int strip_height) {
  for (std::size_t len = 0; len <= n_max; ++len) {
    std::optional<HeightWitness> found;
    ClassSpec spec;
    spec.family = Family::SWalks;
    spec.length = len;
    spec.triangle_bound = 2 * strip_height + 1;
    for_each_in_class(spec, [&](const ClassObject& obj) {
      if (found) return;
      const auto& walk = std::get<QuarterPlaneWalk>(obj);
      int image_height = phi(walk).max_height();
      if (image_height > strip_height)
        found = HeightWitness{walk, strip_height, walk.max_coordinate_sum(), image_height};
    });
    if (found) return found;
  }
  return std::nullopt;
}

VerificationReport check_height_property(std::size_t n_max, int strip_height) {
  std::string name = "height-counterexample(H=" + std::to_string(strip_height) + ")";
  return run_check(std::move(name), n_max, [&](auto& record) {
    bool done = false;
    for (std::size_t len = 0; len <= n_max && !done; ++len) {
      ClassSpec spec;
      spec.family = Family::SWalks;
      spec.length = len;
      spec.triangle_bound = 2 * strip_height + 1;
      for_each_in_class(spec, [&](const ClassObject& obj) {
        if (done) return;
        const auto& walk = std::get<QuarterPlaneWalk>(obj);
        int image_height = phi(walk).max_height();
        if (image_height <= strip_height) {
          record(true, {});
          return;
        }
        HeightWitness witness{walk, strip_height, walk.max_coordinate_sum(),
                              image_height};
        record(false, [&] { return format_witness(witness); });
        done = true;
      });
    }
  });
}

}  // namespace qm
