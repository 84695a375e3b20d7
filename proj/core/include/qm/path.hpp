#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qm/steps.hpp"

namespace qm {

// Decoration carried by a plain Motzkin step: nothing.
struct Plain {
  friend constexpr auto operator<=>(Plain, Plain) = default;
};

struct ColourMark {
  Colour colour = Colour::Red;
  Mark mark = Mark::Marked;
  friend constexpr auto operator<=>(const ColourMark&, const ColourMark&) = default;
};

// A Motzkin path whose steps each carry a decoration: Plain, Colour or
// ColourMark. Heights never dip below zero and the path ends at height zero.
template <class Deco>
class BasicPath {
 public:
  struct Step {
    MotzkinKind kind = MotzkinKind::Flat;
    [[no_unique_address]] Deco deco{};
    friend constexpr auto operator<=>(const Step&, const Step&) = default;
  };

  BasicPath() = default;
  // Throws Error{NotMotzkin, position}.
  explicit BasicPath(std::vector<Step> steps);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  // Prefix height after each step; same length as the path.
  std::vector<int> heights() const;
  int max_height() const;

  friend bool operator==(const BasicPath&, const BasicPath&) = default;

 private:
  std::vector<Step> steps_;
};

using MotzkinPath = BasicPath<Plain>;
using BicolouredPath = BasicPath<Colour>;
using MarkedBicolouredPath = BasicPath<ColourMark>;

// True iff prefix heights stay >= 0 and the final height is 0.
bool motzkin_valid(std::span<const MotzkinKind> kinds);

// Fixed-width separator-free tokens: plain "u", bicoloured "ur",
// marked "ur." / "ur*". Throws Error{BadToken|NotMotzkin, token position}.
template <class Deco>
BasicPath<Deco> parse_path(std::string_view text);

template <class Deco>
std::string format_path(const BasicPath<Deco>& p);

template <class Deco>
std::vector<int> path_heights(const BasicPath<Deco>& p) {
  return p.heights();
}

extern template class BasicPath<Plain>;
extern template class BasicPath<Colour>;
extern template class BasicPath<ColourMark>;
extern template MotzkinPath parse_path<Plain>(std::string_view);
extern template BicolouredPath parse_path<Colour>(std::string_view);
extern template MarkedBicolouredPath parse_path<ColourMark>(std::string_view);
extern template std::string format_path<Plain>(const MotzkinPath&);
extern template std::string format_path<Colour>(const BicolouredPath&);
extern template std::string format_path<ColourMark>(const MarkedBicolouredPath&);

}  // namespace qm
