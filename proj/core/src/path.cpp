#include "qm/path.hpp"

#include <algorithm>

#include "qm/error.hpp"

namespace qm {

bool motzkin_valid(std::span<const MotzkinKind> kinds) {
  int h = 0;
  for (MotzkinKind k : kinds) {
    h += kind_delta(k);
    if (h < 0) return false;
  }
  return h == 0;
}

template <class Deco>
BasicPath<Deco>::BasicPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    h += kind_delta(steps_[i].kind);
    if (h < 0) throw Error(ErrorKind::NotMotzkin, {i + 1});
  }
  if (h != 0) throw Error(ErrorKind::NotMotzkin, {steps_.size()});
}

template <class Deco>
std::vector<int> BasicPath<Deco>::heights() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  int h = 0;
  for (const Step& s : steps_) {
    h += kind_delta(s.kind);
    out.push_back(h);
  }
  return out;
}

template <class Deco>
int BasicPath<Deco>::max_height() const {
  int h = 0, best = 0;
  for (const Step& s : steps_) {
    h += kind_delta(s.kind);
    best = std::max(best, h);
  }
  return best;
}

namespace {

// Token layout per decoration: kind char, then the decoration's own chars.
template <class Deco>
struct TokenTraits;

template <>
struct TokenTraits<Plain> {
  static constexpr std::size_t width = 1;
  static bool read(std::string_view, Plain&) { return true; }
  static void write(std::string&, Plain) {}
};

template <>
struct TokenTraits<Colour> {
  static constexpr std::size_t width = 2;
  static bool read(std::string_view tail, Colour& deco) {
    auto c = colour_from_char(tail[0]);
    if (!c) return false;
    deco = *c;
    return true;
  }
  static void write(std::string& out, Colour deco) { out.push_back(colour_char(deco)); }
};

template <>
struct TokenTraits<ColourMark> {
  static constexpr std::size_t width = 3;
  static bool read(std::string_view tail, ColourMark& deco) {
    auto c = colour_from_char(tail[0]);
    auto m = mark_from_char(tail[1]);
    if (!c || !m) return false;
    deco = ColourMark{*c, *m};
    return true;
  }
  static void write(std::string& out, ColourMark deco) {
    out.push_back(colour_char(deco.colour));
    out.push_back(mark_char(deco.mark));
  }
};

}  // namespace

template <class Deco>
BasicPath<Deco> parse_path(std::string_view text) {
  using Traits = TokenTraits<Deco>;
  constexpr std::size_t w = Traits::width;
  std::vector<typename BasicPath<Deco>::Step> steps;
  steps.reserve(text.size() / w);
  for (std::size_t off = 0; off < text.size(); off += w) {
    std::size_t token = off / w + 1;
    if (off + w > text.size()) throw Error(ErrorKind::BadToken, {token});
    typename BasicPath<Deco>::Step step;
    auto kind = kind_from_char(text[off]);
    if (!kind || !Traits::read(text.substr(off + 1), step.deco))
      throw Error(ErrorKind::BadToken, {token});
    step.kind = *kind;
    steps.push_back(step);
  }
  return BasicPath<Deco>(std::move(steps));
}

template <class Deco>
std::string format_path(const BasicPath<Deco>& p) {
  std::string out;
  out.reserve(p.size() * TokenTraits<Deco>::width);
  for (const auto& s : p.steps()) {
    out.push_back(kind_char(s.kind));
    TokenTraits<Deco>::write(out, s.deco);
  }
  return out;
}

template class BasicPath<Plain>;
template class BasicPath<Colour>;
template class BasicPath<ColourMark>;
template MotzkinPath parse_path<Plain>(std::string_view);
template BicolouredPath parse_path<Colour>(std::string_view);
template MarkedBicolouredPath parse_path<ColourMark>(std::string_view);
template std::string format_path<Plain>(const MotzkinPath&);
template std::string format_path<Colour>(const BicolouredPath&);
template std::string format_path<ColourMark>(const MarkedBicolouredPath&);

}  // namespace qm
