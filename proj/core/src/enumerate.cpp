#include "qm/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "qm/error.hpp"
#include "qm/phi.hpp"

namespace qm {

const char* family_name(Family f) {
  switch (f) {
    case Family::YWalks: return "y-walks";
    case Family::SWalks: return "s-walks";
    case Family::Motzkin: return "motzkin";
    case Family::BicolouredMotzkin: return "bicoloured-motzkin";
    case Family::MarkedBicolouredMotzkin: return "marked-bicoloured-motzkin";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "y-walks" || name == "y") return Family::YWalks;
  if (name == "s-walks" || name == "s") return Family::SWalks;
  if (name == "motzkin" || name == "m") return Family::Motzkin;
  if (name == "bicoloured-motzkin" || name == "m2") return Family::BicolouredMotzkin;
  if (name == "marked-bicoloured-motzkin" || name == "mm2")
    return Family::MarkedBicolouredMotzkin;
  return std::nullopt;
}

void validate(const ClassSpec& spec) {
  bool walk = is_walk_family(spec.family);
  if (spec.triangle_bound && (!walk || *spec.triangle_bound < 0))
    throw Error(ErrorKind::SpecMismatch);
  if (spec.strip_height && (walk || *spec.strip_height < 0))
    throw Error(ErrorKind::SpecMismatch);
  if (spec.forbid_flat_at_top && !spec.strip_height) throw Error(ErrorKind::SpecMismatch);
}

std::string format_object(const ClassObject& obj) {
  return std::visit(
      [](const auto& o) {
        if constexpr (std::is_same_v<std::decay_t<decltype(o)>, QuarterPlaneWalk>)
          return format_walk(o);
        else
          return format_path(o);
      },
      obj);
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow);
  return r;
}

// Depth-first generation. Prunes consult the full target length in
// spec.length; `stop` is where leaves are reported, so the same recursion
// yields whole objects (stop = length) and shard prefixes (stop < length).

template <class Leaf>
void walk_rec(const ClassSpec& spec, std::span<const WalkStep> alphabet,
              std::vector<WalkStep>& buf, int x, int y, std::size_t stop, Leaf& leaf) {
  if (buf.size() == stop) {
    leaf(buf);
    return;
  }
  for (WalkStep s : alphabet) {
    if (buf.empty() && spec.begins_with_up && s != WalkStep::U) continue;
    int nx = x + step_dx(s);
    int ny = y + step_dy(s);
    if (nx < 0 || ny < 0) continue;
    if (spec.triangle_bound && nx + ny > *spec.triangle_bound) continue;
    buf.push_back(s);
    walk_rec(spec, alphabet, buf, nx, ny, stop, leaf);
    buf.pop_back();
  }
}

// The interior-return filter on walks reads off the phi image, which needs
// the whole walk; everything else prunes mid-recursion.
bool walk_leaf_ok(const ClassSpec& spec, const std::vector<WalkStep>& buf) {
  if (!spec.no_interior_return || buf.size() < 2) return true;
  auto heights = phi(QuarterPlaneWalk(buf)).heights();
  return std::none_of(heights.begin(), heights.end() - 1, [](int h) { return h == 0; });
}

std::span<const WalkStep> walk_alphabet(Family f) {
  return f == Family::YWalks ? std::span<const WalkStep>(y_walk_steps)
                             : std::span<const WalkStep>(all_walk_steps);
}

template <class Deco>
struct PathAlphabet;

template <>
struct PathAlphabet<Plain> {
  static constexpr std::array<MotzkinPath::Step, 3> steps = {{
      {MotzkinKind::Up, {}},
      {MotzkinKind::Flat, {}},
      {MotzkinKind::Down, {}},
  }};
};

template <>
struct PathAlphabet<Colour> {
  static constexpr std::array<BicolouredPath::Step, 6> steps = {{
      {MotzkinKind::Up, Colour::Red},
      {MotzkinKind::Up, Colour::Black},
      {MotzkinKind::Flat, Colour::Red},
      {MotzkinKind::Flat, Colour::Black},
      {MotzkinKind::Down, Colour::Red},
      {MotzkinKind::Down, Colour::Black},
  }};
};

template <>
struct PathAlphabet<ColourMark> {
  static constexpr std::array<MarkedBicolouredPath::Step, 12> steps = {{
      {MotzkinKind::Up, {Colour::Red, Mark::Marked}},
      {MotzkinKind::Up, {Colour::Red, Mark::Unmarked}},
      {MotzkinKind::Up, {Colour::Black, Mark::Marked}},
      {MotzkinKind::Up, {Colour::Black, Mark::Unmarked}},
      {MotzkinKind::Flat, {Colour::Red, Mark::Marked}},
      {MotzkinKind::Flat, {Colour::Red, Mark::Unmarked}},
      {MotzkinKind::Flat, {Colour::Black, Mark::Marked}},
      {MotzkinKind::Flat, {Colour::Black, Mark::Unmarked}},
      {MotzkinKind::Down, {Colour::Red, Mark::Marked}},
      {MotzkinKind::Down, {Colour::Red, Mark::Unmarked}},
      {MotzkinKind::Down, {Colour::Black, Mark::Marked}},
      {MotzkinKind::Down, {Colour::Black, Mark::Unmarked}},
  }};
};

template <class Deco, class Leaf>
void path_rec(const ClassSpec& spec, std::vector<typename BasicPath<Deco>::Step>& buf,
              int h, std::size_t stop, Leaf& leaf) {
  if (buf.size() == stop) {
    leaf(buf);
    return;
  }
  std::size_t d = buf.size();
  std::size_t n = spec.length;
  for (const auto& st : PathAlphabet<Deco>::steps) {
    if (d == 0 && spec.begins_with_up && st.kind != MotzkinKind::Up) continue;
    int nh = h + kind_delta(st.kind);
    if (nh < 0) continue;
    if (spec.strip_height) {
      if (nh > *spec.strip_height) continue;
      if (spec.forbid_flat_at_top && st.kind == MotzkinKind::Flat &&
          h == *spec.strip_height)
        continue;
    }
    if (nh > static_cast<int>(n - d - 1)) continue;  // cannot get back to 0
    if (spec.no_interior_return && nh == 0 && d + 1 < n) continue;
    buf.push_back(st);
    path_rec<Deco>(spec, buf, nh, stop, leaf);
    buf.pop_back();
  }
}

// The empty object has no first step, so begins_with_up excludes it.
bool excludes_empty(const ClassSpec& spec) {
  return spec.length == 0 && spec.begins_with_up;
}

template <class Deco>
void for_each_path(const ClassSpec& spec,
                   const std::function<void(const ClassObject&)>& fn) {
  std::vector<typename BasicPath<Deco>::Step> buf;
  buf.reserve(spec.length);
  auto leaf = [&](const std::vector<typename BasicPath<Deco>::Step>& b) {
    fn(ClassObject(BasicPath<Deco>(b)));
  };
  path_rec<Deco>(spec, buf, 0, spec.length, leaf);
}

template <class Deco>
std::uint64_t count_paths(const ClassSpec& spec) {
  std::uint64_t count = 0;
  std::vector<typename BasicPath<Deco>::Step> buf;
  buf.reserve(spec.length);
  auto leaf = [&](const std::vector<typename BasicPath<Deco>::Step>&) {
    count = checked_add(count, 1);
  };
  path_rec<Deco>(spec, buf, 0, spec.length, leaf);
  return count;
}

// Count completions of each stored prefix across a small pool of threads,
// then merge the per-prefix subtotals in prefix order, so the total never
// depends on the thread count.
template <class Prefix, class CountOne>
std::uint64_t merge_shards(const std::vector<Prefix>& prefixes, std::size_t threads,
                           CountOne count_one) {
  std::vector<std::uint64_t> subtotal(prefixes.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) return;
      try {
        subtotal[i] = count_one(prefixes[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::size_t pool = std::max<std::size_t>(1, std::min(threads, prefixes.size()));
  std::vector<std::thread> crew;
  crew.reserve(pool);
  for (std::size_t t = 0; t < pool; ++t) crew.emplace_back(worker);
  for (auto& th : crew) th.join();
  if (failure) std::rethrow_exception(failure);
  std::uint64_t total = 0;
  for (std::uint64_t s : subtotal) total = checked_add(total, s);
  return total;
}

std::uint64_t count_walks_sharded(const ClassSpec& spec, std::size_t k,
                                  std::size_t threads) {
  auto alphabet = walk_alphabet(spec.family);
  std::vector<std::vector<WalkStep>> prefixes;
  std::vector<WalkStep> buf;
  auto store = [&](const std::vector<WalkStep>& b) { prefixes.push_back(b); };
  walk_rec(spec, alphabet, buf, 0, 0, k, store);
  return merge_shards(prefixes, threads, [&](const std::vector<WalkStep>& prefix) {
    std::uint64_t count = 0;
    std::vector<WalkStep> work = prefix;
    Point at = walk_endpoint(QuarterPlaneWalk(work));
    auto leaf = [&](const std::vector<WalkStep>& b) {
      if (walk_leaf_ok(spec, b)) count = checked_add(count, 1);
    };
    walk_rec(spec, alphabet, work, at.x, at.y, spec.length, leaf);
    return count;
  });
}

template <class Deco>
std::uint64_t count_paths_sharded(const ClassSpec& spec, std::size_t k,
                                  std::size_t threads) {
  using Step = typename BasicPath<Deco>::Step;
  std::vector<std::vector<Step>> prefixes;
  std::vector<Step> buf;
  auto store = [&](const std::vector<Step>& b) { prefixes.push_back(b); };
  path_rec<Deco>(spec, buf, 0, k, store);
  return merge_shards(prefixes, threads, [&](const std::vector<Step>& prefix) {
    std::uint64_t count = 0;
    std::vector<Step> work = prefix;
    int h = 0;
    for (const Step& s : work) h += kind_delta(s.kind);
    auto leaf = [&](const std::vector<Step>&) { count = checked_add(count, 1); };
    path_rec<Deco>(spec, work, h, spec.length, leaf);
    return count;
  });
}

}  // namespace

void for_each_in_class(const ClassSpec& spec,
                       const std::function<void(const ClassObject&)>& fn) {
  validate(spec);
  if (excludes_empty(spec)) return;
  switch (spec.family) {
    case Family::YWalks:
    case Family::SWalks: {
      std::vector<WalkStep> buf;
      buf.reserve(spec.length);
      auto leaf = [&](const std::vector<WalkStep>& b) {
        if (walk_leaf_ok(spec, b)) fn(ClassObject(QuarterPlaneWalk(b)));
      };
      walk_rec(spec, walk_alphabet(spec.family), buf, 0, 0, spec.length, leaf);
      return;
    }
    case Family::Motzkin: return for_each_path<Plain>(spec, fn);
    case Family::BicolouredMotzkin: return for_each_path<Colour>(spec, fn);
    case Family::MarkedBicolouredMotzkin: return for_each_path<ColourMark>(spec, fn);
  }
}

std::vector<ClassObject> enumerate_class(const ClassSpec& spec) {
  std::vector<ClassObject> out;
  for_each_in_class(spec, [&](const ClassObject& obj) { out.push_back(obj); });
  return out;
}

std::uint64_t count_class(const ClassSpec& spec) {
  validate(spec);
  if (excludes_empty(spec)) return 0;
  switch (spec.family) {
    case Family::YWalks:
    case Family::SWalks: {
      std::uint64_t count = 0;
      std::vector<WalkStep> buf;
      buf.reserve(spec.length);
      auto leaf = [&](const std::vector<WalkStep>& b) {
        if (walk_leaf_ok(spec, b)) count = checked_add(count, 1);
      };
      walk_rec(spec, walk_alphabet(spec.family), buf, 0, 0, spec.length, leaf);
      return count;
    }
    case Family::Motzkin: return count_paths<Plain>(spec);
    case Family::BicolouredMotzkin: return count_paths<Colour>(spec);
    case Family::MarkedBicolouredMotzkin: return count_paths<ColourMark>(spec);
  }
  return 0;
}

std::uint64_t count_class_sharded(const ClassSpec& spec, std::size_t prefix_depth,
                                  std::size_t threads) {
  validate(spec);
  if (excludes_empty(spec)) return 0;
  std::size_t k = std::min(prefix_depth, spec.length);
  switch (spec.family) {
    case Family::YWalks:
    case Family::SWalks: return count_walks_sharded(spec, k, threads);
    case Family::Motzkin: return count_paths_sharded<Plain>(spec, k, threads);
    case Family::BicolouredMotzkin: return count_paths_sharded<Colour>(spec, k, threads);
    case Family::MarkedBicolouredMotzkin:
      return count_paths_sharded<ColourMark>(spec, k, threads);
  }
  return 0;
}

std::string corpus_header(const ClassSpec& spec) {
  std::string line = "# family=";
  line += family_name(spec.family);
  line += " length=" + std::to_string(spec.length);
  if (spec.triangle_bound) line += " triangle=" + std::to_string(*spec.triangle_bound);
  if (spec.strip_height) line += " strip=" + std::to_string(*spec.strip_height);
  if (spec.forbid_flat_at_top) line += " no-top-flat";
  if (spec.begins_with_up) line += " begins-up";
  if (spec.no_interior_return) line += " no-interior-return";
  return line;
}

void write_corpus(const ClassSpec& spec, std::ostream& out) {
  out << corpus_header(spec) << '\n';
  for_each_in_class(spec, [&](const ClassObject& obj) { out << format_object(obj) << '\n'; });
}

}  // namespace qm
