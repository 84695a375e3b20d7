#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qm/enumerate.hpp"
#include "qm/error.hpp"
#include "qm/oeis.hpp"
#include "qm/phi.hpp"
#include "qm/psi.hpp"
#include "qm/render.hpp"
#include "qm/tableaux.hpp"
#include "qm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitNetwork = 4;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << '\n';
  return kExitUsage;
}

qm::Family parse_family(const std::string& name) {
  auto family = qm::family_from_name(name);
  if (!family) throw qm::Error(qm::ErrorKind::SpecMismatch);
  return *family;
}

struct ClassOptions {
  std::string family;
  std::size_t length = 0;
  int triangle = -1;
  int strip = -1;
  bool no_top_flat = false;
  bool begins_up = false;
  bool no_interior_return = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "y-walks|s-walks|motzkin|bicoloured-motzkin|marked-bicoloured-motzkin")
        ->required();
    cmd->add_option("--length", length, "object length n")->required();
    cmd->add_option("--triangle", triangle, "walks: keep x+y <= c");
    cmd->add_option("--strip", strip, "paths: keep height <= H");
    cmd->add_flag("--no-top-flat", no_top_flat, "paths: no flat step at height H");
    cmd->add_flag("--begins-up", begins_up, "first step must rise");
    cmd->add_flag("--no-interior-return", no_interior_return,
                  "no return to height 0 before the end");
  }

  qm::ClassSpec to_spec() const {
    qm::ClassSpec spec;
    spec.family = parse_family(family);
    spec.length = length;
    if (triangle >= 0) spec.triangle_bound = triangle;
    if (strip >= 0) spec.strip_height = strip;
    spec.forbid_flat_at_top = no_top_flat;
    spec.begins_with_up = begins_up;
    spec.no_interior_return = no_interior_return;
    return spec;
  }
};

std::vector<long long> parse_cli_terms(const std::string& text) {
  std::vector<long long> terms;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    std::size_t used = 0;
    terms.push_back(std::stoll(cell, &used));
    if (used != cell.size()) throw std::invalid_argument(cell);
  }
  return terms;
}

int run_verify(const std::string& suite, std::size_t length, int height, bool as_json) {
  qm::VerificationReport report;
  if (suite == "bijection") {
    report = qm::check_bijection_suite(length);
  } else if (suite == "shift") {
    report = qm::check_shift_property(length);
  } else if (suite == "restriction") {
    report = qm::check_restriction(length);
  } else if (suite == "mp-equinumerosity") {
    report = qm::check_mp_equinumerosity(length, height);
  } else if (suite == "height-counterexample") {
    report = qm::check_height_property(length, height);
  } else {
    return usage_error("unknown suite: " + suite);
  }
  std::cout << (as_json ? qm::report_json(report) + "\n" : qm::report_text(report));
  if (suite == "height-counterexample") {
    auto witness = qm::find_height_counterexample(length, height);
    return witness && qm::witness_valid(*witness) ? kExitOk : kExitVerification;
  }
  return report.failed == 0 ? kExitOk : kExitVerification;
}

int run_seq_id(const std::string& terms_text, bool online, const std::string& snapshot) {
  std::vector<long long> terms;
  try {
    terms = parse_cli_terms(terms_text);
  } catch (const std::exception&) {
    return usage_error("terms must be comma-separated integers");
  }
  if (terms.size() < 4) return usage_error("need at least 4 terms");
  if (const char* forced = std::getenv("QM_OFFLINE"); forced && std::string(forced) == "1")
    online = false;
  std::vector<qm::SequenceMatch> matches;
  if (online) {
    matches = qm::oeis_lookup_online(terms);
  } else {
    std::ifstream in(snapshot);
    if (!in) {
      std::cerr << "error: cannot read snapshot " << snapshot << '\n';
      return kExitDomain;
    }
    std::stringstream text;
    text << in.rdbuf();
    matches = qm::snapshot_lookup(text.str(), terms);
  }
  for (const auto& m : matches) std::cout << m.id << '\t' << m.name << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quarter-plane walks, Motzkin paths and the maps between them"};
  app.require_subcommand(1);

  auto* map_cmd = app.add_subcommand("map", "walk -> marked bicoloured path");
  std::string map_walk;
  bool map_forget = false;
  map_cmd->add_option("walk", map_walk, "walk over R,A,D,L,B,U")->required();
  map_cmd->add_flag("--forget", map_forget, "drop the marks from the image");

  auto* unmap_cmd = app.add_subcommand("unmap", "marked bicoloured path -> steps");
  std::string unmap_path;
  unmap_cmd->add_option("path", unmap_path, "tokens like ur. fb* db.")->required();

  auto* mark_cmd = app.add_subcommand("mark", "bicoloured path -> canonical marking");
  std::string mark_path;
  mark_cmd->add_option("path", mark_path, "tokens like ur fb db")->required();

  auto* forget_cmd = app.add_subcommand("forget", "marked bicoloured path -> bicoloured");
  std::string forget_path;
  forget_cmd->add_option("path", forget_path, "tokens like ur. fb* db.")->required();

  auto* enum_cmd = app.add_subcommand("enum", "stream a class, one object per line");
  ClassOptions enum_options;
  enum_options.attach(enum_cmd);

  auto* count_cmd = app.add_subcommand("count", "count a class");
  ClassOptions count_options;
  count_options.attach(count_cmd);
  std::size_t count_shard_depth = 0;
  std::size_t count_threads = 1;
  count_cmd->add_option("--shard-depth", count_shard_depth, "split work on prefixes of this length");
  count_cmd->add_option("--threads", count_threads, "worker threads for sharded counting");

  auto* verify_cmd = app.add_subcommand("verify", "run one verification suite");
  std::string verify_suite;
  std::size_t verify_length = 0;
  int verify_height = 0;
  bool verify_json = false;
  verify_cmd->add_option("--suite", verify_suite,
                         "bijection|shift|restriction|mp-equinumerosity|height-counterexample")
      ->required();
  verify_cmd->add_option("--length", verify_length, "length bound n")->required();
  verify_cmd->add_option("--height", verify_height, "strip height H");
  verify_cmd->add_flag("--json", verify_json, "machine-readable report");

  auto* render_cmd = app.add_subcommand("render", "ASCII figure of one object");
  std::string render_object, render_as;
  render_cmd->add_option("object", render_object, "serialized object");
  render_cmd->add_option("--as", render_as, "family of the object")->required();

  auto* tableau_cmd = app.add_subcommand("tableau", "Young tableau conversions");
  std::string tableau_from_walk, tableau_to_walk_rows, tableau_from_motzkin;
  auto* from_walk_opt = tableau_cmd->add_option("--from-walk", tableau_from_walk,
                                                "Y-walk -> tableau rows");
  auto* to_walk_opt = tableau_cmd->add_option("--to-walk", tableau_to_walk_rows,
                                              "tableau rows -> Y-walk");
  auto* from_motzkin_opt = tableau_cmd->add_option("--from-motzkin", tableau_from_motzkin,
                                                   "plain path -> tableau rows");
  from_walk_opt->excludes(to_walk_opt)->excludes(from_motzkin_opt);
  to_walk_opt->excludes(from_motzkin_opt);

  auto* seq_cmd = app.add_subcommand("seq-id", "identify a sequence");
  std::string seq_terms;
  bool seq_online = false;
  std::string seq_snapshot = "data/oeis_snapshot.txt";
  seq_cmd->add_option("terms", seq_terms, "comma-separated integers, at least 4")
      ->required();
  seq_cmd->add_flag("--online", seq_online, "query oeis.org instead of the snapshot");
  seq_cmd->add_option("--snapshot", seq_snapshot, "snapshot file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (map_cmd->parsed()) {
      auto image = qm::phi(qm::parse_walk(map_walk));
      if (map_forget)
        std::cout << qm::format_path(qm::forget_marks(image)) << '\n';
      else
        std::cout << qm::format_path(image) << '\n';
    } else if (unmap_cmd->parsed()) {
      auto result = qm::g_unmap(qm::parse_path<qm::ColourMark>(unmap_path));
      std::string steps;
      for (qm::WalkStep s : result.steps) steps += qm::step_char(s);
      std::cout << "steps: " << steps << '\n';
      std::cout << "quarter_plane: " << (result.quarterplane_valid ? "true" : "false")
                << '\n';
    } else if (mark_cmd->parsed()) {
      std::cout << qm::format_path(qm::psi(qm::parse_path<qm::Colour>(mark_path))) << '\n';
    } else if (forget_cmd->parsed()) {
      std::cout << qm::format_path(
                       qm::forget_marks(qm::parse_path<qm::ColourMark>(forget_path)))
                << '\n';
    } else if (enum_cmd->parsed()) {
      qm::write_corpus(enum_options.to_spec(), std::cout);
    } else if (count_cmd->parsed()) {
      qm::ClassSpec spec = count_options.to_spec();
      std::uint64_t total = count_shard_depth > 0
                                ? qm::count_class_sharded(spec, count_shard_depth, count_threads)
                                : qm::count_class(spec);
      std::cout << total << '\n';
    } else if (verify_cmd->parsed()) {
      return run_verify(verify_suite, verify_length, verify_height, verify_json);
    } else if (render_cmd->parsed()) {
      switch (parse_family(render_as)) {
        case qm::Family::YWalks:
        case qm::Family::SWalks:
          std::cout << qm::render_walk(qm::parse_walk(render_object));
          break;
        case qm::Family::Motzkin:
          std::cout << qm::render_path(qm::parse_path<qm::Plain>(render_object));
          break;
        case qm::Family::BicolouredMotzkin:
          std::cout << qm::render_path(qm::parse_path<qm::Colour>(render_object));
          break;
        case qm::Family::MarkedBicolouredMotzkin:
          std::cout << qm::render_path(qm::parse_path<qm::ColourMark>(render_object));
          break;
      }
    } else if (tableau_cmd->parsed()) {
      if (from_walk_opt->count()) {
        std::cout << qm::format_tableau(qm::walk_to_tableau(qm::parse_walk(tableau_from_walk)))
                  << '\n';
      } else if (to_walk_opt->count()) {
        std::cout << qm::format_walk(qm::tableau_to_walk(qm::parse_tableau(tableau_to_walk_rows)))
                  << '\n';
      } else if (from_motzkin_opt->count()) {
        std::cout << qm::format_tableau(
                         qm::motzkin_to_tableau(qm::parse_path<qm::Plain>(tableau_from_motzkin)))
                  << '\n';
      } else {
        return usage_error("tableau needs --from-walk, --to-walk or --from-motzkin");
      }
    } else if (seq_cmd->parsed()) {
      return run_seq_id(seq_terms, seq_online, seq_snapshot);
    }
  } catch (const qm::Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    if (err.kind() == qm::ErrorKind::Network) return kExitNetwork;
    if (err.kind() == qm::ErrorKind::SpecMismatch) return kExitUsage;
    return kExitDomain;
  }
  return kExitOk;
}
