#include "qm/oeis.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#include "json.hpp"

#include "qm/error.hpp"

namespace qm {

namespace {

std::vector<long long> parse_terms(std::string_view text) {
  std::vector<long long> terms;
  std::size_t at = 0;
  while (at < text.size()) {
    std::size_t comma = text.find(',', at);
    std::string_view cell = text.substr(
        at, comma == std::string_view::npos ? std::string_view::npos : comma - at);
    long long value = 0;
    auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || end != cell.data() + cell.size()) return {};
    terms.push_back(value);
    if (comma == std::string_view::npos) break;
    at = comma + 1;
  }
  return terms;
}

std::string join_terms(std::span<const long long> terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(terms[i]);
  }
  return out;
}

}  // namespace

std::vector<SequenceMatch> snapshot_lookup(std::string_view snapshot_text,
                                           std::span<const long long> terms) {
  std::vector<SequenceMatch> matches;
  std::size_t at = 0;
  while (at <= snapshot_text.size()) {
    std::size_t eol = snapshot_text.find('\n', at);
    std::string_view line = snapshot_text.substr(
        at, eol == std::string_view::npos ? std::string_view::npos : eol - at);
    at = eol == std::string_view::npos ? snapshot_text.size() + 1 : eol + 1;
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos) continue;
    std::vector<long long> row = parse_terms(line.substr(tab2 + 1));
    std::size_t shared = std::min(terms.size(), row.size());
    if (shared < 4) continue;
    if (std::equal(terms.begin(), terms.begin() + shared, row.begin()))
      matches.push_back({std::string(line.substr(0, tab1)),
                         std::string(line.substr(tab1 + 1, tab2 - tab1 - 1))});
  }
  return matches;
}

std::vector<SequenceMatch> oeis_lookup_online(std::span<const long long> terms) {
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(10);
  auto res = client.Get("/search?q=" + join_terms(terms) + "&fmt=json");
  if (!res || res->status != 200) throw Error(ErrorKind::Network);
  std::vector<SequenceMatch> matches;
  try {
    auto doc = nlohmann::json::parse(res->body);
    const auto& results = doc.contains("results") ? doc["results"] : nlohmann::json();
    if (results.is_array()) {
      for (const auto& entry : results) {
        char id[16];
        std::snprintf(id, sizeof id, "A%06lld", entry.at("number").get<long long>());
        matches.push_back({id, entry.value("name", std::string())});
      }
    }
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::Network);
  }
  return matches;
}

}  // namespace qm
