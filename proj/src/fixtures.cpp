#include "stablejones/fixtures.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include "stablejones/errors.hpp"

namespace stablejones {

int TableRow::link_components() const {
  if (link_name.empty() || link_name[0] == 'L') return 0;
  static const std::regex sup(R"(\^\{?(\d+)\}?)");
  std::smatch m;
  if (std::regex_search(link_name, m, sup)) return std::stoi(m[1]);
  return 1;
}

int TableRow::edge_group() const {
  static const std::regex id(R"(G\^(\d+)_\d+)");
  std::smatch m;
  if (std::regex_match(graph_id, m, id)) return std::stoi(m[1]);
  return -1;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

long to_long(const std::string& s, const std::string& where) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(where + ": not an integer: '" + s + "'");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureMissing("cannot open fixture " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

std::vector<TableRow> parse_table_fixture(std::string_view text, const std::string& origin) {
  std::vector<TableRow> rows;
  std::istringstream in{std::string(text)};
  std::string line, source;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      static const std::string tag = "# source:";
      if (t.rfind(tag, 0) == 0) source = trim(t.substr(tag.size()));
      continue;
    }
    const std::string where = origin + ":" + std::to_string(lineno);
    auto f = split_csv(t);
    if (!header_seen) {
      header_seen = true;
      if (f.empty() || f[0] != "graph_id") throw ParseError(where + ": missing header");
      continue;
    }
    if (f.size() != 18) throw ParseError(where + ": expected 18 columns, got " + std::to_string(f.size()));
    TableRow r;
    r.graph_id = f[0];
    int present = 0;
    for (int i = 1; i <= 5; ++i) present += !f[i].empty();
    const bool any = present > 0;
    if (any && present != 5) throw ParseError(where + ": c columns must be all present or all empty");
    if (any) {
      std::array<long, 5> c{};
      for (int i = 0; i < 5; ++i) c[i] = to_long(f[1 + i], where);
      r.c = c;
    }
    for (int i = 0; i < 5; ++i) r.C[i] = to_long(f[6 + i], where);
    r.link_name = f[11];
    for (int i = 0; i < 6; ++i) r.phi[i] = to_long(f[12 + i], where);
    r.source = source;
    r.origin = where;
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError(origin + ": empty fixture");
  return rows;
}

std::vector<TableRow> load_table_fixture(const std::string& path) {
  return parse_table_fixture(read_file(path), path);
}

std::vector<AtlasKey> load_atlas_keys(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<AtlasKey> keys;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    auto f = split_csv(t);
    if (f.size() != 2) throw ParseError(path + ": expected pattern,key_row");
    keys.push_back({f[0], f[1]});
  }
  return keys;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("STABLE_JONES_DATA"); env && *env) return env;
  return STABLEJONES_DATA_DIR;
}

}  // namespace stablejones
