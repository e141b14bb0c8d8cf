#include "stablejones/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "stablejones/errors.hpp"

namespace stablejones {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(std::string("expected integer for ") + what + ", got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  Multigraph g;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra))
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected two fields");
    if (!have_header) {
      if (a != "n") throw ParseError("edge list must start with 'n <count>'");
      g.vertex_count = parse_int(b, "vertex count");
      if (g.vertex_count < 0 || g.vertex_count > SimpleGraph::kMaxVertices)
        throw ParseError("vertex count out of range");
      have_header = true;
      continue;
    }
    const int u = parse_int(a, "vertex"), v = parse_int(b, "vertex");
    if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range");
    g.edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError("edge list is empty");
  return g;
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

SimpleGraph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character");
  const int n = text[0] - 63;
  if (n > 62) throw ParseError("graph6 strings with more than 62 vertices are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() != 1 + (bits + 5) / 6) throw ParseError("graph6 string has wrong length");
  SimpleGraph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > 62) throw SizeLimit("graph6 output supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

PlaneGraph parse_rotation_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rotation JSON: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    if (n <= 0 || n > SimpleGraph::kMaxVertices) throw ParseError("rotation JSON: n out of range");
    const auto lists = j.at("rotation").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(lists.size()) != n) throw ParseError("rotation JSON: need one list per vertex");
    const int root = j.value("root", 0);
    const int outer = j.value("outer_face", -1);
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation(n);
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      rotation = lists;
    } else {
      // Neighbor lists: pair each (v -> w) with an edge id, checking symmetry.
      std::map<Edge, int> edge_id;
      for (int v = 0; v < n; ++v)
        for (int w : lists[v]) {
          if (w < 0 || w >= n || w == v) throw ParseError("rotation JSON: bad neighbor " + std::to_string(w));
          Edge key{std::min(v, w), std::max(v, w)};
          auto it = edge_id.find(key);
          if (it == edge_id.end()) {
            edge_id.emplace(key, static_cast<int>(edges.size()));
            edges.push_back(key);
          }
        }
      std::map<std::pair<int, int>, int> uses;
      for (int v = 0; v < n; ++v)
        for (int w : lists[v]) {
          const int id = edge_id.at({std::min(v, w), std::max(v, w)});
          if (uses[{v, w}]++) throw ParseError("rotation JSON: repeated neighbor; use explicit edges");
          rotation[v].push_back(2 * id + (edges[id].first == v ? 0 : 1));
        }
      for (auto [key, id] : edge_id)
        if (!uses.count({key.first, key.second}) || !uses.count({key.second, key.first}))
          throw ParseError("rotation JSON: neighbor lists are not symmetric");
    }
    return PlaneGraph(n, std::move(edges), std::move(rotation), root, outer);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("rotation JSON: ") + e.what());
  }
}

std::string to_rotation_json(const PlaneGraph& pg) {
  nlohmann::json j;
  j["n"] = pg.vertex_count();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : pg.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["rotation"] = pg.rotation();
  j["root"] = pg.root_vertex();
  j["outer_face"] = pg.outer_face();
  return j.dump();
}

GraphInput parse_graph_text(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty graph input");
  GraphInput in;
  if (body.front() == '{') {
    PlaneGraph pg = parse_rotation_json(body);
    if (pg.is_simple()) {
      in.graph = pg.simple_graph();
      in.embedding = std::move(pg);
    } else {
      in.graph = reduce(Multigraph{pg.vertex_count(), pg.edges()});
      in.was_reduced = true;
    }
    return in;
  }
  if (body.front() == 'n' && body.size() > 1 && std::isspace(static_cast<unsigned char>(body[1]))) {
    Multigraph mg = parse_edge_list(body);
    in.graph = reduce(mg);
    in.was_reduced = in.graph.edge_count() != static_cast<int>(mg.edges.size());
    return in;
  }
  in.graph = parse_graph6(body);
  return in;
}

GraphInput load_graph(const std::string& path_or_name) {
  std::ifstream file(path_or_name);
  if (file) {
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_graph_text(buffer.str());
  }
  if (auto g = named_graph(path_or_name)) return GraphInput{*g, std::nullopt, false};
  throw IoError("cannot open graph file '" + path_or_name + "' and it is not a built-in graph name");
}

std::optional<SimpleGraph> named_graph(std::string_view name) {
  auto number = [](std::string_view s) -> std::optional<int> {
    if (s.empty() || s.size() > 2) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
  };
  if (name == "vertex") return SimpleGraph(1);
  if (name == "edge") return complete_graph(2);
  if (name == "triangle") return cycle_graph(3);
  if (name == "square") return cycle_graph(4);
  if (name == "bowtie") return vertex_sum(cycle_graph(3), 0, cycle_graph(3), 0);
  if (name == "diamond") {
    SimpleGraph g = complete_graph(4);
    g.remove_edge(0, 1);
    return g;
  }
  if (name == "k5-e") {
    SimpleGraph g = complete_graph(5);
    g.remove_edge(0, 1);
    return g;
  }
  if (name == "octahedron") {
    SimpleGraph g = complete_graph(6);
    for (int i = 0; i < 3; ++i) g.remove_edge(i, i + 3);
    return g;
  }
  if (name.size() < 2) return std::nullopt;
  const char kind = name[0];
  const std::string_view rest = name.substr(1);
  if (kind == 'k') {
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      auto m = number(rest.substr(0, comma)), n = number(rest.substr(comma + 1));
      if (m && n && *m >= 1 && *n >= 1 && *m + *n <= SimpleGraph::kMaxVertices) return complete_bipartite(*m, *n);
      return std::nullopt;
    }
    if (auto n = number(rest); n && *n >= 1) return complete_graph(*n);
  }
  if (kind == 'c')
    if (auto n = number(rest); n && *n >= 3) return cycle_graph(*n);
  if (kind == 'p')
    if (auto n = number(rest); n && *n >= 1) return path_graph(*n);
  if (kind == 'w')
    if (auto n = number(rest); n && *n >= 3) return wheel_graph(*n);
  return std::nullopt;
}

}  // namespace stablejones
