#include "stablejones/patterns.hpp"

#include <json.hpp>

#include "assignment.hpp"
#include "stablejones/canonical.hpp"
#include "stablejones/enumerate.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/flag_algebra.hpp"
#include "stablejones/tait.hpp"

namespace stablejones {

const std::vector<std::string>& CountVector::names() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v{"c1", "c2", "c3", "c41", "c42"};
    for (int i = 1; i <= 5; ++i) v.push_back("c5" + std::to_string(i));
    for (int i = 1; i <= 19; ++i) v.push_back("c6" + std::to_string(i));
    return v;
  }();
  return all;
}

std::uint64_t CountVector::get(std::string_view name) const {
  if (name == "c1") return c1;
  if (name == "c2") return c2;
  if (name == "c3") return c3;
  if (name == "c41") return c41;
  if (name == "c42") return c42;
  if (name.size() >= 3 && name[0] == 'c' && (name[1] == '5' || name[1] == '6')) {
    int i = 0;
    for (char ch : name.substr(2)) {
      if (ch < '0' || ch > '9') throw InputError("unknown count name " + std::string(name));
      i = 10 * i + (ch - '0');
    }
    if (name[1] == '5' && i >= 1 && i <= 5) return c5[i - 1];
    if (name[1] == '6' && i >= 1 && i <= 19) return c6[i - 1];
  }
  throw InputError("unknown count name " + std::string(name));
}

GraphSignature compute_signature(const SimpleGraph& g, const EngineOptions& opts) {
  GraphSignature s;
  s.c = {g.vertex_count(), g.edge_count(), static_cast<long>(induced_count(cycle_graph(3), g)),
         static_cast<long>(induced_count(cycle_graph(4), g)), static_cast<long>(induced_count(complete_graph(4), g))};
  const TruncSeries phi = phi_series(g, 5, opts);
  for (int k = 0; k <= 5; ++k) s.phi[k] = phi[k].convert_to<long>();
  const auto exps = product_exponents(phi, 5);
  for (int k = 0; k < 5; ++k) s.C[k] = exps[k].convert_to<long>();
  if (is_connected(g) && g.edge_count() > 0) s.link_components = link_component_count(find_planar_embedding(g));
  return s;
}

int row_cost(const TableRow& row, const GraphSignature& sig) {
  int cost = 0;
  if (row.c && *row.c != sig.c) ++cost;
  if (row.C != sig.C) ++cost;
  if (row.phi != sig.phi) ++cost;
  if (row.link_components() != 0 && row.link_components() != sig.link_components) ++cost;
  return cost;
}

bool row_consistent(const TableRow& row) {
  std::vector<BigInt> coeffs(row.phi.begin(), row.phi.end());
  const TruncSeries phi(5, coeffs);
  if (phi[0] != 1) return false;
  const auto exps = product_exponents(phi, 5);
  for (int k = 0; k < 5; ++k)
    if (exps[k] != row.C[k]) return false;
  if (row.c) {
    const auto& c = *row.c;
    if (row.C[0] != 1 - c[0] + c[1] || row.C[1] != c[2] || row.C[2] != c[2] - c[3] + 2 * c[4]) return false;
  }
  return true;
}

const SimpleGraph& PatternAtlas::at(const std::string& pattern) const {
  auto it = graphs.find(pattern);
  if (it == graphs.end()) throw AtlasUnresolved("pattern " + pattern + " is not in the atlas");
  return it->second;
}

PatternAtlas identify_patterns(const std::vector<TableRow>& rows, const std::vector<AtlasKey>& keys,
                               const EngineOptions& opts) {
  std::map<std::string, const TableRow*> by_id;
  for (const auto& r : rows) by_id.emplace(r.graph_id, &r);

  PatternAtlas atlas;
  for (int n = 4; n <= 6; ++n) {
    std::vector<const AtlasKey*> group;
    for (const auto& k : keys)
      if (k.pattern.size() >= 3 && k.pattern[1] == static_cast<char>('0' + n)) group.push_back(&k);
    const auto candidates = enumerate_connected_planar(n, GraphFilter::Irreducible);
    if (group.size() != candidates.size())
      throw AtlasUnresolved(std::to_string(group.size()) + " key rows for " + std::to_string(candidates.size()) +
                            " irreducible graphs on " + std::to_string(n) + " vertices");
    std::vector<GraphSignature> sigs;
    for (const auto& g : candidates) sigs.push_back(compute_signature(g, opts));

    std::vector<std::vector<long>> cost(group.size(), std::vector<long>(candidates.size()));
    for (std::size_t i = 0; i < group.size(); ++i) {
      auto it = by_id.find(group[i]->row);
      if (it == by_id.end()) throw AtlasUnresolved("key row " + group[i]->row + " is not in the fixture");
      for (std::size_t j = 0; j < candidates.size(); ++j) cost[i][j] = row_cost(*it->second, sigs[j]);
    }
    const auto column = detail::min_cost_assignment(cost);
    const long best = detail::assignment_cost(cost, column);
    // Unique optimum: forbidding any chosen pair must raise the total.
    for (std::size_t i = 0; i < group.size(); ++i) {
      auto forbidden = cost;
      forbidden[i][column[i]] = 1'000'000;
      if (detail::assignment_cost(forbidden, detail::min_cost_assignment(forbidden)) == best)
        throw AmbiguousMatch("pattern " + group[i]->pattern + " (row " + group[i]->row +
                             ") matches more than one graph equally well");
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
      const TableRow& row = *by_id.at(group[i]->row);
      const long c = cost[i][column[i]];
      if (c != 0 && row_consistent(row))
        throw AtlasUnresolved("pattern " + group[i]->pattern + ": no graph reproduces row " + row.graph_id);
      atlas.graphs.emplace(group[i]->pattern, candidates[column[i]]);
      atlas.key_rows.emplace(group[i]->pattern, row.graph_id);
      atlas.match_cost.emplace(group[i]->pattern, static_cast<int>(c));
    }
  }
  return atlas;
}

const PatternAtlas& default_atlas() {
  static const PatternAtlas atlas = [] {
    const std::string dir = default_data_dir();
    return identify_patterns(load_table_fixture(dir + "/tables.csv"), load_atlas_keys(dir + "/atlas_keys.csv"));
  }();
  return atlas;
}

std::string atlas_to_json(const PatternAtlas& atlas) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& name : CountVector::names()) {
    auto it = atlas.graphs.find(name);
    if (it == atlas.graphs.end()) continue;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : it->second.edges()) edges.push_back({u, v});
    out.push_back({{"pattern", name},
                   {"row", atlas.key_rows.at(name)},
                   {"cost", atlas.match_cost.at(name)},
                   {"n", it->second.vertex_count()},
                   {"code", canonical_code(it->second).hex()},
                   {"edges", edges}});
  }
  return nlohmann::json{{"patterns", out}}.dump();
}

PatternAtlas atlas_from_json(const std::string& text) {
  PatternAtlas atlas;
  try {
    const auto j = nlohmann::json::parse(text);
    for (const auto& p : j.at("patterns")) {
      const std::string name = p.at("pattern");
      SimpleGraph g(p.at("n").get<int>());
      for (const auto& e : p.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
      if (canonical_code(g).hex() != p.at("code").get<std::string>())
        throw ParseError("atlas entry " + name + " does not match its code");
      atlas.graphs.emplace(name, g);
      atlas.key_rows.emplace(name, p.at("row").get<std::string>());
      atlas.match_cost.emplace(name, p.at("cost").get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("atlas JSON: ") + e.what());
  }
  return atlas;
}

CountVector pattern_counts(const SimpleGraph& g, const PatternAtlas& atlas) {
  CountVector c;
  c.c1 = g.vertex_count();
  c.c2 = g.edge_count();
  c.c3 = induced_count(cycle_graph(3), g);
  std::map<int, std::map<IsoClass, std::uint64_t>> census;
  auto count = [&](const std::string& name) {
    const SimpleGraph& h = atlas.at(name);
    auto& table = census[h.vertex_count()];
    if (table.empty() && g.vertex_count() >= h.vertex_count()) table = induced_census(g, h.vertex_count());
    auto it = table.find(canonical_code(h));
    return it == table.end() ? std::uint64_t{0} : it->second;
  };
  c.c41 = count("c41");
  c.c42 = count("c42");
  for (int i = 0; i < 5; ++i) c.c5[i] = count("c5" + std::to_string(i + 1));
  for (int i = 0; i < 19; ++i) c.c6[i] = count("c6" + std::to_string(i + 1));
  return c;
}

CountVector pattern_counts(const SimpleGraph& g) { return pattern_counts(g, default_atlas()); }

}  // namespace stablejones
