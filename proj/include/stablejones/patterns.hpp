#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stablejones/fixtures.hpp"
#include "stablejones/graph.hpp"
#include "stablejones/states.hpp"

namespace stablejones {

// Induced pattern counts. c1, c2, c3 count vertices, edges and triangles;
// c4i, c5i, c6i count induced copies of the irreducible planar pattern graphs
// of the atlas.
struct CountVector {
  std::uint64_t c1 = 0, c2 = 0, c3 = 0, c41 = 0, c42 = 0;
  std::array<std::uint64_t, 5> c5{};
  std::array<std::uint64_t, 19> c6{};

  // "c1", "c41", "c55", "c619", ...; InputError for unknown names.
  std::uint64_t get(std::string_view name) const;
  // All 29 names in order.
  static const std::vector<std::string>& names();

  bool operator==(const CountVector&) const = default;
};

// Observable data of one graph that the tables record.
struct GraphSignature {
  std::array<long, 5> c{};    // c1, c2, c3, c41 (induced C4), c42 (induced K4)
  std::array<long, 5> C{};    // C1..C5
  std::array<long, 6> phi{};  // Phi modulo q^6
  int link_components = 0;    // components of the medial link
};
GraphSignature compute_signature(const SimpleGraph& g, const EngineOptions& opts = {});

// Cost of explaining `row` by `sig`: the number of disagreeing fields among
// c (when the row has it), C, phi and the component count (when known).
int row_cost(const TableRow& row, const GraphSignature& sig);
// True when the row's own columns agree with each other: C = product
// exponents of phi, and with c present C1 = 1 - c1 + c2, C2 = c3,
// C3 = c3 - c41 + 2 c42.
bool row_consistent(const TableRow& row);

struct PatternAtlas {
  std::map<std::string, SimpleGraph> graphs;    // "c41" .. "c619"
  std::map<std::string, std::string> key_rows;  // pattern -> row id
  std::map<std::string, int> match_cost;        // pattern -> row_cost of the match

  // AtlasUnresolved if the pattern is absent.
  const SimpleGraph& at(const std::string& pattern) const;
};

// Matches the irreducible planar graphs on 4, 5 and 6 vertices to the key
// rows by a minimum-cost assignment of row signatures. Throws AmbiguousMatch
// if an optimal assignment is not unique and AtlasUnresolved if some key row
// is explained only with a mismatch on an internally consistent row.
PatternAtlas identify_patterns(const std::vector<TableRow>& rows, const std::vector<AtlasKey>& keys,
                               const EngineOptions& opts = {});
// Resolved once from default_data_dir() and kept for the process lifetime.
const PatternAtlas& default_atlas();

std::string atlas_to_json(const PatternAtlas& atlas);
PatternAtlas atlas_from_json(const std::string& text);

CountVector pattern_counts(const SimpleGraph& g, const PatternAtlas& atlas);
CountVector pattern_counts(const SimpleGraph& g);

}  // namespace stablejones
