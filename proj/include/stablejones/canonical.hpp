#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "stablejones/graph.hpp"

namespace stablejones {

// Isomorphism class of a simple graph. The code is one byte holding the
// vertex count followed by the upper triangle of the canonically relabeled
// adjacency matrix, packed row-major, most significant bit first.
struct IsoClass {
  std::string code;

  std::string hex() const;
  static IsoClass from_hex(const std::string& hex);
  // Canonical representative of the class.
  SimpleGraph graph() const;
  int vertex_count() const { return code.empty() ? 0 : static_cast<unsigned char>(code[0]); }

  auto operator<=>(const IsoClass&) const = default;
};

IsoClass canonical_code(const SimpleGraph& g);
// perm[v] = canonical position of vertex v.
std::vector<int> canonical_labeling(const SimpleGraph& g);

// |Aut(g)| by backtracking over degree-compatible vertex maps.
std::uint64_t automorphism_count(const SimpleGraph& g);

}  // namespace stablejones

template <>
struct std::hash<stablejones::IsoClass> {
  std::size_t operator()(const stablejones::IsoClass& c) const noexcept {
    return std::hash<std::string>{}(c.code);
  }
};
