#pragma once

#include <string>
#include <vector>

#include "stablejones/plane_graph.hpp"

namespace stablejones {

struct Passage {
  int crossing = 0;  // edge id of the source graph
  bool over = false;
  int dart = 0;      // dart of the crossing edge that fixes the local direction

  bool operator==(const Passage&) const = default;
};

// Alternating diagram whose Tait graph is the source plane graph: one crossing
// per edge, strands running through the medial graph. Rotations are read
// counterclockwise; over/under is chosen so the triangle gives the
// left-handed trefoil. Components are listed by their lowest crossing and
// each starts at the over passage of that crossing.
struct LinkDiagram {
  int crossings = 0;
  std::vector<std::vector<Passage>> components;
};

// Throws EmptyGraph when the graph has no edge.
LinkDiagram medial_link(const PlaneGraph& pg);
int link_component_count(const PlaneGraph& pg);
// Sum of crossing signs for the traversal orientation of each component.
int writhe(const LinkDiagram& d);

// Passages are labelled 1..2n along the components in order, so odd labels
// fall on over passages and even labels on under passages. components[k]
// lists, for the odd labels of component k in increasing order, the paired
// even label. All entries are positive for an alternating diagram.
struct DTCode {
  int crossings = 0;
  std::vector<std::vector<int>> components;

  bool operator==(const DTCode&) const = default;
};

DTCode dt_code(const LinkDiagram& d);
// Rebuilds the passage structure from a code: crossing i is the one carrying
// odd label 2i+1. Throws InputError on codes that are not perfect matchings.
LinkDiagram diagram_from_dt(const DTCode& code);
// Same component lengths and a crossing bijection carrying one passage
// sequence onto the other, over flags included.
bool same_passage_structure(const LinkDiagram& a, const LinkDiagram& b);

std::string dt_json(const DTCode& code);
// Knots: the even labels separated by spaces. Links: components separated by " | ".
std::string dt_plain(const DTCode& code);

}  // namespace stablejones
