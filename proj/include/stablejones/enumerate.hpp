#pragma once

#include <vector>

#include "stablejones/graph.hpp"

namespace stablejones {

enum class GraphFilter { All, TwoEdgeConnected, Irreducible };

// One representative per isomorphism class of simple graphs on exactly n
// vertices, in canonical-code order (canonical labeling).
std::vector<SimpleGraph> all_graphs(int n);

// Connected planar simple graphs on exactly n vertices (n <= 7), one per
// isomorphism class, sorted by canonical code.
std::vector<SimpleGraph> enumerate_connected_planar(int n, GraphFilter filter = GraphFilter::All);

// Connected planar simple graphs with exactly `edges` edges (<= 12), one per
// isomorphism class, sorted by (vertex count, canonical code).
std::vector<SimpleGraph> enumerate_planar_by_edges(int edges, GraphFilter filter = GraphFilter::All);

}  // namespace stablejones
