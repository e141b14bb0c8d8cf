#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stablejones/graph.hpp"
#include "stablejones/plane_graph.hpp"

namespace stablejones {

// Edge-list text: a header line "n <count>" followed by one "u v" pair per
// line. '#' starts a comment. Loops and repeated pairs are kept.
Multigraph parse_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g);

// graph6 (undirected, n <= 62); an optional ">>graph6<<" prefix is accepted.
SimpleGraph parse_graph6(std::string_view text);
std::string to_graph6(const SimpleGraph& g);

// {"n": N, "rotation": [[...], ...], "root": r} where rotation[v] lists the
// neighbors of v in cyclic order. With an explicit "edges": [[u,v], ...]
// member, rotation[v] lists dart ids instead (2i = edges[i] read forward,
// 2i+1 = reversed), which allows parallel edges and loops.
// Optional "outer_face" picks a face id; default is the first face on root.
PlaneGraph parse_rotation_json(std::string_view text);
std::string to_rotation_json(const PlaneGraph& pg);

struct GraphInput {
  SimpleGraph graph;                   // reduced simple graph
  std::optional<PlaneGraph> embedding;  // pinned embedding, if one was given
  bool was_reduced = false;            // loops or parallel edges were dropped
};

// Detects the format from the content: '{' -> rotation JSON, leading "n" ->
// edge list, otherwise graph6.
GraphInput parse_graph_text(std::string_view text);
// Reads a file, or resolves a built-in name when no such file exists.
GraphInput load_graph(const std::string& path_or_name);

// Built-in names: triangle, square, bowtie, diamond, k<N>, c<N>, p<N>, w<N>,
// k<M>,<N>, k5-e, octahedron. Returns nullopt for unknown names.
std::optional<SimpleGraph> named_graph(std::string_view name);

}  // namespace stablejones
