#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stablejones {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, adjacency held as bitmasks.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);
  SimpleGraph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return edge_count_; }

  // Set semantics: adding an existing edge is a no-op. Loops are rejected.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int add_vertex();

  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  SimpleGraph induced(std::span<const int> vertices) const;
  SimpleGraph induced_mask(std::uint64_t mask) const;
  // Vertex i of this graph becomes vertex perm[i] of the result.
  SimpleGraph relabeled(std::span<const int> perm) const;

  bool operator==(const SimpleGraph& other) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::uint64_t> adj_;
  int edge_count_ = 0;
};

// Multigraph with loops allowed; only used as input to reduce().
struct Multigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
};

SimpleGraph reduce(const Multigraph& g);

bool is_connected(const SimpleGraph& g);
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);
// Connected, at least 2 vertices, no bridge.
bool is_two_edge_connected(const SimpleGraph& g);
// Connected, at least 3 vertices, no cut vertex.
bool is_biconnected(const SimpleGraph& g);
std::vector<int> cut_vertices(const SimpleGraph& g);
// Blocks (maximal biconnected pieces or bridges) as vertex sets of g.
std::vector<std::vector<int>> blocks(const SimpleGraph& g);

// Irreducible factors under vertex- and edge-connected sum, sorted by
// canonical code. g is irreducible iff the result is {g} (up to isomorphism).
std::vector<SimpleGraph> connected_sum_factors(const SimpleGraph& g);
// Biconnected and not an edge-connected sum.
bool is_irreducible(const SimpleGraph& g);

// Exchanges the roles of u and v for every edge between `side` and {u, v}.
// Throws NotACut unless `side` is a nonempty union of components of
// g - {u, v} that leaves a nonempty remainder.
SimpleGraph whitney_flip(const SimpleGraph& g, int u, int v, std::span<const int> side);

// Named small graphs, used by tests and the CLI ("triangle", "k4", "c5", ...).
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int m, int n);
SimpleGraph wheel_graph(int rim);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);
// Identifies vertex `at_a` of a with vertex `at_b` of b.
SimpleGraph vertex_sum(const SimpleGraph& a, int at_a, const SimpleGraph& b, int at_b);

}  // namespace stablejones
