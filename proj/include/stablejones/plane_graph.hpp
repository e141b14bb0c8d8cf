#pragma once

#include <span>
#include <vector>

#include "stablejones/graph.hpp"

namespace stablejones {

// A connected plane multigraph given by a rotation system. Edge i owns darts
// 2i (first endpoint -> second) and 2i+1 (reverse). Faces are traced with
// next(d) = successor of reverse(d) in the rotation at head(d), so every dart
// lies on exactly one face walk.
class PlaneGraph {
 public:
  // rotation[v] lists the darts leaving v in cyclic order. Throws InputError
  // on malformed rotations and NonPlanarEmbedding if V - E + F != 2.
  // outer_face < 0 picks the first face containing `root`.
  PlaneGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<int>> rotation,
             int root = 0, int outer_face = -1);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int dart_count() const noexcept { return 2 * edge_count(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::vector<int>>& rotation() const noexcept { return rotation_; }

  static int reverse(int dart) noexcept { return dart ^ 1; }
  int tail(int dart) const noexcept {
    const Edge& e = edges_[dart >> 1];
    return (dart & 1) ? e.second : e.first;
  }
  int head(int dart) const noexcept { return tail(dart ^ 1); }
  int next_in_face(int dart) const noexcept { return next_[dart]; }
  int face_of(int dart) const noexcept { return face_of_dart_[dart]; }

  // Dart walk of face f; the corners of f are the tails of these darts.
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }
  std::vector<int> face_vertices(int f) const;
  int face_length(int f) const { return static_cast<int>(faces_[f].size()); }

  int root_vertex() const noexcept { return root_; }
  int outer_face() const noexcept { return outer_; }
  // Same embedding, different root corner. The root must lie on outer_face.
  PlaneGraph rerooted(int root, int outer_face) const;

  // (face, vertex) incidences, one per occurrence on the face walk.
  std::vector<std::pair<int, int>> corners() const;

  // Underlying simple graph; throws InputError if there are loops or parallel edges.
  SimpleGraph simple_graph() const;
  bool is_simple() const;

 private:
  void trace_faces();

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> next_;
  std::vector<int> face_of_dart_;
  std::vector<std::vector<int>> faces_;
  int root_ = 0;
  int outer_ = 0;
};

// Any genus-0 rotation system of g (connected, at least one edge), outer face
// chosen as the first face containing root. Throws NotPlanar.
PlaneGraph find_planar_embedding(const SimpleGraph& g, int root = 0);
bool is_planar(const SimpleGraph& g);

// Every genus-0 rotation system of a connected graph, by exhaustive search
// over cyclic orders. Intended for small graphs (product of (deg-1)! small).
std::vector<PlaneGraph> all_planar_embeddings(const SimpleGraph& g);

// Whitney flip realized on an embedded graph: the abstract flip followed by a
// fresh embedding rooted at the same vertex.
PlaneGraph whitney_flip(const PlaneGraph& pg, int u, int v, std::span<const int> side);

}  // namespace stablejones
