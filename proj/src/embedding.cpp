#include <algorithm>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "stablejones/errors.hpp"
#include "stablejones/plane_graph.hpp"

namespace stablejones {

PlaneGraph::PlaneGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::vector<int>> rotation,
                       int root, int outer_face)
    : vertex_count_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (vertex_count_ <= 0) throw EmptyGraph("plane graph needs at least one vertex");
  if (edges_.empty()) throw EmptyGraph("plane graph needs at least one edge");
  if (static_cast<int>(rotation_.size()) != vertex_count_)
    throw InputError("rotation system must list every vertex");
  for (auto [u, v] : edges_)
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
      throw InputError("edge endpoint out of range");
  std::vector<int> seen(dart_count(), 0);
  for (int v = 0; v < vertex_count_; ++v)
    for (int d : rotation_[v]) {
      if (d < 0 || d >= dart_count()) throw InputError("dart index out of range");
      if (tail(d) != v)
        throw InputError("dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                         " but leaves vertex " + std::to_string(tail(d)));
      if (seen[d]++) throw InputError("dart " + std::to_string(d) + " listed twice");
    }
  if (std::count(seen.begin(), seen.end(), 1) != dart_count())
    throw InputError("rotation system misses some darts");
  trace_faces();

  // Every vertex must be reachable; face tracing alone does not see isolated vertices.
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges_) parent[find(u)] = find(v);
  for (int v = 0; v < vertex_count_; ++v)
    if (find(v) != find(0)) throw InputError("plane graph must be connected");

  if (vertex_count_ - edge_count() + face_count() != 2)
    throw NonPlanarEmbedding("rotation system has genus > 0: V - E + F = " +
                             std::to_string(vertex_count_ - edge_count() + face_count()));

  if (root < 0 || root >= vertex_count_) throw InputError("root vertex out of range");
  root_ = root;
  if (outer_face < 0) {
    outer_face = -1;
    for (int f = 0; f < face_count() && outer_face < 0; ++f)
      for (int d : faces_[f])
        if (tail(d) == root) {
          outer_face = f;
          break;
        }
  }
  if (outer_face < 0 || outer_face >= face_count()) throw InputError("outer face out of range");
  const auto& walk = faces_[outer_face];
  if (std::none_of(walk.begin(), walk.end(), [&](int d) { return tail(d) == root; }))
    throw InputError("root vertex does not lie on the outer face");
  outer_ = outer_face;
}

void PlaneGraph::trace_faces() {
  const int darts = dart_count();
  std::vector<int> position(darts, 0);
  for (int v = 0; v < vertex_count_; ++v)
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) position[rotation_[v][i]] = static_cast<int>(i);
  next_.assign(darts, -1);
  for (int d = 0; d < darts; ++d) {
    const int r = reverse(d);
    const auto& rot = rotation_[head(d)];
    next_[d] = rot[(position[r] + 1) % rot.size()];
  }
  face_of_dart_.assign(darts, -1);
  faces_.clear();
  for (int d = 0; d < darts; ++d) {
    if (face_of_dart_[d] >= 0) continue;
    std::vector<int> walk;
    for (int x = d; face_of_dart_[x] < 0; x = next_[x]) {
      face_of_dart_[x] = static_cast<int>(faces_.size());
      walk.push_back(x);
    }
    faces_.push_back(std::move(walk));
  }
}

std::vector<int> PlaneGraph::face_vertices(int f) const {
  std::vector<int> out;
  for (int d : faces_[f]) out.push_back(tail(d));
  return out;
}

PlaneGraph PlaneGraph::rerooted(int root, int outer_face) const {
  return PlaneGraph(vertex_count_, edges_, rotation_, root, outer_face);
}

std::vector<std::pair<int, int>> PlaneGraph::corners() const {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < face_count(); ++f)
    for (int d : faces_[f]) out.emplace_back(f, tail(d));
  return out;
}

bool PlaneGraph::is_simple() const {
  std::vector<Edge> sorted;
  for (auto [u, v] : edges_) {
    if (u == v) return false;
    sorted.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

SimpleGraph PlaneGraph::simple_graph() const {
  if (!is_simple()) throw InputError("plane graph has loops or parallel edges");
  return SimpleGraph(vertex_count_, edges_);
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace

PlaneGraph find_planar_embedding(const SimpleGraph& g, int root) {
  if (g.edge_count() == 0) throw EmptyGraph("cannot embed a graph without edges");
  if (!is_connected(g)) throw InputError("cannot embed a disconnected graph");
  const auto edges = g.edges();
  BoostGraph bg(g.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [e, ok] = boost::add_edge(edges[i].first, edges[i].second, bg);
    boost::put(boost::edge_index, bg, e, static_cast<int>(i));
  }
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(g.vertex_count());
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = &embedding[0]);
  if (!planar) throw NotPlanar("graph is not planar");

  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const auto& e : embedding[v]) {
      const int idx = boost::get(boost::edge_index, bg, e);
      rotation[v].push_back(2 * idx + (edges[idx].first == v ? 0 : 1));
    }
  return PlaneGraph(g.vertex_count(), edges, std::move(rotation), root);
}

bool is_planar(const SimpleGraph& g) {
  // Planarity of a graph is the planarity of each component.
  for (const auto& comp : connected_components(g)) {
    SimpleGraph h = g.induced(comp);
    if (h.edge_count() < 9 || h.vertex_count() < 5) continue;
    if (h.edge_count() > 3 * h.vertex_count() - 6) return false;
    BoostGraph bg(h.vertex_count());
    for (auto [u, v] : h.edges()) boost::add_edge(u, v, bg);
    if (!boost::boyer_myrvold_planarity_test(bg)) return false;
  }
  return true;
}

std::vector<PlaneGraph> all_planar_embeddings(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw EmptyGraph("cannot embed a graph without edges");
  if (!is_connected(g)) throw InputError("cannot embed a disconnected graph");
  const auto edges = g.edges();
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out_darts(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out_darts[edges[i].first].push_back(2 * static_cast<int>(i));
    out_darts[edges[i].second].push_back(2 * static_cast<int>(i) + 1);
  }
  // Cyclic orders fix the first dart and permute the rest.
  std::vector<std::vector<int>> rotation = out_darts;
  std::vector<PlaneGraph> result;
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == n) {
      try {
        result.emplace_back(n, edges, rotation, 0);
      } catch (const NonPlanarEmbedding&) {
      }
      return;
    }
    auto& rot = rotation[v];
    std::sort(rot.begin() + (rot.empty() ? 0 : 1), rot.end());
    do {
      self(self, v + 1);
    } while (!rot.empty() && std::next_permutation(rot.begin() + 1, rot.end()));
  };
  recurse(recurse, 0);
  return result;
}

PlaneGraph whitney_flip(const PlaneGraph& pg, int u, int v, std::span<const int> side) {
  SimpleGraph flipped = whitney_flip(pg.simple_graph(), u, v, side);
  return find_planar_embedding(flipped, pg.root_vertex());
}

}  // namespace stablejones
