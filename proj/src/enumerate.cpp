#include "stablejones/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "stablejones/canonical.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/plane_graph.hpp"

namespace stablejones {

namespace {

bool passes(const SimpleGraph& g, GraphFilter filter) {
  switch (filter) {
    case GraphFilter::All: return true;
    case GraphFilter::TwoEdgeConnected: return is_two_edge_connected(g);
    case GraphFilter::Irreducible: return is_irreducible(g);
  }
  return false;
}

// Connected planar graphs grown one edge at a time from K2; planarity is
// closed under subgraphs so nonplanar graphs are dropped as soon as they appear.
// levels[e] holds the classes with e edges and at most max_vertices vertices.
std::vector<std::set<IsoClass>> grow_connected_planar(int max_edges, int max_vertices) {
  std::vector<std::set<IsoClass>> levels(max_edges + 1);
  if (max_edges >= 1 && max_vertices >= 2) levels[1].insert(canonical_code(complete_graph(2)));
  for (int e = 1; e < max_edges; ++e) {
    for (const auto& cls : levels[e]) {
      const SimpleGraph g = cls.graph();
      const int n = g.vertex_count();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          SimpleGraph h = g;
          h.add_edge(u, v);
          if (is_planar(h)) levels[e + 1].insert(canonical_code(h));
        }
      if (n < max_vertices)
        for (int u = 0; u < n; ++u) {
          SimpleGraph h = g;
          const int w = h.add_vertex();
          h.add_edge(u, w);
          levels[e + 1].insert(canonical_code(h));
        }
    }
  }
  return levels;
}

std::mutex cache_mutex;

const std::vector<std::set<IsoClass>>& cached_levels(int max_edges, int max_vertices) {
  static std::map<std::pair<int, int>, std::vector<std::set<IsoClass>>> cache;
  std::lock_guard lock(cache_mutex);
  auto key = std::make_pair(max_edges, max_vertices);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, grow_connected_planar(max_edges, max_vertices)).first;
  return it->second;
}

}  // namespace

std::vector<SimpleGraph> all_graphs(int n) {
  if (n < 0 || n > 9) throw SizeLimit("all_graphs supports n <= 9");
  std::set<IsoClass> level{canonical_code(SimpleGraph(n))}, all = level;
  const int max_edges = n * (n - 1) / 2;
  for (int e = 0; e < max_edges; ++e) {
    std::set<IsoClass> next;
    for (const auto& cls : level) {
      const SimpleGraph g = cls.graph();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          SimpleGraph h = g;
          h.add_edge(u, v);
          next.insert(canonical_code(h));
        }
    }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<SimpleGraph> out;
  for (const auto& cls : all) out.push_back(cls.graph());
  return out;
}

std::vector<SimpleGraph> enumerate_connected_planar(int n, GraphFilter filter) {
  if (n < 1 || n > 7) throw SizeLimit("enumerate_connected_planar supports 1 <= n <= 7");
  if (n == 1) return passes(SimpleGraph(1), filter) ? std::vector<SimpleGraph>{SimpleGraph(1)}
                                                    : std::vector<SimpleGraph>{};
  const int max_edges = n == 2 ? 1 : 3 * n - 6;
  const auto& levels = cached_levels(max_edges, n);
  std::vector<SimpleGraph> out;
  std::set<IsoClass> codes;
  for (const auto& level : levels)
    for (const auto& cls : level)
      if (cls.vertex_count() == n) codes.insert(cls);
  for (const auto& cls : codes) {
    SimpleGraph g = cls.graph();
    if (passes(g, filter)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimpleGraph> enumerate_planar_by_edges(int edges, GraphFilter filter) {
  if (edges < 1 || edges > 12) throw SizeLimit("enumerate_planar_by_edges supports 1 <= edges <= 12");
  const auto& levels = cached_levels(edges, edges + 1);
  std::vector<std::pair<IsoClass, SimpleGraph>> keyed;
  for (const auto& cls : levels[edges]) {
    SimpleGraph g = cls.graph();
    if (passes(g, filter)) keyed.emplace_back(cls, std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.vertex_count() != b.first.vertex_count())
      return a.first.vertex_count() < b.first.vertex_count();
    return a.first < b.first;
  });
  std::vector<SimpleGraph> out;
  for (auto& [cls, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace stablejones
