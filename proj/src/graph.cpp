#include "stablejones/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "stablejones/canonical.hpp"
#include "stablejones/errors.hpp"

namespace stablejones {

SimpleGraph::SimpleGraph(int vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices)
    throw SizeLimit("vertex count " + std::to_string(vertex_count) + " out of range");
  adj_.assign(static_cast<std::size_t>(vertex_count), 0);
}

SimpleGraph::SimpleGraph(int vertex_count, std::span<const Edge> edges) : SimpleGraph(vertex_count) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(vertex_count()) + ")");
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u) + " in a simple graph");
  if (has_edge(u, v)) return;
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  ++edge_count_;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) return;
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
  --edge_count_;
}

bool SimpleGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

int SimpleGraph::add_vertex() {
  if (vertex_count() >= kMaxVertices) throw SizeLimit("too many vertices");
  adj_.push_back(0);
  return vertex_count() - 1;
}

int SimpleGraph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (std::uint64_t m = adj_[u] >> u; m; m &= m - 1) {
      int v = u + std::countr_zero(m);
      if (v > u) out.emplace_back(u, v);
    }
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
  SimpleGraph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

SimpleGraph SimpleGraph::induced_mask(std::uint64_t mask) const {
  std::vector<int> vs;
  for (std::uint64_t m = mask; m; m &= m - 1) vs.push_back(std::countr_zero(m));
  return induced(vs);
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != vertex_count()) throw InputError("permutation size mismatch");
  SimpleGraph h(vertex_count());
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

SimpleGraph reduce(const Multigraph& g) {
  SimpleGraph out(g.vertex_count);
  for (auto [u, v] : g.edges)
    if (u != v) out.add_edge(u, v);
  return out;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::uint64_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1) continue;
    std::uint64_t comp = std::uint64_t{1} << s, frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.neighbor_mask(std::countr_zero(m));
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> vs;
    for (std::uint64_t m = comp; m; m &= m - 1) vs.push_back(std::countr_zero(m));
    comps.push_back(std::move(vs));
  }
  return comps;
}

bool is_connected(const SimpleGraph& g) { return connected_components(g).size() <= 1; }

namespace {

// Hopcroft-Tarjan lowpoint pass; reports bridges, articulation points and
// biconnected components (as edge stacks).
struct LowPoint {
  const SimpleGraph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<std::vector<int>> blocks;
  std::vector<bool> is_cut;
  int bridges = 0;
  int timer = 0;

  explicit LowPoint(const SimpleGraph& graph)
      : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0),
        is_cut(graph.vertex_count(), false) {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (disc[v] < 0) {
        if (g.degree(v) == 0) {
          blocks.push_back({v});
          disc[v] = timer++;
          continue;
        }
        dfs(v, -1);
      }
  }

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        ++children;
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) ++bridges;
        if ((parent >= 0 && low[w] >= disc[v]) || (parent < 0 && children > 1)) is_cut[v] = true;
        if (low[w] >= disc[v]) pop_block(v, w);
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }

  void pop_block(int v, int w) {
    std::uint64_t mask = 0;
    while (!stack.empty()) {
      Edge e = stack.back();
      stack.pop_back();
      mask |= (std::uint64_t{1} << e.first) | (std::uint64_t{1} << e.second);
      if (e == Edge{v, w}) break;
    }
    std::vector<int> vs;
    for (std::uint64_t m = mask; m; m &= m - 1) vs.push_back(std::countr_zero(m));
    blocks.push_back(std::move(vs));
  }
};

}  // namespace

bool is_two_edge_connected(const SimpleGraph& g) {
  if (g.vertex_count() < 2 || !is_connected(g)) return false;
  return LowPoint(g).bridges == 0;
}

bool is_biconnected(const SimpleGraph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  return cut_vertices(g).empty();
}

std::vector<int> cut_vertices(const SimpleGraph& g) {
  LowPoint lp(g);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (lp.is_cut[v]) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> blocks(const SimpleGraph& g) {
  auto out = LowPoint(g).blocks;
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Splits a biconnected graph along an edge uv whose endpoints separate it.
// Returns false if there is no such edge.
bool split_edge_sum(const SimpleGraph& g, SimpleGraph& first, SimpleGraph& second) {
  const int n = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    std::vector<int> rest;
    for (int w = 0; w < n; ++w)
      if (w != u && w != v) rest.push_back(w);
    if (rest.empty()) continue;
    SimpleGraph h = g.induced(rest);
    auto comps = connected_components(h);
    if (comps.size() < 2) continue;
    std::vector<int> side_a{u, v}, side_b{u, v};
    for (int i : comps[0]) side_a.push_back(rest[i]);
    for (std::size_t c = 1; c < comps.size(); ++c)
      for (int i : comps[c]) side_b.push_back(rest[i]);
    first = g.induced(side_a);
    second = g.induced(side_b);
    return true;
  }
  return false;
}

void collect_factors(const SimpleGraph& g, std::vector<SimpleGraph>& out) {
  if (g.vertex_count() <= 2) {
    out.push_back(g);
    return;
  }
  if (!is_connected(g)) throw InputError("connected_sum_factors needs a connected graph");
  auto bs = blocks(g);
  if (bs.size() > 1) {
    for (const auto& b : bs) collect_factors(g.induced(b), out);
    return;
  }
  SimpleGraph a, b;
  if (split_edge_sum(g, a, b)) {
    collect_factors(a, out);
    collect_factors(b, out);
    return;
  }
  out.push_back(g);
}

}  // namespace

std::vector<SimpleGraph> connected_sum_factors(const SimpleGraph& g) {
  std::vector<SimpleGraph> out;
  collect_factors(g, out);
  std::vector<std::pair<IsoClass, SimpleGraph>> keyed;
  for (auto& f : out) keyed.emplace_back(canonical_code(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  out.clear();
  for (auto& [code, f] : keyed) out.push_back(std::move(f));
  return out;
}

bool is_irreducible(const SimpleGraph& g) {
  if (!is_biconnected(g)) return false;
  SimpleGraph a, b;
  return !split_edge_sum(g, a, b);
}

SimpleGraph whitney_flip(const SimpleGraph& g, int u, int v, std::span<const int> side) {
  const int n = g.vertex_count();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw NotACut("cut vertices invalid");
  std::uint64_t side_mask = 0;
  for (int w : side) {
    if (w < 0 || w >= n || w == u || w == v) throw NotACut("side must avoid the cut vertices");
    side_mask |= std::uint64_t{1} << w;
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t cut = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  const std::uint64_t other = all & ~side_mask & ~cut;
  if (side_mask == 0 || other == 0) throw NotACut("removing {u,v} does not separate the side");
  for (std::uint64_t m = side_mask; m; m &= m - 1)
    if (g.neighbor_mask(std::countr_zero(m)) & other)
      throw NotACut("side is joined to the rest outside {u,v}");

  SimpleGraph out(n);
  for (auto [x, y] : g.edges()) {
    auto swap_cut = [&](int w) { return w == u ? v : (w == v ? u : w); };
    const bool x_side = (side_mask >> x) & 1, y_side = (side_mask >> y) & 1;
    if (x_side && !y_side) y = swap_cut(y);
    else if (y_side && !x_side) x = swap_cut(x);
    out.add_edge(x, y);
  }
  return out;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph complete_bipartite(int m, int n) {
  SimpleGraph g(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

SimpleGraph wheel_graph(int rim) {
  SimpleGraph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(i, (i + 1) % rim);
    g.add_edge(i, rim);
  }
  return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
  return g;
}

SimpleGraph vertex_sum(const SimpleGraph& a, int at_a, const SimpleGraph& b, int at_b) {
  const int n = a.vertex_count() + b.vertex_count() - 1;
  std::vector<int> map_b(b.vertex_count());
  int next = a.vertex_count();
  for (int w = 0; w < b.vertex_count(); ++w) map_b[w] = (w == at_b) ? at_a : next++;
  SimpleGraph g(n);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(map_b[u], map_b[v]);
  return g;
}

}  // namespace stablejones
