#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "stablejones/canonical.hpp"
#include "stablejones/enumerate.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/graph.hpp"
#include "stablejones/graph_io.hpp"
#include "stablejones/plane_graph.hpp"

using namespace stablejones;

namespace {

std::vector<int> shuffled(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::multiset<int> degrees(const SimpleGraph& g) {
  std::multiset<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.insert(g.degree(v));
  return d;
}

std::vector<IsoClass> factor_codes(const SimpleGraph& g) {
  std::vector<IsoClass> out;
  for (const auto& f : connected_sum_factors(g)) out.push_back(canonical_code(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(SimpleGraph, SetSemanticsAndLoops) {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_THROW(g.add_edge(2, 2), InputError);
  EXPECT_THROW(g.add_edge(0, 3), InputError);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(SimpleGraph, ReduceDropsLoopsAndParallels) {
  const Multigraph m{3, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 0}}};
  const SimpleGraph g = reduce(m);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(canonical_code(g), canonical_code(cycle_graph(3)));
}

TEST(SimpleGraph, Connectivity) {
  EXPECT_TRUE(is_two_edge_connected(cycle_graph(5)));
  EXPECT_FALSE(is_two_edge_connected(path_graph(4)));
  EXPECT_TRUE(is_biconnected(complete_graph(4)));
  const SimpleGraph bowtie = *named_graph("bowtie");
  EXPECT_TRUE(is_two_edge_connected(bowtie));
  EXPECT_FALSE(is_biconnected(bowtie));
  EXPECT_EQ(cut_vertices(bowtie).size(), 1u);
  EXPECT_EQ(blocks(bowtie).size(), 2u);
  EXPECT_EQ(connected_components(disjoint_union(cycle_graph(3), path_graph(2))).size(), 2u);
}

TEST(ConnectedSum, IrreducibleExamples) {
  EXPECT_TRUE(is_irreducible(cycle_graph(3)));
  EXPECT_TRUE(is_irreducible(complete_graph(4)));
  EXPECT_TRUE(is_irreducible(*named_graph("octahedron")));
  // The diamond is two triangles sharing an edge.
  EXPECT_FALSE(is_irreducible(*named_graph("diamond")));
  EXPECT_EQ(connected_sum_factors(*named_graph("diamond")).size(), 2u);
  EXPECT_FALSE(is_irreducible(*named_graph("bowtie")));
}

TEST(ConnectedSum, FactorsInvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (int e = 3; e <= 8; ++e)
    for (const auto& g : enumerate_planar_by_edges(e, GraphFilter::TwoEdgeConnected)) {
      const auto perm = shuffled(g.vertex_count(), rng);
      EXPECT_EQ(factor_codes(g), factor_codes(g.relabeled(perm))) << to_graph6(g);
    }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (const auto& g : all_graphs(6)) {
    const auto perm = shuffled(6, rng);
    EXPECT_EQ(canonical_code(g), canonical_code(g.relabeled(perm)));
    EXPECT_EQ(canonical_code(canonical_code(g).graph()), canonical_code(g));
  }
  EXPECT_EQ(automorphism_count(complete_graph(4)), 24u);
  EXPECT_EQ(automorphism_count(cycle_graph(5)), 10u);
}

TEST(Canonical, HexRoundTrip) {
  const IsoClass c = canonical_code(wheel_graph(5));
  EXPECT_EQ(IsoClass::from_hex(c.hex()), c);
}

TEST(Enumerate, AllGraphsCounts) {
  // Unlabeled simple graphs on n vertices.
  const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(all_graphs(n).size(), expected[n - 1]) << n;
}

// Brute force: every labeled graph on n vertices, filtered and bucketed.
TEST(Enumerate, ConnectedPlanarMatchesBruteForce) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<IsoClass> classes;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      SimpleGraph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
      if (!is_connected(g)) continue;
      try {
        find_planar_embedding(g);
      } catch (const NotPlanar&) {
        continue;
      }
      classes.insert(canonical_code(g));
    }
    std::set<IsoClass> listed;
    for (const auto& g : enumerate_connected_planar(n)) listed.insert(canonical_code(g));
    EXPECT_EQ(listed, classes) << "n = " << n;
  }
}

TEST(Enumerate, IrreducibleCensus) {
  const std::vector<std::size_t> by_edges{1, 1, 1, 3, 3, 8, 17, 41};
  for (int e = 3; e <= 10; ++e)
    EXPECT_EQ(enumerate_planar_by_edges(e, GraphFilter::Irreducible).size(), by_edges[e - 3]) << e;
  EXPECT_EQ(enumerate_connected_planar(4, GraphFilter::Irreducible).size(), 2u);
  EXPECT_EQ(enumerate_connected_planar(5, GraphFilter::Irreducible).size(), 5u);
  EXPECT_EQ(enumerate_connected_planar(6, GraphFilter::Irreducible).size(), 19u);
}

TEST(Enumerate, EdgeBoundsOnTwoEdgeConnected) {
  for (int e = 3; e <= 9; ++e)
    for (const auto& g : enumerate_planar_by_edges(e, GraphFilter::TwoEdgeConnected)) {
      EXPECT_LE(g.vertex_count(), e);
      EXPECT_LE(e, 3 * g.vertex_count() - 6);
    }
}

TEST(Embedding, EulerOnEveryEmbedding) {
  for (const auto& g : enumerate_connected_planar(5)) {
    const PlaneGraph pg = find_planar_embedding(g);
    EXPECT_EQ(pg.vertex_count() - pg.edge_count() + pg.face_count(), 2);
    std::vector<int> seen(pg.dart_count(), 0);
    for (int f = 0; f < pg.face_count(); ++f)
      for (int d : pg.face_darts(f)) ++seen[d];
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }
}

TEST(Embedding, RejectsNonPlanar) {
  EXPECT_THROW(find_planar_embedding(complete_graph(5)), NotPlanar);
  EXPECT_THROW(find_planar_embedding(complete_bipartite(3, 3)), NotPlanar);
  EXPECT_FALSE(is_planar(complete_graph(5)));
}

TEST(Embedding, OnlyTwoOfSixteenK4RotationsArePlanar) {
  const auto k4 = complete_graph(4).edges();
  int planar = 0;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<int>> rotation(4);
    for (std::size_t i = 0; i < k4.size(); ++i) {
      rotation[k4[i].first].push_back(2 * static_cast<int>(i));
      rotation[k4[i].second].push_back(2 * static_cast<int>(i) + 1);
    }
    for (int v = 0; v < 4; ++v)
      if (mask >> v & 1) std::swap(rotation[v][1], rotation[v][2]);
    try {
      PlaneGraph pg(4, k4, rotation);
      ++planar;
    } catch (const NonPlanarEmbedding&) {
    }
  }
  EXPECT_EQ(planar, 2);
}

TEST(Embedding, AllEmbeddingsOfSmallGraphs) {
  EXPECT_EQ(all_planar_embeddings(complete_graph(4)).size(), 2u);  // mirror images
  for (const auto& pg : all_planar_embeddings(*named_graph("diamond")))
    EXPECT_EQ(pg.face_count(), 3);
}

TEST(WhitneyFlip, PreservesCountsAndDegrees) {
  // Hexagon 0-2-4-1-5-3-0 with chord 0-1: g - {0,1} splits into {2,4} and {3,5}.
  SimpleGraph g(6);
  for (auto [u, v] : std::vector<Edge>{{0, 2}, {2, 4}, {4, 1}, {1, 5}, {5, 3}, {3, 0}, {0, 1}, {2, 1}}) g.add_edge(u, v);
  const std::vector<int> side{2, 4};
  const SimpleGraph h = whitney_flip(g, 0, 1, side);
  EXPECT_EQ(h.vertex_count(), g.vertex_count());
  EXPECT_EQ(h.edge_count(), g.edge_count());
  EXPECT_EQ(degrees(h), degrees(g));
  const std::vector<int> everything{2, 3, 4, 5};
  EXPECT_THROW(whitney_flip(g, 0, 1, everything), NotACut);
  const std::vector<int> half{2};
  EXPECT_THROW(whitney_flip(g, 0, 1, half), NotACut);
}

TEST(GraphIo, Graph6RoundTrip) {
  for (const auto& g : enumerate_connected_planar(6)) EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete_graph(4));
  EXPECT_THROW(parse_graph6("C"), ParseError);
}

TEST(GraphIo, EdgeList) {
  const auto input = parse_graph_text("n 3\n0 1\n1 2 # comment\n2 0\n2 0\n");
  EXPECT_EQ(input.graph, cycle_graph(3));
  EXPECT_TRUE(input.was_reduced);
  EXPECT_EQ(parse_graph_text(to_edge_list(wheel_graph(4))).graph, wheel_graph(4));
  EXPECT_THROW(parse_graph_text("n 2\n0 5\n"), Error);
}

TEST(GraphIo, RotationJsonRoundTrip) {
  const PlaneGraph pg = find_planar_embedding(*named_graph("octahedron"));
  const PlaneGraph back = parse_rotation_json(to_rotation_json(pg));
  EXPECT_EQ(back.rotation(), pg.rotation());
  EXPECT_EQ(back.outer_face(), pg.outer_face());
  const auto input = parse_graph_text(to_rotation_json(pg));
  ASSERT_TRUE(input.embedding.has_value());
  EXPECT_EQ(input.graph.edge_count(), 12);
}

TEST(GraphIo, NamedGraphs) {
  EXPECT_EQ(named_graph("k5-e")->edge_count(), 9);
  EXPECT_EQ(named_graph("octahedron")->edge_count(), 12);
  EXPECT_EQ(named_graph("k2,3")->edge_count(), 6);
  EXPECT_FALSE(named_graph("nonsense").has_value());
  EXPECT_THROW(load_graph("/nonexistent/nonsense"), Error);
}
