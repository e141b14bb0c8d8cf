#include <gtest/gtest.h>

#include "stablejones/enumerate.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/fixtures.hpp"
#include "stablejones/graph_io.hpp"
#include "stablejones/patterns.hpp"
#include "stablejones/stable_coeffs.hpp"
#include "stablejones/verify.hpp"

using namespace stablejones;

namespace {

const std::vector<TableRow>& rows() {
  static const auto r = load_table_fixture(default_data_dir() + "/tables.csv");
  return r;
}

const TableRow& row(const std::string& id) {
  for (const auto& r : rows())
    if (r.graph_id == id) return r;
  throw std::runtime_error("no row " + id);
}

}  // namespace

TEST(Fixture, ParsesAllRows) {
  EXPECT_EQ(rows().size(), 93u);
  const TableRow& k4 = row("G^6_1");
  ASSERT_TRUE(k4.c.has_value());
  EXPECT_EQ((*k4.c)[4], 1);
  EXPECT_EQ(k4.link_components(), 3);
  EXPECT_EQ(k4.edge_group(), 6);
  EXPECT_FALSE(row("Gv^6_1").c.has_value());
  EXPECT_EQ(row("Gv^6_1").edge_group(), -1);
  EXPECT_NE(k4.source.find("irreducible"), std::string::npos);
}

TEST(Fixture, RejectsMalformedRows) {
  EXPECT_THROW(parse_table_fixture("G^3_0,1,2\n", "t"), ParseError);
  EXPECT_THROW(parse_table_fixture("G^3_0,3,3,1,,0,1,1,0,0,0,3_1,1,-1,-1,0,0,1\n", "t"), ParseError);
  EXPECT_THROW(load_table_fixture("/nonexistent/tables.csv"), FixtureMissing);
}

TEST(Fixture, LinkComponentParsing) {
  TableRow r;
  r.link_name = "10^4_17";
  EXPECT_EQ(r.link_components(), 4);
  r.link_name = "6_1^2";
  EXPECT_EQ(r.link_components(), 2);
  r.link_name = "8_16";
  EXPECT_EQ(r.link_components(), 1);
  r.link_name = "L11a520";
  EXPECT_EQ(r.link_components(), 0);
}

TEST(StableCoeffs, PhiFormulaOnTriangleAndK4) {
  CountVector t;
  t.c1 = 3, t.c2 = 3, t.c3 = 1;
  const auto f = phi_formula(t);
  EXPECT_EQ(f[0], 1);
  EXPECT_EQ(f[1], -1);
  EXPECT_EQ(f[2], -1);
  EXPECT_EQ(f[3], 0);
  const auto k4 = pattern_counts(complete_graph(4));
  EXPECT_EQ(phi_formula(k4)[3], 5);
  EXPECT_EQ(product_prefix(k4), phi_series(complete_graph(4), 3));
}

TEST(StableCoeffs, ClosedFormsOnCorpus) {
  for (int e = 3; e <= 9; ++e)
    for (const auto& g : enumerate_planar_by_edges(e, GraphFilter::TwoEdgeConnected)) {
      const auto C = exponent_vector(g, 3);
      const long c3 = static_cast<long>(induced_count(cycle_graph(3), g));
      const long c41 = static_cast<long>(induced_count(cycle_graph(4), g));
      const long c42 = static_cast<long>(induced_count(complete_graph(4), g));
      EXPECT_EQ(C[0], 1 - g.vertex_count() + g.edge_count());
      EXPECT_EQ(C[1], c3);
      EXPECT_EQ(C[2], c3 - c41 + 2 * c42);
    }
}

TEST(StableCoeffs, ExponentVectorFromSeries) {
  EXPECT_EQ(exponent_vector(euler_power(1, 6), 6), std::vector<BigInt>(6, 1));
  EXPECT_THROW(exponent_vector(euler_power(1, 3), 5), InputError);
}

TEST(StableCoeffs, TheoremOneCorpus) {
  const auto r = verify_theorem1(8);
  EXPECT_GT(r.graphs, 30);
  EXPECT_TRUE(r.failures.empty()) << r.failures.front();
}

TEST(StableCoeffs, ConjecturedFormsOnTableGraphs) {
  const auto r = verify_conjecture45(default_atlas());
  EXPECT_EQ(r.graphs, static_cast<int>(table_graphs().size()));
  EXPECT_TRUE(r.failures.empty());
}

TEST(StableCoeffs, ExponentsInvariantUnderWhitneyFlip) {
  SimpleGraph g(8);
  for (auto [u, v] : std::vector<Edge>{{0, 2}, {2, 3}, {3, 1}, {2, 1}, {0, 4}, {4, 5}, {5, 1}, {4, 6}, {6, 7}, {7, 1}, {0, 6}})
    g.add_edge(u, v);
  const std::vector<int> side{2, 3};
  EXPECT_EQ(exponent_vector(g, 5), exponent_vector(whitney_flip(g, 0, 1, side), 5));
}

TEST(Fit, SolveExactUniqueUnderdeterminedInfeasible) {
  const std::vector<std::vector<Rational>> A{{1, 1}, {1, -1}};
  const auto unique = solve_exact(A, {3, 1});
  EXPECT_TRUE(unique.unique());
  EXPECT_EQ(unique.coefficients, (std::vector<Rational>{2, 1}));
  const auto line = solve_exact({{1, 1}, {2, 2}}, {1, 2});
  EXPECT_EQ(line.dimension, 1);
  EXPECT_THROW(solve_exact({{1, 1}, {1, 1}}, {1, 2}), Infeasible);
}

TEST(Fit, RecoversC4Uniquely) {
  const auto r = fit_C4(default_atlas());
  ASSERT_TRUE(r.fit.unique());
  const std::vector<Rational> expected{1, -1, 5, 1, -1, -2, -3, 0};
  EXPECT_EQ(r.fit.coefficients, expected);
}

TEST(Atlas, KeyRowsMatchWithoutCost) {
  const PatternAtlas& atlas = default_atlas();
  EXPECT_EQ(atlas.graphs.size(), 26u);
  EXPECT_EQ(canonical_code(atlas.at("c41")), canonical_code(cycle_graph(4)));
  EXPECT_EQ(canonical_code(atlas.at("c42")), canonical_code(complete_graph(4)));
  EXPECT_EQ(canonical_code(atlas.at("c51")), canonical_code(cycle_graph(5)));
  EXPECT_THROW(atlas.at("c77"), AtlasUnresolved);
  for (const auto& [name, cost] : atlas.match_cost) {
    const TableRow& r = row(atlas.key_rows.at(name));
    if (row_consistent(r)) EXPECT_EQ(cost, 0) << name;
  }
}

TEST(Atlas, JsonRoundTrip) {
  const PatternAtlas& atlas = default_atlas();
  const PatternAtlas back = atlas_from_json(atlas_to_json(atlas));
  EXPECT_EQ(back.key_rows, atlas.key_rows);
  for (const auto& [name, g] : atlas.graphs) EXPECT_EQ(canonical_code(back.at(name)), canonical_code(g));
}

TEST(Atlas, AmbiguousKeysAreRejected) {
  // Two keys naming the same row cannot both be satisfied without ambiguity.
  std::vector<AtlasKey> keys{{"c41", "G^4_0"}, {"c42", "G^4_0"}};
  EXPECT_THROW(identify_patterns(rows(), keys), Error);
}

TEST(Patterns, CountsMatchDirectInducedCounts) {
  const PatternAtlas& atlas = default_atlas();
  const SimpleGraph g = *named_graph("octahedron");
  const CountVector c = pattern_counts(g, atlas);
  for (const auto& name : CountVector::names()) {
    if (name.size() < 3) continue;
    EXPECT_EQ(c.get(name), induced_count(atlas.at(name), g)) << name;
  }
  EXPECT_EQ(c.c1, 6u);
  EXPECT_EQ(c.c2, 12u);
  EXPECT_EQ(c.c3, 8u);
  EXPECT_THROW(c.get("c9"), InputError);
  EXPECT_EQ(CountVector::names().size(), 29u);
}

TEST(Tables, EveryConsistentRowReproduced) {
  const TableReport report = verify_tables(rows());
  EXPECT_EQ(report.failures(), 0);
  for (const auto& r : report.rows) {
    if (r.consistent) EXPECT_EQ(r.status, "ok") << r.row;
    else EXPECT_EQ(r.status, "fixture-suspect") << r.row;
  }
  // The nine-edge table has no row for the 9-cycle.
  ASSERT_EQ(report.unmatched_graphs.size(), 1u);
  EXPECT_EQ(canonical_code(parse_graph6(report.unmatched_graphs[0])), canonical_code(cycle_graph(9)));
}

TEST(Tables, DetectsAlteredRow) {
  auto altered = rows();
  for (auto& r : altered)
    if (r.graph_id == "G^6_1") r.phi[5] += 1;
  const TableReport report = verify_tables(altered);
  EXPECT_EQ(report.suspects(), 6);
  bool flagged = false;
  for (const auto& m : report.mismatches) flagged |= m.row == "G^6_1" && m.field == "phi5";
  EXPECT_TRUE(flagged);
}

TEST(Tables, ReportsWrongCountAsMismatch) {
  auto altered = rows();
  for (auto& r : altered)
    if (r.graph_id == "G^6_1") r.link_name = "6^2_3";
  const TableReport report = verify_tables(altered);
  EXPECT_EQ(report.failures(), 1);
}

TEST(Census, Counts) {
  const auto r = census();
  EXPECT_EQ(r.by_edges, (std::vector<int>{1, 1, 1, 3, 3, 8, 17, 41}));
  EXPECT_EQ(r.by_vertices, (std::vector<int>{2, 5, 19}));
  EXPECT_TRUE(r.bound_violations.empty());
}

TEST(Question1, HoldsAtFifteen) {
  const auto r = check_question1(15);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs.order(), 15);
}
