#pragma once

#include <string>
#include <vector>

#include "stablejones/fixtures.hpp"
#include "stablejones/patterns.hpp"
#include "stablejones/stable_coeffs.hpp"

namespace stablejones {

// Table reproduction. Rows are grouped (by edge count for "G^e_i", one group
// for the six-vertex table), and each group is matched to the computed
// irreducible graphs by a minimum-cost assignment. A row whose own columns
// contradict each other is reported as "fixture-suspect" rather than failing.
struct Mismatch {
  std::string row;
  std::string field;  // "c41", "C4", "phi5", "link_components"
  std::string expected;
  std::string actual;
  std::string status;  // "mismatch" or "fixture-suspect"
};

struct RowOutcome {
  std::string row;
  std::string graph;  // canonical hex of the matched graph, empty if none
  int cost = 0;
  bool consistent = true;
  std::string status;  // "ok", "fixture-suspect", "mismatch", "unmatched"
};

struct TableReport {
  std::vector<RowOutcome> rows;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> unmatched_graphs;  // computed graphs no row claims

  int failures() const;
  int suspects() const;
};

TableReport verify_tables(const std::vector<TableRow>& rows, const EngineOptions& opts = {});
std::string report_json(const TableReport& report);

// Every simple 2-edge-connected planar graph with at most max_edges edges:
// phi_0..phi_3 of the state sum on an embedding against the closed forms,
// and the three-factor product to O(q^4).
struct TheoremReport {
  int graphs = 0;
  std::vector<std::string> failures;
};
TheoremReport verify_theorem1(int max_edges = 8, const EngineOptions& opts = {});

// C_4 and C_5 against the conjectured forms on all irreducible graphs with
// 3..10 edges and all irreducible graphs on 6 vertices.
struct ConjectureReport {
  int graphs = 0;
  std::vector<std::string> failures;
};
ConjectureReport verify_conjecture45(const PatternAtlas& atlas, const EngineOptions& opts = {});

// Graphs used as evidence for the conjectured forms, deduplicated.
std::vector<SimpleGraph> table_graphs();

// Refits C_4 over {c3, c41, c42, c51..c55} on table_graphs().
struct FitReport {
  std::vector<std::string> patterns;
  LinearFit fit;
  int data_points = 0;
};
FitReport fit_C4(const PatternAtlas& atlas, const EngineOptions& opts = {});

// (Phi_K4)^2 against Phi_{K5-e} Phi_triangle modulo q^(K+1).
struct Question1Result {
  int order = 0;
  bool holds = false;
  TruncSeries lhs, rhs;
};
Question1Result check_question1(int K, const EngineOptions& opts = {});

struct CensusReport {
  std::vector<int> by_edges;     // irreducible graphs with 3..10 edges
  std::vector<int> by_vertices;  // irreducible graphs on 4..6 vertices
  int corpus = 0;                // 2-edge-connected planar graphs with <= 10 edges checked
  std::vector<std::string> bound_violations;  // v <= e <= 3v - 6 failures
};
CensusReport census();

}  // namespace stablejones
