#include "stablejones/verify.hpp"

#include <json.hpp>
#include <map>
#include <set>

#include "assignment.hpp"
#include "state_layout.hpp"
#include "stablejones/canonical.hpp"
#include "stablejones/enumerate.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/graph_io.hpp"

namespace stablejones {

int TableReport::failures() const {
  int n = 0;
  for (const auto& r : rows) n += r.status == "mismatch" || r.status == "unmatched";
  return n;
}

int TableReport::suspects() const {
  int n = 0;
  for (const auto& r : rows) n += r.status == "fixture-suspect";
  return n;
}

namespace {

constexpr long kUnmatchedCost = 100;

std::vector<GraphSignature> signatures(const std::vector<SimpleGraph>& graphs, const EngineOptions& opts) {
  std::vector<GraphSignature> out(graphs.size());
  EngineOptions inner = opts;
  inner.threads = 1;
  detail::parallel_for(static_cast<int>(graphs.size()), opts.threads,
                       [&](int i) { out[i] = compute_signature(graphs[i], inner); });
  return out;
}

void list_mismatches(const TableRow& row, const GraphSignature& sig, const std::string& status,
                     std::vector<Mismatch>& out) {
  auto add = [&](const std::string& field, long expected, long actual) {
    if (expected != actual) out.push_back({row.graph_id, field, std::to_string(expected), std::to_string(actual), status});
  };
  static const char* c_names[] = {"c1", "c2", "c3", "c41", "c42"};
  if (row.c)
    for (int i = 0; i < 5; ++i) add(c_names[i], (*row.c)[i], sig.c[i]);
  for (int i = 0; i < 5; ++i) add("C" + std::to_string(i + 1), row.C[i], sig.C[i]);
  for (int i = 0; i < 6; ++i) add("phi" + std::to_string(i), row.phi[i], sig.phi[i]);
  if (row.link_components()) add("link_components", row.link_components(), sig.link_components);
}

}  // namespace

TableReport verify_tables(const std::vector<TableRow>& rows, const EngineOptions& opts) {
  // Group key: edge count, or -6 for the six-vertex table.
  std::map<int, std::vector<const TableRow*>> groups;
  for (const auto& r : rows) {
    const int e = r.edge_group();
    if (e >= 0) {
      groups[e].push_back(&r);
    } else if (r.graph_id.rfind("Gv^6_", 0) == 0) {
      groups[-6].push_back(&r);
    } else {
      throw ParseError(r.origin + ": unrecognized row id " + r.graph_id);
    }
  }

  TableReport report;
  for (const auto& [key, members] : groups) {
    if (key > 12) throw SizeLimit("table rows beyond 12 edges are not supported");
    const auto graphs = key < 0 ? enumerate_connected_planar(-key, GraphFilter::Irreducible)
                                : enumerate_planar_by_edges(key, GraphFilter::Irreducible);
    const auto sigs = signatures(graphs, opts);
    // Dummy columns let surplus rows stay unmatched.
    const std::size_t cols = graphs.size() + members.size();
    std::vector<std::vector<long>> cost(members.size(), std::vector<long>(cols, kUnmatchedCost));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < graphs.size(); ++j) cost[i][j] = row_cost(*members[i], sigs[j]);
    const auto column = detail::min_cost_assignment(cost);

    std::vector<char> claimed(graphs.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const TableRow& row = *members[i];
      RowOutcome out;
      out.row = row.graph_id;
      out.consistent = row_consistent(row);
      const auto j = static_cast<std::size_t>(column[i]);
      if (j >= graphs.size()) {
        out.status = "unmatched";
        out.cost = static_cast<int>(kUnmatchedCost);
        report.rows.push_back(out);
        continue;
      }
      claimed[j] = 1;
      out.graph = canonical_code(graphs[j]).hex();
      out.cost = static_cast<int>(cost[i][j]);
      out.status = out.cost == 0 ? "ok" : out.consistent ? "mismatch" : "fixture-suspect";
      if (out.cost) list_mismatches(row, sigs[j], out.status, report.mismatches);
      report.rows.push_back(out);
    }
    for (std::size_t j = 0; j < graphs.size(); ++j)
      if (!claimed[j]) report.unmatched_graphs.push_back(to_graph6(graphs[j]));
  }
  return report;
}

std::string report_json(const TableReport& report) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : report.mismatches)
    mismatches.push_back(
        {{"row", m.row}, {"field", m.field}, {"expected", m.expected}, {"actual", m.actual}, {"status", m.status}});
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"row", r.row}, {"graph", r.graph}, {"cost", r.cost}, {"consistent", r.consistent},
                    {"status", r.status}});
  return nlohmann::json{{"failures", report.failures()},
                        {"suspects", report.suspects()},
                        {"mismatches", mismatches},
                        {"rows", rows},
                        {"unmatched_graphs", report.unmatched_graphs}}
      .dump();
}

TheoremReport verify_theorem1(int max_edges, const EngineOptions& opts) {
  TheoremReport report;
  for (int e = 3; e <= max_edges; ++e) {
    for (const auto& g : enumerate_planar_by_edges(e, GraphFilter::TwoEdgeConnected)) {
      ++report.graphs;
      const CountVector c{.c1 = static_cast<std::uint64_t>(g.vertex_count()),
                          .c2 = static_cast<std::uint64_t>(g.edge_count()),
                          .c3 = induced_count(cycle_graph(3), g),
                          .c41 = induced_count(cycle_graph(4), g),
                          .c42 = induced_count(complete_graph(4), g)};
      const TruncSeries phi = phi_series(find_planar_embedding(g), 3, opts);
      const auto formula = phi_formula(c);
      const TruncSeries prefix = product_prefix(c);
      for (int k = 0; k <= 3; ++k) {
        if (phi[k] != formula[k] || phi[k] != prefix[k])
          report.failures.push_back(to_graph6(g) + ": coefficient of q^" + std::to_string(k) + " is " +
                                    phi[k].str() + ", closed form " + formula[k].str() + ", product " +
                                    prefix[k].str());
      }
    }
  }
  return report;
}

std::vector<SimpleGraph> table_graphs() {
  std::vector<SimpleGraph> out;
  std::set<IsoClass> seen;
  auto take = [&](const std::vector<SimpleGraph>& gs) {
    for (const auto& g : gs)
      if (seen.insert(canonical_code(g)).second) out.push_back(g);
  };
  for (int e = 3; e <= 10; ++e) take(enumerate_planar_by_edges(e, GraphFilter::Irreducible));
  take(enumerate_connected_planar(6, GraphFilter::Irreducible));
  return out;
}

namespace {

std::vector<std::vector<BigInt>> exponent_vectors(const std::vector<SimpleGraph>& graphs, int K,
                                                  const EngineOptions& opts) {
  std::vector<std::vector<BigInt>> out(graphs.size());
  EngineOptions inner = opts;
  inner.threads = 1;
  detail::parallel_for(static_cast<int>(graphs.size()), opts.threads,
                       [&](int i) { out[i] = exponent_vector(graphs[i], K, inner); });
  return out;
}

}  // namespace

ConjectureReport verify_conjecture45(const PatternAtlas& atlas, const EngineOptions& opts) {
  ConjectureReport report;
  const auto graphs = table_graphs();
  const auto C = exponent_vectors(graphs, 5, opts);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++report.graphs;
    const CountVector c = pattern_counts(graphs[i], atlas);
    const BigInt f4 = conjecture_C4(c), f5 = conjecture_C5(c);
    if (C[i][3] != f4)
      report.failures.push_back(to_graph6(graphs[i]) + ": C4 = " + C[i][3].str() + ", form gives " + f4.str());
    if (C[i][4] != f5)
      report.failures.push_back(to_graph6(graphs[i]) + ": C5 = " + C[i][4].str() + ", form gives " + f5.str());
  }
  return report;
}

FitReport fit_C4(const PatternAtlas& atlas, const EngineOptions& opts) {
  FitReport report;
  report.patterns = {"c3", "c41", "c42", "c51", "c52", "c53", "c54", "c55"};
  std::vector<QuantumGraph> patterns{triangle()};
  for (std::size_t i = 1; i < report.patterns.size(); ++i) patterns.emplace_back(atlas.at(report.patterns[i]));
  const auto graphs = table_graphs();
  const auto C = exponent_vectors(graphs, 4, opts);
  std::vector<std::pair<SimpleGraph, BigInt>> data;
  for (std::size_t i = 0; i < graphs.size(); ++i) data.emplace_back(graphs[i], C[i][3]);
  report.data_points = static_cast<int>(data.size());
  report.fit = fit_linear_form(patterns, data);
  return report;
}

Question1Result check_question1(int K, const EngineOptions& opts) {
  Question1Result r;
  r.order = K;
  const TruncSeries k4 = phi_series(complete_graph(4), K, opts);
  r.lhs = k4 * k4;
  r.rhs = phi_series(*named_graph("k5-e"), K, opts) * phi_series(cycle_graph(3), K, opts);
  r.holds = r.lhs == r.rhs;
  return r;
}

CensusReport census() {
  CensusReport report;
  for (int e = 3; e <= 10; ++e) {
    report.by_edges.push_back(static_cast<int>(enumerate_planar_by_edges(e, GraphFilter::Irreducible).size()));
    for (const auto& g : enumerate_planar_by_edges(e, GraphFilter::TwoEdgeConnected)) {
      ++report.corpus;
      const int v = g.vertex_count();
      if (!(v <= e && e <= 3 * v - 6))
        report.bound_violations.push_back(to_graph6(g) + ": v = " + std::to_string(v) + ", e = " + std::to_string(e));
    }
  }
  for (int n = 4; n <= 6; ++n)
    report.by_vertices.push_back(static_cast<int>(enumerate_connected_planar(n, GraphFilter::Irreducible).size()));
  return report;
}

}  // namespace stablejones
