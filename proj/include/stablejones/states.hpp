#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "stablejones/graph.hpp"
#include "stablejones/plane_graph.hpp"
#include "stablejones/qseries.hpp"

namespace stablejones {

// a is indexed by face id, b by vertex id. Admissible when a_p + b_v >= 0 at
// every corner, a at the outer face is 0 and b at the root is 0.
struct AdmissibleState {
  std::vector<long> a;
  std::vector<long> b;

  auto operator<=>(const AdmissibleState&) const = default;
};

struct StateWeight {
  long A = 0;
  long B = 0;
  int sign = 1;                    // (-1)^B
  std::vector<long> denominators;  // a_p + b_v per corner, sorted

  long twice_degree() const { return A + B; }
  auto operator<=>(const StateWeight&) const = default;
};

struct WeightedState {
  AdmissibleState state;
  StateWeight weight;

  auto operator<=>(const WeightedState&) const = default;
};

bool is_admissible(const PlaneGraph& pg, const AdmissibleState& s);

// sum_p gamma(p) + 2 sum_edges b_v b_w, over all faces.
long form_A(const PlaneGraph& pg, const AdmissibleState& s);

// The face-by-face nonnegative decomposition of A. face_terms[p] is
// l(p)(a_p+b_p)^2 + 2(a_p+b_p) sum_{v in p}(b_v-b_p) + sum_{vv' in p}(b_v-b_p)(b_v'-b_p),
// which for the outer face reduces to the sum of b_v b_v' over its edges.
// total = sum of face_terms = form_A.
struct NonnegativeA {
  long total = 0;
  std::vector<long> face_terms;
};
NonnegativeA form_A_nonneg(const PlaneGraph& pg, const AdmissibleState& s);

// 2 sum_v b_v + sum_p (l(p) - 2) a_p.
long form_B(const PlaneGraph& pg, const AdmissibleState& s);

StateWeight weigh(const PlaneGraph& pg, const AdmissibleState& s);

struct EngineOptions {
  std::uint64_t node_budget = 100'000'000;
  int threads = 1;
};

// Every admissible state with A + B <= 2N, sorted by (b, a). Requires a simple
// 2-edge-connected plane graph. Throws BudgetExceeded past the node budget and
// HalfIntegerPower if some state has A + B odd.
std::vector<WeightedState> enumerate_states(const PlaneGraph& pg, int N, const EngineOptions& opts = {});

// Independent scan of the box |b_v| <= R, -b_p <= a_p <= R using only the
// defining formulas, growing R from max(2, N) until the state set at R equals
// the set at R + 1. `radius` is that stabilization radius.
struct OracleResult {
  std::vector<WeightedState> states;
  int radius = 0;
};
std::vector<WeightedState> brute_box_states(const PlaneGraph& pg, int N, int R);
OracleResult brute_box_oracle(const PlaneGraph& pg, int N, int max_radius = 40);

// sign q^((A+B)/2) / prod over corners (q)_{a_p+b_v}, modulo q^(N+1).
TruncSeries state_term(const StateWeight& w, int N);

// Phi_G modulo q^(N+1). The SimpleGraph overload applies the reductions
// (components, blocks, single vertex and edge normalization) and embeds each
// biconnected block. The PlaneGraph overload sums over states of the given
// embedding and root when it is simple and 2-edge-connected, and otherwise
// falls back to the abstract graph.
TruncSeries phi_series(const SimpleGraph& g, int N, const EngineOptions& opts = {});
TruncSeries phi_series(const PlaneGraph& pg, int N, const EngineOptions& opts = {});

// (q)_inf^E times the sum of state_term over enumerate_states. Slow; used
// to cross-check the factorized summation behind phi_series.
TruncSeries phi_series_explicit(const PlaneGraph& pg, int N, const EngineOptions& opts = {});

}  // namespace stablejones
