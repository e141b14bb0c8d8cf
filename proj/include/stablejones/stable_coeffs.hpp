#pragma once

#include <array>
#include <utility>
#include <vector>

#include "stablejones/flag_algebra.hpp"
#include "stablejones/patterns.hpp"
#include "stablejones/qseries.hpp"
#include "stablejones/states.hpp"

namespace stablejones {

// phi_0..phi_3 from c1, c2, c3, c41, c42. Throws NonIntegerCoefficient if a
// value is not an integer.
std::array<BigInt, 4> phi_formula(const CountVector& c);

// (1-q)^{1-c1+c2} (1-q^2)^{c3} (1-q^3)^{c3-c41+2c42} modulo q^4.
TruncSeries product_prefix(const CountVector& c);

// C_1..C_K with Phi_G = prod_k (1-q^k)^{C_k} + O(q^(K+1)). The tables list
// C starting at C_1 = 1 - c1 + c2, the exponent of (1-q). Throws InternalError
// if C_1, C_2 or C_3 disagree with their closed forms.
std::vector<BigInt> exponent_vector(const SimpleGraph& g, int K, const EngineOptions& opts = {});
std::vector<BigInt> exponent_vector(const TruncSeries& phi, int K);

// The conjectured linear forms for C_4 and C_5.
BigInt conjecture_C4(const CountVector& c);
BigInt conjecture_C5(const CountVector& c);

// Exact solution set of sum_i x_i A[r][i] = b[r]: one particular solution and
// the dimension of the affine solution space. Throws Infeasible when empty.
struct LinearFit {
  std::vector<Rational> coefficients;
  int dimension = 0;
  bool unique() const { return dimension == 0; }
};
LinearFit solve_exact(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b);
// Rows are evaluate(pattern_i, G) for each data graph G.
LinearFit fit_linear_form(const std::vector<QuantumGraph>& patterns,
                          const std::vector<std::pair<SimpleGraph, BigInt>>& data);

}  // namespace stablejones
