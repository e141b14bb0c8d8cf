#include "stablejones/stable_coeffs.hpp"

#include "stablejones/errors.hpp"

namespace stablejones {

namespace {

BigInt integral(const Rational& r, const char* what) {
  if (denominator(r) != 1) throw NonIntegerCoefficient(std::string(what) + " evaluated to a non-integer");
  return numerator(r);
}

}  // namespace

std::array<BigInt, 4> phi_formula(const CountVector& c) {
  const Rational c1 = c.c1, c2 = c.c2, c3 = c.c3, c41 = c.c41, c42 = c.c42;
  const Rational d = c1 - c2;
  const Rational phi2 = (d * d - 2 * c3 - c1 + c2) / 2;
  const Rational phi3 = c41 - 2 * c42 + c2 / 6 + c3 * c2 - c2 * c2 * c2 / 6 - c1 / 6 - c3 * c1 +
                        c2 * c2 * c1 / 2 - c2 * c1 * c1 / 2 + c1 * c1 * c1 / 6;
  return {1, integral(d - 1, "phi_1"), integral(phi2, "phi_2"), integral(phi3, "phi_3")};
}

TruncSeries product_prefix(const CountVector& c) {
  const BigInt c1 = c.c1, c2 = c.c2, c3 = c.c3, c41 = c.c41, c42 = c.c42;
  return cyclotomic_power(1, 1 - c1 + c2, 3) * cyclotomic_power(2, c3, 3) *
         cyclotomic_power(3, c3 - c41 + 2 * c42, 3);
}

std::vector<BigInt> exponent_vector(const TruncSeries& phi, int K) { return product_exponents(phi, K); }

std::vector<BigInt> exponent_vector(const SimpleGraph& g, int K, const EngineOptions& opts) {
  auto C = product_exponents(phi_series(g, K, opts), K);
  if (K >= 1 && C[0] != 1 - g.vertex_count() + g.edge_count())
    throw InternalError("C_1 differs from 1 - c1 + c2");
  if (K >= 2) {
    const CountVector c{.c1 = static_cast<std::uint64_t>(g.vertex_count()),
                        .c2 = static_cast<std::uint64_t>(g.edge_count()),
                        .c3 = induced_count(cycle_graph(3), g),
                        .c41 = induced_count(cycle_graph(4), g),
                        .c42 = induced_count(complete_graph(4), g)};
    if (C[1] != c.c3) throw InternalError("C_2 differs from c3");
    if (K >= 3 && C[2] != BigInt(c.c3) - c.c41 + 2 * BigInt(c.c42))
      throw InternalError("C_3 differs from c3 - c41 + 2 c42");
  }
  return C;
}

BigInt conjecture_C4(const CountVector& c) {
  const auto& f = c.c5;
  return BigInt(c.c3) - c.c41 + 5 * BigInt(c.c42) + f[0] - f[1] - 2 * BigInt(f[2]) - 3 * BigInt(f[3]);
}

BigInt conjecture_C5(const CountVector& c) {
  const auto& f = c.c5;
  // Coefficients of c61..c619.
  static constexpr std::array<int, 19> six{-1, 1, -2, -1, 2, 3, 0, 4, -4, 2, 1, -3, 4, 1, 0, -5, 0, -16, 1};
  BigInt v = BigInt(c.c3) - c.c41 + 12 * BigInt(c.c42) + f[0] - 4 * BigInt(f[2]) - 9 * BigInt(f[3]);
  for (int i = 0; i < 19; ++i) v += six[i] * BigInt(c.c6[i]);
  return v;
}

LinearFit solve_exact(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    if (A[r].size() != cols) throw InputError("ragged fit matrix");
    for (std::size_t j = 0; j < cols; ++j) M[r][j] = A[r][j];
    M[r][cols] = b[r];
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols && rank < rows; ++j) {
    std::size_t p = rank;
    while (p < rows && M[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[rank]);
    const Rational inv = 1 / M[rank][j];
    for (auto& x : M[rank]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || M[r][j] == 0) continue;
      const Rational f = M[r][j];
      for (std::size_t k = j; k <= cols; ++k) M[r][k] -= f * M[rank][k];
    }
    pivot_col.push_back(static_cast<int>(j));
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (M[r][cols] != 0) throw Infeasible("no linear combination fits the data");
  LinearFit fit;
  fit.coefficients.assign(cols, 0);
  for (std::size_t r = 0; r < rank; ++r) fit.coefficients[pivot_col[r]] = M[r][cols];
  fit.dimension = static_cast<int>(cols - rank);
  return fit;
}

LinearFit fit_linear_form(const std::vector<QuantumGraph>& patterns,
                          const std::vector<std::pair<SimpleGraph, BigInt>>& data) {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (const auto& [g, target] : data) {
    std::vector<Rational> row;
    for (const auto& p : patterns) row.push_back(evaluate(p, g));
    A.push_back(std::move(row));
    b.emplace_back(target);
  }
  if (data.empty()) {
    LinearFit fit;
    fit.coefficients.assign(patterns.size(), 0);
    fit.dimension = static_cast<int>(patterns.size());
    return fit;
  }
  return solve_exact(A, b);
}

}  // namespace stablejones
