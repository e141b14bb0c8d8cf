#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stablejones {

using BigInt = boost::multiprecision::cpp_int;

// Integer power series in q modulo q^(order+1). Binary operations between
// series of different orders truncate to the smaller order.
class TruncSeries {
 public:
  // The zero series at order 0.
  TruncSeries() : coeffs_(1) {}
  explicit TruncSeries(int order);
  // Pads with zeros or drops terms beyond `order`.
  TruncSeries(int order, std::vector<BigInt> coeffs);

  static TruncSeries one(int order);
  static TruncSeries monomial(int order, int power, const BigInt& c = 1);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int k) const { return coeffs_.at(k); }
  BigInt& coeff(int k) { return coeffs_.at(k); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  TruncSeries truncated(int order) const;
  bool is_zero() const;

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  TruncSeries& operator*=(const TruncSeries& other);
  TruncSeries& operator*=(const BigInt& scalar);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(TruncSeries a);

  bool operator==(const TruncSeries& other) const = default;

 private:
  void truncate_to(int order);

  std::vector<BigInt> coeffs_;
};

TruncSeries negate(const TruncSeries& a);

// Throws NotAUnit unless the constant term is 1 or -1.
TruncSeries invert_unit(const TruncSeries& a);

// (q)_m = (1-q)(1-q^2)...(1-q^m) modulo q^(N+1).
TruncSeries pochhammer(int m, int N);
// (q)_inf^e for any integer e.
TruncSeries euler_power(long e, int N);
// (1-q^k)^e for any integer e, by the generalized binomial series.
TruncSeries cyclotomic_power(int k, const BigInt& e, int N);

// b_1..b_K with f = prod (1-q^n)^{b_n} + O(q^(K+1)). Requires f[0] = 1
// (BadConstantTerm otherwise) and K <= f.order().
std::vector<BigInt> product_exponents(const TruncSeries& f, int K);
// prod_{n=1..exps.size()} (1-q^n)^{exps[n-1]} modulo q^(N+1).
TruncSeries expand_product(const std::vector<BigInt>& exps, int N);

// {"order":N,"coeffs":[...]}; coefficients outside the int64 range are
// written as decimal strings. from_json accepts numbers or strings.
std::string to_json(const TruncSeries& s);
TruncSeries series_from_json(const std::string& text);
std::string to_string(const TruncSeries& s);

}  // namespace stablejones
