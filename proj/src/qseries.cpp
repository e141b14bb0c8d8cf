#include "stablejones/qseries.hpp"

#include <limits>
#include <sstream>

#include <json.hpp>

#include "stablejones/errors.hpp"

namespace stablejones {

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw InputError("series order must be nonnegative");
  coeffs_.assign(order + 1, 0);
}

TruncSeries::TruncSeries(int order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw InputError("series order must be nonnegative");
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncSeries TruncSeries::monomial(int order, int power, const BigInt& c) {
  TruncSeries s(order);
  if (power < 0) throw InputError("negative power in monomial");
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order > this->order()) throw InputError("cannot extend a truncated series");
  return TruncSeries(order, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool TruncSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void TruncSeries::truncate_to(int order) {
  if (order < this->order()) coeffs_.resize(order + 1);
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  truncate_to(other.order());
  for (int k = 0; k <= order(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  truncate_to(other.order());
  for (int k = 0; k <= order(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncSeries& TruncSeries::operator*=(const TruncSeries& other) { return *this = *this * other; }

TruncSeries& TruncSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncSeries operator-(TruncSeries a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

TruncSeries negate(const TruncSeries& a) { return -a; }

TruncSeries invert_unit(const TruncSeries& a) {
  const BigInt& c0 = a[0];
  if (c0 != 1 && c0 != -1) throw NotAUnit("constant term must be +1 or -1 to invert");
  const int n = a.order();
  TruncSeries inv(n);
  inv.coeff(0) = c0;  // 1/c0 = c0 for a unit
  for (int k = 1; k <= n; ++k) {
    BigInt sum = 0;
    for (int i = 1; i <= k; ++i)
      if (a[i] != 0) sum += a[i] * inv[k - i];
    inv.coeff(k) = -sum * c0;
  }
  return inv;
}

namespace {

// s *= (1 - q^k)^e restricted to e = +1 or -1, in place.
void mul_binomial_unit(std::vector<BigInt>& s, int k, int e) {
  const int n = static_cast<int>(s.size()) - 1;
  if (e == 1) {
    for (int i = n; i >= k; --i) s[i] -= s[i - k];
  } else {
    for (int i = k; i <= n; ++i) s[i] += s[i - k];
  }
}

}  // namespace

TruncSeries pochhammer(int m, int N) {
  if (m < 0) throw InputError("pochhammer index must be nonnegative");
  TruncSeries s = TruncSeries::one(N);
  std::vector<BigInt> c = s.coeffs();
  for (int i = 1; i <= std::min(m, N); ++i) mul_binomial_unit(c, i, 1);
  return TruncSeries(N, std::move(c));
}

TruncSeries euler_power(long e, int N) {
  std::vector<BigInt> c = TruncSeries::one(N).coeffs();
  if (e == 0 || N == 0) return TruncSeries(N, std::move(c));
  const int unit = e > 0 ? 1 : -1;
  const long reps = e > 0 ? e : -e;
  if (reps <= 8) {
    for (long r = 0; r < reps; ++r)
      for (int k = 1; k <= N; ++k) mul_binomial_unit(c, k, unit);
    return TruncSeries(N, std::move(c));
  }
  TruncSeries s = TruncSeries::one(N);
  for (int k = 1; k <= N; ++k) s *= cyclotomic_power(k, BigInt(e), N);
  return s;
}

TruncSeries cyclotomic_power(int k, const BigInt& e, int N) {
  if (k < 1) throw InputError("cyclotomic_power needs k >= 1");
  TruncSeries s(N);
  // (1 - x)^e = sum_j binom(e, j) (-x)^j with binom(e, j) = e(e-1)...(e-j+1)/j!.
  BigInt binom = 1;
  for (int j = 0; static_cast<long>(j) * k <= N; ++j) {
    if (j > 0) {
      binom = binom * (e - (j - 1)) / j;
      if (binom == 0) break;
    }
    s.coeff(j * k) = (j % 2 == 0) ? binom : BigInt(-binom);
  }
  return s;
}

std::vector<BigInt> product_exponents(const TruncSeries& f, int K) {
  if (f[0] != 1) throw BadConstantTerm("product_exponents needs constant term 1");
  if (K < 0 || K > f.order()) throw InputError("product_exponents: K exceeds series order");
  std::vector<BigInt> b(K);
  TruncSeries g = f.truncated(K);
  for (int n = 1; n <= K; ++n) {
    b[n - 1] = -g[n];
    if (b[n - 1] != 0) g *= cyclotomic_power(n, -b[n - 1], K);
  }
  return b;
}

TruncSeries expand_product(const std::vector<BigInt>& exps, int N) {
  TruncSeries s = TruncSeries::one(N);
  for (std::size_t n = 1; n <= exps.size() && static_cast<int>(n) <= N; ++n)
    if (exps[n - 1] != 0) s *= cyclotomic_power(static_cast<int>(n), exps[n - 1], N);
  return s;
}

namespace {

nlohmann::json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

}  // namespace

std::string to_json(const TruncSeries& s) {
  nlohmann::json j;
  j["order"] = s.order();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(bigint_json(c));
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

TruncSeries series_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (c.is_string()) coeffs.emplace_back(c.get<std::string>());
      else if (c.is_number_integer()) coeffs.emplace_back(c.get<long long>());
      else throw ParseError("series coefficient must be an integer or decimal string");
    }
    const int order = j.contains("order") ? j.at("order").get<int>() : static_cast<int>(coeffs.size()) - 1;
    if (static_cast<int>(coeffs.size()) != order + 1) throw ParseError("series JSON: coeffs length != order + 1");
    return TruncSeries(order, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("series JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("series JSON: ") + e.what());
  }
}

std::string to_string(const TruncSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    const BigInt& c = s[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "q";
    if (k >= 2) out << "^" << k;
  }
  if (first) out << "0";
  out << " + O(q^" << s.order() + 1 << ")";
  return out.str();
}

}  // namespace stablejones
