#include <gtest/gtest.h>

#include <random>

#include "stablejones/errors.hpp"
#include "stablejones/qseries.hpp"

using namespace stablejones;

namespace {

TruncSeries series(std::vector<BigInt> c) {
  const int order = static_cast<int>(c.size()) - 1;
  return TruncSeries(order, std::move(c));
}

}  // namespace

TEST(TruncSeries, ArithmeticTruncatesToSmallerOrder) {
  const TruncSeries a = series({1, 2, 3});
  const TruncSeries b = series({1, 1});
  EXPECT_EQ((a * b).order(), 1);
  EXPECT_EQ(a * b, series({1, 3}));
  EXPECT_EQ(a + b, series({2, 3}));
  EXPECT_EQ(-a, series({-1, -2, -3}));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(TruncSeries, EulerFunctionPentagonal) {
  // (q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
  const TruncSeries e = euler_power(1, 15);
  const std::vector<int> expected{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
  for (int k = 0; k <= 15; ++k) EXPECT_EQ(e[k], expected[k]) << k;
}

TEST(TruncSeries, PochhammerInverse) {
  for (int m = 0; m <= 12; ++m) EXPECT_EQ(pochhammer(m, 20) * invert_unit(pochhammer(m, 20)), TruncSeries::one(20));
  EXPECT_THROW(invert_unit(series({2, 1})), NotAUnit);
  EXPECT_EQ(invert_unit(series({-1, 1})) * series({-1, 1}), TruncSeries::one(1));
}

TEST(TruncSeries, EulerPowerAdditive) {
  for (long e1 : {-5L, -1L, 0L, 3L, 7L})
    for (long e2 : {-4L, 2L, 9L}) EXPECT_EQ(euler_power(e1 + e2, 18), euler_power(e1, 18) * euler_power(e2, 18));
}

TEST(TruncSeries, CyclotomicPowerMatchesRepeatedProduct) {
  TruncSeries p = TruncSeries::one(20);
  const TruncSeries f = TruncSeries::one(20) - TruncSeries::monomial(20, 3);
  for (int i = 0; i < 4; ++i) p *= f;
  EXPECT_EQ(cyclotomic_power(3, 4, 20), p);
  EXPECT_EQ(cyclotomic_power(3, -4, 20) * p, TruncSeries::one(20));
}

TEST(ProductExponents, RoundTripRandomSeries) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int K = 1 + static_cast<int>(rng() % 20);
    std::vector<BigInt> c(K + 1);
    c[0] = 1;
    for (int k = 1; k <= K; ++k) c[k] = static_cast<long>(rng() % 41) - 20;
    const TruncSeries f(K, c);
    EXPECT_EQ(expand_product(product_exponents(f, K), K), f);
  }
}

TEST(ProductExponents, KnownValues) {
  // (q)_inf has every exponent 1.
  EXPECT_EQ(product_exponents(euler_power(1, 10), 10), std::vector<BigInt>(10, 1));
  EXPECT_THROW(product_exponents(series({2, 1}), 1), BadConstantTerm);
}

TEST(TruncSeries, JsonRoundTripWithBigCoefficients) {
  TruncSeries s(3);
  s.coeff(0) = 1;
  s.coeff(1) = BigInt("123456789012345678901234567890");
  s.coeff(2) = -7;
  const std::string text = to_json(s);
  EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
  EXPECT_NE(text.find("-7"), std::string::npos);
  EXPECT_EQ(series_from_json(text), s);
}
