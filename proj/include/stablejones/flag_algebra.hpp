#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stablejones/canonical.hpp"
#include "stablejones/graph.hpp"

namespace stablejones {

using Rational = boost::multiprecision::cpp_rational;

// Finite rational combination of isomorphism classes, read as the graph
// parameter G -> sum c_H i(H, G). Zero coefficients are never stored.
class QuantumGraph {
 public:
  QuantumGraph() = default;
  explicit QuantumGraph(const SimpleGraph& h, const Rational& c = 1);

  const std::map<IsoClass, Rational>& terms() const noexcept { return terms_; }
  void add(const IsoClass& cls, const Rational& c);
  bool is_zero() const noexcept { return terms_.empty(); }
  // Largest vertex count among the terms.
  int degree() const;

  QuantumGraph& operator+=(const QuantumGraph& other);
  QuantumGraph& operator-=(const QuantumGraph& other);
  QuantumGraph& operator*=(const Rational& c);
  friend QuantumGraph operator+(QuantumGraph a, const QuantumGraph& b) { return a += b; }
  friend QuantumGraph operator-(QuantumGraph a, const QuantumGraph& b) { return a -= b; }
  friend QuantumGraph operator*(QuantumGraph a, const Rational& c) { return a *= c; }
  friend QuantumGraph operator*(const Rational& c, QuantumGraph a) { return a *= c; }
  bool operator==(const QuantumGraph& other) const = default;

  std::string to_string() const;

 private:
  std::map<IsoClass, Rational> terms_;
};

// Number of vertex subsets S of G with G[S] isomorphic to H.
std::uint64_t induced_count(const SimpleGraph& H, const SimpleGraph& G);
// Induced k-vertex subgraphs of G bucketed by isomorphism class.
std::map<IsoClass, std::uint64_t> induced_census(const SimpleGraph& G, int k);

// Product in the algebra: [H1][H2] = sum_H c_H [H], c_H counting ordered
// pairs (S1, S2) with H[S_i] ~ H_i and S1 u S2 = V(H). Throws SizeLimit when
// some pair of terms has more than 8 vertices in total.
QuantumGraph multiply(const QuantumGraph& x, const QuantumGraph& y);
Rational evaluate(const QuantumGraph& x, const SimpleGraph& G);

// k = 1: sum of deg(v). k = 2: sum of C(deg(v), 2).
std::uint64_t moment(const SimpleGraph& G, int k);

// Small named patterns.
SimpleGraph empty_graph(int n);
QuantumGraph point();     // [.]
QuantumGraph edge();      // [edge]
QuantumGraph triangle();  // [K3]
// gamma = [three independent vertices], delta = [induced path on 3 vertices].
QuantumGraph gamma_pattern();
QuantumGraph delta_pattern();

}  // namespace stablejones
