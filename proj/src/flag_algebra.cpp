#include "stablejones/flag_algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "stablejones/errors.hpp"

namespace stablejones {

QuantumGraph::QuantumGraph(const SimpleGraph& h, const Rational& c) { add(canonical_code(h), c); }

void QuantumGraph::add(const IsoClass& cls, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(cls, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int QuantumGraph::degree() const {
  int d = 0;
  for (const auto& [cls, c] : terms_) d = std::max(d, cls.vertex_count());
  return d;
}

QuantumGraph& QuantumGraph::operator+=(const QuantumGraph& other) {
  for (const auto& [cls, c] : other.terms_) add(cls, c);
  return *this;
}

QuantumGraph& QuantumGraph::operator-=(const QuantumGraph& other) {
  for (const auto& [cls, c] : other.terms_) add(cls, -c);
  return *this;
}

QuantumGraph& QuantumGraph::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [cls, coeff] : terms_) coeff *= c;
  return *this;
}

std::string QuantumGraph::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [cls, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c << "*[" << cls.hex() << "]";
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// Calls f(mask) for every k-subset of {0..n-1}.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  while (limit == 0 || mask < limit) {
    f(mask);
    const std::uint64_t c = mask & -mask, r = mask + c;
    if (r == 0) break;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

int induced_edges(const SimpleGraph& G, std::uint64_t mask) {
  int e = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) e += __builtin_popcountll(G.neighbor_mask(__builtin_ctzll(m)) & mask);
  return e / 2;
}

}  // namespace

std::uint64_t induced_count(const SimpleGraph& H, const SimpleGraph& G) {
  const int k = H.vertex_count();
  const IsoClass target = canonical_code(H);
  const int edges = H.edge_count();
  std::uint64_t count = 0;
  for_each_subset(G.vertex_count(), k, [&](std::uint64_t mask) {
    if (induced_edges(G, mask) != edges) return;
    if (canonical_code(G.induced_mask(mask)) == target) ++count;
  });
  return count;
}

std::map<IsoClass, std::uint64_t> induced_census(const SimpleGraph& G, int k) {
  std::map<IsoClass, std::uint64_t> out;
  for_each_subset(G.vertex_count(), k, [&](std::uint64_t mask) { ++out[canonical_code(G.induced_mask(mask))]; });
  return out;
}

namespace {

// Structure constants of [H1][H2], keyed by the product's classes.
std::map<IsoClass, std::uint64_t> basis_product(const IsoClass& a, const IsoClass& b) {
  const SimpleGraph h1 = a.graph(), h2 = b.graph();
  const int n1 = h1.vertex_count(), n2 = h2.vertex_count();
  if (n1 + n2 > 8) throw SizeLimit("multiply supports |V(H1)| + |V(H2)| <= 8");

  // Every H with c_H > 0 arises by gluing: H1 on 0..n1-1, the overlap
  // S1 n S2 identified with t vertices of H2, the rest of H2 appended, and an
  // arbitrary set of edges between H1 minus the overlap and the new vertices.
  std::set<IsoClass> candidates;
  for (int t = 0; t <= std::min(n1, n2); ++t) {
    const int m = n1 + n2 - t;
    std::vector<int> place(n2);  // place[j] = vertex of H for vertex j of H2
    std::vector<int> h2_order(n2);
    for_each_subset(n1, t, [&](std::uint64_t overlap) {
      std::vector<int> targets;
      for (int v = 0; v < n1; ++v)
        if (overlap >> v & 1) targets.push_back(v);
      std::vector<int> outside;
      for (int v = 0; v < n1; ++v)
        if (!(overlap >> v & 1)) outside.push_back(v);
      for_each_subset(n2, t, [&](std::uint64_t chosen) {
        std::vector<int> shared, fresh;
        for (int j = 0; j < n2; ++j) (chosen >> j & 1 ? shared : fresh).push_back(j);
        std::sort(shared.begin(), shared.end());
        do {
          bool ok = true;
          for (int x = 0; x < t && ok; ++x)
            for (int y = x + 1; y < t && ok; ++y)
              ok = h1.has_edge(targets[x], targets[y]) == h2.has_edge(shared[x], shared[y]);
          if (!ok) continue;
          for (int x = 0; x < t; ++x) place[shared[x]] = targets[x];
          for (std::size_t x = 0; x < fresh.size(); ++x) place[fresh[x]] = n1 + static_cast<int>(x);
          SimpleGraph base(m, h1.edges());
          for (auto [u, v] : h2.edges()) base.add_edge(place[u], place[v]);
          std::vector<Edge> cross;
          for (int u : outside)
            for (std::size_t x = 0; x < fresh.size(); ++x) cross.emplace_back(u, n1 + static_cast<int>(x));
          const std::uint64_t combos = std::uint64_t{1} << cross.size();
          for (std::uint64_t pick = 0; pick < combos; ++pick) {
            SimpleGraph h = base;
            for (std::size_t i = 0; i < cross.size(); ++i)
              if (pick >> i & 1) h.add_edge(cross[i].first, cross[i].second);
            candidates.insert(canonical_code(h));
          }
        } while (std::next_permutation(shared.begin(), shared.end()));
      });
    });
  }

  std::map<IsoClass, std::uint64_t> out;
  for (const auto& cls : candidates) {
    const SimpleGraph h = cls.graph();
    const int m = h.vertex_count();
    std::vector<std::uint64_t> s1, s2;
    for_each_subset(m, n1, [&](std::uint64_t mask) {
      if (canonical_code(h.induced_mask(mask)) == a) s1.push_back(mask);
    });
    for_each_subset(m, n2, [&](std::uint64_t mask) {
      if (canonical_code(h.induced_mask(mask)) == b) s2.push_back(mask);
    });
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    std::uint64_t c = 0;
    for (auto x : s1)
      for (auto y : s2)
        if ((x | y) == all) ++c;
    if (c) out.emplace(cls, c);
  }
  return out;
}

const std::map<IsoClass, std::uint64_t>& cached_product(const IsoClass& a, const IsoClass& b) {
  static std::mutex mutex;
  static std::map<std::pair<IsoClass, IsoClass>, std::map<IsoClass, std::uint64_t>> cache;
  const auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = basis_product(key.first, key.second);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

QuantumGraph multiply(const QuantumGraph& x, const QuantumGraph& y) {
  QuantumGraph out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms())
      for (const auto& [h, c] : cached_product(a, b)) out.add(h, ca * cb * Rational(c));
  return out;
}

Rational evaluate(const QuantumGraph& x, const SimpleGraph& G) {
  Rational total = 0;
  for (const auto& [cls, c] : x.terms()) total += c * Rational(induced_count(cls.graph(), G));
  return total;
}

std::uint64_t moment(const SimpleGraph& G, int k) {
  if (k != 1 && k != 2) throw InputError("moment supports k = 1 or k = 2");
  std::uint64_t total = 0;
  for (int v = 0; v < G.vertex_count(); ++v) {
    const std::uint64_t d = G.degree(v);
    total += k == 1 ? d : d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return total;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }
QuantumGraph point() { return QuantumGraph(SimpleGraph(1)); }
QuantumGraph edge() { return QuantumGraph(complete_graph(2)); }
QuantumGraph triangle() { return QuantumGraph(cycle_graph(3)); }
QuantumGraph gamma_pattern() { return QuantumGraph(SimpleGraph(3)); }
QuantumGraph delta_pattern() { return QuantumGraph(path_graph(3)); }

}  // namespace stablejones
