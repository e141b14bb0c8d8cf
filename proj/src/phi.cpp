#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "state_layout.hpp"
#include "stablejones/errors.hpp"
#include "stablejones/states.hpp"

namespace stablejones {

namespace {

using Wide = __int128;
using WideSeries = std::vector<Wide>;

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in Phi summation");
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in Phi summation");
  return r;
}

// a * b truncated to degree n (both inputs have at least n + 1 terms).
WideSeries mul_trunc(const WideSeries& a, const WideSeries& b, int n) {
  WideSeries out(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      if (b[j] != 0) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

BigInt to_big(Wide w) {
  const bool negative = w < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(w) : static_cast<unsigned __int128>(w);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-r) : r;
}

// Sums over states with fixed vertex labels factor into one series per
// bounded face: with x = a_p + b_p and d_v = b_v - b_p,
//   F_p = sum_{x >= 0} (-1)^{(l-2)(x-b_p)} q^{h_p(x)/2} prod_{v in p} 1/(q)_{x+d_v},
// and the outer face contributes prod_{v in p_inf} 1/(q)_{b_v}.
class FactorizedSum {
 public:
  FactorizedSum(const detail::Layout& L, int N) : L_(L), N_(N) {
    inv_poch_.resize(N + 1);
    // 1/(q)_m modulo q^(N+1) is constant for m >= N.
    for (int m = 0; m <= N; ++m) {
      const TruncSeries inv = invert_unit(pochhammer(m, N));
      inv_poch_[m].resize(N + 1);
      for (int k = 0; k <= N; ++k) {
        if (inv[k] > std::numeric_limits<long long>::max()) throw SizeLimit("truncation order too large");
        inv_poch_[m][k] = static_cast<Wide>(inv[k].convert_to<long long>());
      }
    }
    total_.assign(N + 1, 0);
  }

  void add(const std::vector<long>& b, long lower) {
    if (lower % 2 != 0) throw HalfIntegerPower("state with odd A + B = " + std::to_string(lower));
    if (lower < 0) throw InternalError("negative A + B lower value");
    const int shift = static_cast<int>(lower / 2);
    const int room = N_ - shift;
    WideSeries acc(room + 1, 0);
    acc[0] = 1;
    for (int v : L_.faces[L_.outer].walk) acc = mul_trunc(acc, inv_poch(b[v]), room);
    for (int p : L_.bounded) acc = mul_trunc(acc, face_series(L_.faces[p], b), room);
    for (int k = 0; k <= room; ++k) total_[k + shift] = checked_add(total_[k + shift], acc[k]);
  }

  const WideSeries& total() const { return total_; }

 private:
  const WideSeries& inv_poch(long m) const { return inv_poch_[std::min<long>(m, N_)]; }

  const WideSeries& face_series(const detail::FaceInfo& f, const std::vector<long>& b) {
    const long bp = detail::face_min(f, b);
    std::vector<long> key;
    key.reserve(f.walk.size() + 2);
    for (int v : f.walk) key.push_back(b[v] - bp);
    std::sort(key.begin(), key.end());
    key.push_back(f.length);
    key.push_back(((f.length - 2) * bp) & 1);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    const int flip = static_cast<int>(key.back());
    long D = 0;
    for (int v : f.walk) D += b[v] - bp;
    WideSeries series(N_ + 1, 0);
    for (long x = 0;; ++x) {
      const long h = detail::face_increment(f.length, D, x);
      if (h / 2 > N_) break;
      const int shift = static_cast<int>(h / 2), room = N_ - shift;
      WideSeries term(room + 1, 0);
      term[0] = 1;
      for (int v : f.walk) term = mul_trunc(term, inv_poch(x + b[v] - bp), room);
      const bool negative = (((f.length - 2) * x) & 1) ^ flip;
      for (int k = 0; k <= room; ++k)
        series[k + shift] = checked_add(series[k + shift], negative ? -term[k] : term[k]);
    }
    return memo_.emplace(std::move(key), std::move(series)).first->second;
  }

  const detail::Layout& L_;
  int N_;
  std::vector<WideSeries> inv_poch_;
  std::map<std::vector<long>, WideSeries> memo_;
  WideSeries total_;
};

TruncSeries state_sum(const PlaneGraph& pg, int N, const EngineOptions& opts) {
  const detail::Layout L = detail::make_layout(pg);
  std::atomic<std::uint64_t> nodes{0};
  detail::BSearch search{L, N, nodes, opts.node_budget};
  auto firsts = search.first_values();
  if (firsts.empty()) firsts.push_back(0);
  std::vector<WideSeries> partial(firsts.size());
  detail::parallel_for(static_cast<int>(firsts.size()), opts.threads, [&](int branch) {
    FactorizedSum sum(L, N);
    search.run(firsts[branch], [&](const std::vector<long>& b, long lower) { sum.add(b, lower); });
    partial[branch] = sum.total();
  });
  TruncSeries total(N);
  for (const auto& part : partial)
    for (int k = 0; k <= N; ++k) total.coeff(k) += to_big(part[k]);
  return euler_power(pg.edge_count(), N) * total;
}

TruncSeries connected_phi(const SimpleGraph& g, int N, const EngineOptions& opts) {
  TruncSeries result = TruncSeries::one(N);
  for (const auto& block : blocks(g)) {
    if (block.size() <= 2) continue;  // single vertex or bridge: Phi = 1
    const SimpleGraph piece = g.induced(block);
    result *= state_sum(find_planar_embedding(piece), N, opts);
  }
  return result;
}

}  // namespace

TruncSeries phi_series(const SimpleGraph& g, int N, const EngineOptions& opts) {
  if (N < 0) throw InputError("truncation order must be nonnegative");
  if (g.vertex_count() == 0) throw EmptyGraph("Phi of the empty graph is undefined");
  if (!is_planar(g)) throw NotPlanar("graph is not planar");
  const auto components = connected_components(g);
  TruncSeries result = TruncSeries::one(N);
  for (const auto& comp : components) result *= connected_phi(g.induced(comp), N, opts);
  // (1 - q) Phi_{G1 + G2} = Phi_{G1} Phi_{G2}.
  if (components.size() > 1)
    result *= cyclotomic_power(1, -static_cast<long>(components.size() - 1), N);
  return result;
}

TruncSeries phi_series(const PlaneGraph& pg, int N, const EngineOptions& opts) {
  if (N < 0) throw InputError("truncation order must be nonnegative");
  if (pg.is_simple()) {
    const SimpleGraph g = pg.simple_graph();
    if (is_two_edge_connected(g)) return state_sum(pg, N, opts);
    return phi_series(g, N, opts);
  }
  return phi_series(reduce(Multigraph{pg.vertex_count(), pg.edges()}), N, opts);
}

}  // namespace stablejones
