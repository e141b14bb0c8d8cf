#include "stablejones/states.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "state_layout.hpp"
#include "stablejones/errors.hpp"

namespace stablejones {

namespace detail {

Layout make_layout(const PlaneGraph& pg) {
  if (!pg.is_simple()) throw InputError("state enumeration needs a simple plane graph");
  const SimpleGraph g = pg.simple_graph();
  if (!is_two_edge_connected(g)) throw InputError("state enumeration needs a 2-edge-connected graph");
  Layout L;
  L.n = pg.vertex_count();
  L.root = pg.root_vertex();
  L.outer = pg.outer_face();
  L.edge_count = pg.edge_count();
  L.faces.resize(pg.face_count());
  for (int f = 0; f < pg.face_count(); ++f) {
    auto& info = L.faces[f];
    for (int d : pg.face_darts(f)) {
      info.walk.push_back(pg.tail(d));
      info.sides.emplace_back(pg.tail(d), pg.head(d));
    }
    info.length = static_cast<int>(info.walk.size());
    if (f != L.outer) L.bounded.push_back(f);
  }
  L.on_outer.assign(L.n, 0);
  for (int v : L.faces[L.outer].walk) L.on_outer[v] = 1;

  std::vector<std::set<int>> share(L.n);
  for (const auto& f : L.faces)
    for (int v : f.walk)
      for (int w : f.walk)
        if (v != w) share[v].insert(w);
  for (int v = 0; v < L.n; ++v) L.face_neighbors.emplace_back(share[v].begin(), share[v].end());

  std::vector<char> seen(L.n, 0);
  std::deque<int> queue{L.root};
  seen[L.root] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    L.order.push_back(v);
    for (int w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  return L;
}

long face_min(const FaceInfo& f, const std::vector<long>& b) {
  long m = LONG_MAX;
  for (int v : f.walk) m = std::min(m, b[v]);
  return m;
}

long face_excess(const FaceInfo& f, const std::vector<long>& b, long bp) {
  long e = 0;
  for (auto [v, w] : f.sides) e += (b[v] - bp) * (b[w] - bp);
  return e;
}

long lower_value(const Layout& L, const std::vector<long>& b) {
  long value = face_excess(L.faces[L.outer], b, 0);
  for (int v = 0; v < L.n; ++v) value += 2 * b[v];
  for (int p : L.bounded) {
    const auto& f = L.faces[p];
    const long bp = face_min(f, b);
    value += face_excess(f, b, bp) - static_cast<long>(f.length - 2) * bp;
  }
  return value;
}

void BSearch::tick() {
  if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
    throw BudgetExceeded("state search exceeded the node budget of " + std::to_string(budget));
}

std::pair<long, long> BSearch::range_of(int v, const std::vector<long>& b,
                                        const std::vector<char>& assigned) const {
  // Two vertices on a common face differ by at most B <= 2N.
  long lo = LONG_MIN / 4, hi = LONG_MAX / 4;
  for (int w : L.face_neighbors[v])
    if (assigned[w]) {
      lo = std::max(lo, b[w] - 2L * N);
      hi = std::min(hi, b[w] + 2L * N);
    }
  if (L.on_outer[v]) lo = std::max(lo, 0L);
  return {lo, hi};
}

long BSearch::partial_bound(const std::vector<long>& b, const std::vector<char>& assigned) const {
  // A >= sum of edge excesses (each term of the nonnegative form is >= 0) and
  // B >= a_p + b_v >= b_v - b_p at every corner. The unknown b_p is at most
  // the smallest assigned label on p, which only lowers both bounds.
  long excess = 0, corner = 0;
  for (std::size_t p = 0; p < L.faces.size(); ++p) {
    const auto& f = L.faces[p];
    long m = LONG_MAX;
    if (static_cast<int>(p) == L.outer) {
      m = 0;
    } else {
      for (int v : f.walk)
        if (assigned[v]) m = std::min(m, b[v]);
      if (m == LONG_MAX) continue;
    }
    for (auto [v, w] : f.sides)
      if (assigned[v] && assigned[w]) excess += (b[v] - m) * (b[w] - m);
    for (int v : f.walk)
      if (assigned[v]) corner = std::max(corner, b[v] - m);
  }
  return excess + corner;
}

std::vector<long> BSearch::first_values() const {
  if (L.order.size() < 2) return {};
  std::vector<long> b(L.n, 0);
  std::vector<char> assigned(L.n, 0);
  assigned[L.root] = 1;
  auto [lo, hi] = range_of(L.order[1], b, assigned);
  std::vector<long> out;
  for (long x = lo; x <= hi; ++x) out.push_back(x);
  return out;
}

void BSearch::descend(std::size_t pos, std::vector<long>& b, std::vector<char>& assigned,
                      const std::function<void(const std::vector<long>&, long)>& visit) {
  if (pos == L.order.size()) {
    const long lv = lower_value(L, b);
    if (lv <= 2L * N) visit(b, lv);
    return;
  }
  const int v = L.order[pos];
  auto [lo, hi] = range_of(v, b, assigned);
  assigned[v] = 1;
  for (long x = lo; x <= hi; ++x) {
    tick();
    b[v] = x;
    if (partial_bound(b, assigned) > 2L * N) continue;
    descend(pos + 1, b, assigned, visit);
  }
  assigned[v] = 0;
  b[v] = 0;
}

void BSearch::run(long first_value, const std::function<void(const std::vector<long>&, long)>& visit) {
  std::vector<long> b(L.n, 0);
  std::vector<char> assigned(L.n, 0);
  assigned[L.root] = 1;
  tick();
  if (L.order.size() < 2) {
    const long lv = lower_value(L, b);
    if (lv <= 2L * N) visit(b, lv);
    return;
  }
  const int v = L.order[1];
  b[v] = first_value;
  assigned[v] = 1;
  if (partial_bound(b, assigned) > 2L * N) return;
  descend(2, b, assigned, visit);
}

void BSearch::run_all(const std::function<void(const std::vector<long>&, long)>& visit) {
  const auto firsts = first_values();
  if (firsts.empty()) {
    run(0, visit);
    return;
  }
  for (long x : firsts) run(x, visit);
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count && !failed; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

namespace {

void check_shape(const PlaneGraph& pg, const AdmissibleState& s) {
  if (static_cast<int>(s.a.size()) != pg.face_count() || static_cast<int>(s.b.size()) != pg.vertex_count())
    throw InputError("state does not match the graph's faces and vertices");
}

}  // namespace

bool is_admissible(const PlaneGraph& pg, const AdmissibleState& s) {
  check_shape(pg, s);
  if (s.a[pg.outer_face()] != 0 || s.b[pg.root_vertex()] != 0) return false;
  for (auto [p, v] : pg.corners())
    if (s.a[p] + s.b[v] < 0) return false;
  return true;
}

long form_A(const PlaneGraph& pg, const AdmissibleState& s) {
  check_shape(pg, s);
  long A = 0;
  for (int p = 0; p < pg.face_count(); ++p) {
    long sum_b = 0;
    for (int v : pg.face_vertices(p)) sum_b += s.b[v];
    A += pg.face_length(p) * s.a[p] * s.a[p] + 2 * s.a[p] * sum_b;
  }
  for (auto [v, w] : pg.edges()) A += 2 * s.b[v] * s.b[w];
  return A;
}

NonnegativeA form_A_nonneg(const PlaneGraph& pg, const AdmissibleState& s) {
  check_shape(pg, s);
  NonnegativeA out;
  out.face_terms.assign(pg.face_count(), 0);
  for (int p = 0; p < pg.face_count(); ++p) {
    const auto verts = pg.face_vertices(p);
    long bp = LONG_MAX;
    for (int v : verts) bp = std::min(bp, s.b[v]);
    const long x = s.a[p] + bp;
    long spread = 0;
    for (int v : verts) spread += s.b[v] - bp;
    long term = pg.face_length(p) * x * x + 2 * x * spread;
    for (int d : pg.face_darts(p)) term += (s.b[pg.tail(d)] - bp) * (s.b[pg.head(d)] - bp);
    out.face_terms[p] = term;
    out.total += term;
  }
  return out;
}

long form_B(const PlaneGraph& pg, const AdmissibleState& s) {
  check_shape(pg, s);
  long B = 0;
  for (long bv : s.b) B += 2 * bv;
  for (int p = 0; p < pg.face_count(); ++p) B += (pg.face_length(p) - 2) * s.a[p];
  return B;
}

StateWeight weigh(const PlaneGraph& pg, const AdmissibleState& s) {
  StateWeight w;
  w.A = form_A(pg, s);
  w.B = form_B(pg, s);
  w.sign = (w.B % 2 == 0) ? 1 : -1;
  for (auto [p, v] : pg.corners()) w.denominators.push_back(s.a[p] + s.b[v]);
  std::sort(w.denominators.begin(), w.denominators.end());
  return w;
}

std::vector<WeightedState> enumerate_states(const PlaneGraph& pg, int N, const EngineOptions& opts) {
  if (N < 0) throw InputError("truncation order must be nonnegative");
  const detail::Layout L = detail::make_layout(pg);
  std::atomic<std::uint64_t> nodes{0};
  detail::BSearch search{L, N, nodes, opts.node_budget};
  auto firsts = search.first_values();
  const bool trivial = firsts.empty();
  if (trivial) firsts.push_back(0);
  std::vector<std::vector<WeightedState>> per_branch(firsts.size());

  auto tick = [&] {
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opts.node_budget)
      throw BudgetExceeded("state search exceeded the node budget of " + std::to_string(opts.node_budget));
  };

  detail::parallel_for(static_cast<int>(firsts.size()), opts.threads, [&](int branch) {
    auto& out = per_branch[branch];
    search.run(firsts[branch], [&](const std::vector<long>& b, long lv) {
      const std::size_t faces = L.bounded.size();
      std::vector<long> bp(faces), D(faces);
      for (std::size_t i = 0; i < faces; ++i) {
        const auto& f = L.faces[L.bounded[i]];
        bp[i] = detail::face_min(f, b);
        D[i] = 0;
        for (int v : f.walk) D[i] += b[v] - bp[i];
      }
      std::vector<long> x(faces, 0);
      auto emit = [&](long total) {
        AdmissibleState s;
        s.b = b;
        s.a.assign(L.faces.size(), 0);
        for (std::size_t i = 0; i < faces; ++i) s.a[L.bounded[i]] = x[i] - bp[i];
        StateWeight w = weigh(pg, s);
        if (w.A + w.B != total)
          throw InternalError("factorized A + B disagrees with the defining formulas");
        if ((w.A + w.B) % 2 != 0)
          throw HalfIntegerPower("state with odd A + B = " + std::to_string(w.A + w.B));
        out.push_back({std::move(s), std::move(w)});
      };
      auto rec = [&](auto&& self, std::size_t i, long total) -> void {
        if (i == faces) {
          emit(total);
          return;
        }
        const int len = L.faces[L.bounded[i]].length;
        for (long xi = 0;; ++xi) {
          const long t = total + detail::face_increment(len, D[i], xi);
          if (t > 2L * N) break;
          tick();
          x[i] = xi;
          self(self, i + 1, t);
        }
        x[i] = 0;
      };
      rec(rec, 0, lv);
    });
  });

  std::vector<WeightedState> all;
  for (auto& part : per_branch)
    for (auto& ws : part) all.push_back(std::move(ws));
  std::sort(all.begin(), all.end(), [](const WeightedState& u, const WeightedState& v) {
    return std::tie(u.state.b, u.state.a) < std::tie(v.state.b, v.state.a);
  });
  return all;
}

std::vector<WeightedState> brute_box_states(const PlaneGraph& pg, int N, int R) {
  if (!pg.is_simple()) throw InputError("box oracle needs a simple plane graph");
  const int n = pg.vertex_count(), F = pg.face_count();
  const int root = pg.root_vertex(), outer = pg.outer_face();
  std::vector<char> on_outer(n, 0);
  for (int v : pg.face_vertices(outer)) on_outer[v] = 1;
  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (v != root) free_vertices.push_back(v);
  std::vector<int> bounded;
  for (int p = 0; p < F; ++p)
    if (p != outer) bounded.push_back(p);
  std::vector<std::vector<int>> walks(F);
  for (int p = 0; p < F; ++p) walks[p] = pg.face_vertices(p);
  const auto edges = pg.edges();

  std::vector<WeightedState> out;
  std::vector<long> b(n, 0);
  // Per bounded face, for fixed b: a ranges over [-min_{v in p} b_v, R] and
  // contributes l a^2 + 2 a sum_{v in p} b_v (from A) plus (l - 2) a (from B).
  auto scan_faces = [&] {
    long fixed = 0;
    for (auto [v, w] : edges) fixed += 2 * b[v] * b[w];
    for (int v = 0; v < n; ++v) fixed += 2 * b[v];
    // Outer face corners with a = 0 need b_v >= 0.
    for (int v : walks[outer])
      if (b[v] < 0) return;
    const std::size_t k = bounded.size();
    std::vector<std::vector<std::pair<long, long>>> options(k);
    std::vector<long> best(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const int p = bounded[i];
      const long len = static_cast<long>(walks[p].size());
      long lo = LONG_MAX, sum = 0;
      for (int v : walks[p]) {
        lo = std::min(lo, b[v]);
        sum += b[v];
      }
      long m = LONG_MAX;
      for (long a = -lo; a <= R; ++a) {
        const long g = len * a * a + 2 * a * sum + (len - 2) * a;
        options[i].emplace_back(a, g);
        m = std::min(m, g);
      }
      if (options[i].empty()) return;
      best[i] = m;
    }
    for (std::size_t i = k; i-- > 0;) best[i] += best[i + 1];
    if (fixed + best[0] > 2L * N) return;
    std::vector<long> a(F, 0);
    auto rec = [&](auto&& self, std::size_t i, long total) -> void {
      if (i == k) {
        AdmissibleState s{a, b};
        out.push_back({s, weigh(pg, s)});
        return;
      }
      for (auto [ai, g] : options[i]) {
        if (total + g + best[i + 1] > 2L * N) continue;
        a[bounded[i]] = ai;
        self(self, i + 1, total + g);
      }
      a[bounded[i]] = 0;
    };
    rec(rec, 0, fixed);
  };
  auto loop = [&](auto&& self, std::size_t i) -> void {
    if (i == free_vertices.size()) {
      scan_faces();
      return;
    }
    const int v = free_vertices[i];
    for (long x = on_outer[v] ? 0 : -R; x <= R; ++x) {
      b[v] = x;
      self(self, i + 1);
    }
    b[v] = 0;
  };
  loop(loop, 0);

  for (const auto& ws : out) {
    if (!is_admissible(pg, ws.state)) throw InternalError("box oracle produced an inadmissible state");
    if (ws.weight.A + ws.weight.B > 2L * N) throw InternalError("box oracle filter disagrees with A + B");
  }
  std::sort(out.begin(), out.end(), [](const WeightedState& u, const WeightedState& v) {
    return std::tie(u.state.b, u.state.a) < std::tie(v.state.b, v.state.a);
  });
  return out;
}

OracleResult brute_box_oracle(const PlaneGraph& pg, int N, int max_radius) {
  int R = std::max(2, N);
  auto current = brute_box_states(pg, N, R);
  while (R < max_radius) {
    auto wider = brute_box_states(pg, N, R + 1);
    if (wider == current) return {std::move(current), R};
    current = std::move(wider);
    ++R;
  }
  throw BudgetExceeded("box oracle did not stabilize within radius " + std::to_string(max_radius));
}

namespace {

const TruncSeries& inverse_pochhammer(int m, int N) {
  thread_local std::map<std::pair<int, int>, TruncSeries> cache;
  const int key_m = std::min(m, N);
  auto it = cache.find({key_m, N});
  if (it == cache.end()) it = cache.emplace(std::make_pair(key_m, N), invert_unit(pochhammer(key_m, N))).first;
  return it->second;
}

}  // namespace

TruncSeries state_term(const StateWeight& w, int N) {
  if ((w.A + w.B) % 2 != 0) throw HalfIntegerPower("state with odd A + B = " + std::to_string(w.A + w.B));
  const long degree = (w.A + w.B) / 2;
  if (degree < 0) throw InputError("state has negative degree");
  TruncSeries out(N);
  if (degree > N) return out;
  TruncSeries body = TruncSeries::one(N - static_cast<int>(degree));
  for (long d : w.denominators) {
    if (d < 0) throw InputError("negative Pochhammer index in state term");
    body *= inverse_pochhammer(static_cast<int>(std::min<long>(d, N)), N - static_cast<int>(degree));
  }
  for (int k = 0; k + degree <= N; ++k) out.coeff(k + static_cast<int>(degree)) = w.sign * body[k];
  return out;
}

TruncSeries phi_series_explicit(const PlaneGraph& pg, int N, const EngineOptions& opts) {
  TruncSeries sum(N);
  for (const auto& ws : enumerate_states(pg, N, opts)) sum += state_term(ws.weight, N);
  return euler_power(pg.edge_count(), N) * sum;
}

}  // namespace stablejones
