#pragma once

// Internal: the flattened view of a rooted plane graph shared by the state
// enumerator and the factorized Phi summation.

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "stablejones/plane_graph.hpp"

namespace stablejones::detail {

struct FaceInfo {
  int length = 0;
  std::vector<int> walk;                   // tail vertex of each dart, with repeats
  std::vector<std::pair<int, int>> sides;  // (tail, head) of each dart
};

struct Layout {
  int n = 0;
  int root = 0;
  int outer = 0;
  int edge_count = 0;
  std::vector<FaceInfo> faces;
  std::vector<int> bounded;                      // bounded face ids, ascending
  std::vector<int> order;                        // BFS from root, root first
  std::vector<std::vector<int>> face_neighbors;  // vertices sharing a face, excluding self
  std::vector<char> on_outer;
};

// Throws InputError unless pg is simple and 2-edge-connected.
Layout make_layout(const PlaneGraph& pg);

// Sum of the edge products (b_v - b_p)(b_w - b_p) over the sides of face f.
long face_excess(const FaceInfo& f, const std::vector<long>& b, long bp);
long face_min(const FaceInfo& f, const std::vector<long>& b);

// A + B at x_p = a_p + b_p = 0 on every bounded face; A + B at any state with
// vertex labels b equals this plus sum_p h_p(x_p) with h_p >= 0.
long lower_value(const Layout& L, const std::vector<long>& b);

// l x^2 + (2 D + l - 2) x, always even.
inline long face_increment(int length, long D, long x) { return length * x * x + (2 * D + length - 2) * x; }

// Depth-first search over vertex labels b (root fixed at 0) whose lower value
// is at most 2N. Calls visit(b, lower_value) for each one. run() fixes the
// first free vertex to one value so branches can be split across threads.
// Throws BudgetExceeded once `nodes` passes `budget`.
struct BSearch {
  const Layout& L;
  int N;
  std::atomic<std::uint64_t>& nodes;
  std::uint64_t budget;

  // Candidate values for the first free vertex; empty if the graph has one vertex.
  std::vector<long> first_values() const;
  void run(long first_value, const std::function<void(const std::vector<long>&, long)>& visit);
  void run_all(const std::function<void(const std::vector<long>&, long)>& visit);

 private:
  void descend(std::size_t pos, std::vector<long>& b, std::vector<char>& assigned,
               const std::function<void(const std::vector<long>&, long)>& visit);
  long partial_bound(const std::vector<long>& b, const std::vector<char>& assigned) const;
  std::pair<long, long> range_of(int v, const std::vector<long>& b, const std::vector<char>& assigned) const;
  void tick();
};

// Runs body(i) for i in [0, count) on up to `threads` workers, rethrowing the
// first exception.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

}  // namespace stablejones::detail
