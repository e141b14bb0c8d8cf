#pragma once

#include <limits>
#include <vector>

namespace stablejones::detail {

// Minimum-cost assignment of every row to a distinct column (rows <= columns),
// Hungarian method with potentials. Returns the column of each row.
inline std::vector<int> min_cost_assignment(const std::vector<std::vector<long>>& cost) {
  const int n = static_cast<int>(cost.size());
  if (n == 0) return {};
  const int m = static_cast<int>(cost[0].size());
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  std::vector<long> u(n + 1, 0), v(m + 1, 0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      long delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> column(n, -1);
  for (int j = 1; j <= m; ++j)
    if (p[j]) column[p[j] - 1] = j - 1;
  return column;
}

inline long assignment_cost(const std::vector<std::vector<long>>& cost, const std::vector<int>& column) {
  long total = 0;
  for (std::size_t i = 0; i < column.size(); ++i) total += cost[i][column[i]];
  return total;
}

}  // namespace stablejones::detail
