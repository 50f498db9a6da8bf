#pragma once

#include <limits>
#include <vector>

namespace segclust::detail {

// Least-cost split of 1..n into exactly p contiguous parts for an interval
// cost function, p = 1..max_parts. Both dynamic-programming passes share
// this recurrence:
//   T(1, t) = cost(1, t)
//   T(p, t) = min_{i in [p, t]} T(p-1, i-1) + cost(i, t)
// Ties in the minimization keep the smallest i.
struct PartitionDp {
  int n = 0;
  int max_parts = 0;
  std::vector<double> cost;  // (max_parts+1) x (n+1), row p starts at p*(n+1)
  std::vector<int> argmin;   // start of the last part

  double at(int p, int t) const {
    return cost[static_cast<std::size_t>(p) * (static_cast<std::size_t>(n) + 1) +
                static_cast<std::size_t>(t)];
  }

  // Breakpoints 0 = b_0 < ... < b_p = t of the optimal p-part split.
  std::vector<int> backtrack(int p, int t) const {
    std::vector<int> breaks(static_cast<std::size_t>(p) + 1);
    breaks[static_cast<std::size_t>(p)] = t;
    for (int part = p; part >= 2; --part) {
      int start = argmin[static_cast<std::size_t>(part) * (static_cast<std::size_t>(n) + 1) +
                         static_cast<std::size_t>(t)];
      breaks[static_cast<std::size_t>(part) - 1] = start - 1;
      t = start - 1;
    }
    breaks[0] = 0;
    return breaks;
  }
};

template <typename CostFn>
PartitionDp run_partition_dp(int n, int max_parts, CostFn&& interval_cost) {
  PartitionDp dp;
  dp.n = n;
  dp.max_parts = max_parts;
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  dp.cost.assign(static_cast<std::size_t>(max_parts + 1) * stride,
                 std::numeric_limits<double>::infinity());
  dp.argmin.assign(dp.cost.size(), 0);

  for (int t = 1; t <= n; ++t) dp.cost[stride + static_cast<std::size_t>(t)] = interval_cost(1, t);
  for (int p = 2; p <= max_parts; ++p) {
    const std::size_t row = static_cast<std::size_t>(p) * stride;
    const std::size_t prev = row - stride;
    for (int t = p; t <= n; ++t) {
      double best = std::numeric_limits<double>::infinity();
      int best_start = p;
      for (int i = p; i <= t; ++i) {
        double candidate = dp.cost[prev + static_cast<std::size_t>(i) - 1] + interval_cost(i, t);
        if (candidate < best) {
          best = candidate;
          best_start = i;
        }
      }
      dp.cost[row + static_cast<std::size_t>(t)] = best;
      dp.argmin[row + static_cast<std::size_t>(t)] = best_start;
    }
  }
  return dp;
}

}  // namespace segclust::detail
