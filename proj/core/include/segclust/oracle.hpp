#pragma once

#include <functional>
#include <vector>

#include "segclust/cluster_dp.hpp"
#include "segclust/penalty.hpp"
#include "segclust/signal.hpp"

namespace segclust {

/// Visits every set partition of [1, n] exactly once (restricted-growth
/// strings, so no duplicates), as a FullPartition whose segments are the
/// maximal runs of each part. Guarded to n <= 12.
void for_each_partition(int n, const std::function<void(const FullPartition&)>& fn);

/// Materialized variant of for_each_partition.
std::vector<FullPartition> enumerate_partitions(int n);

struct ExactMinimum {
  double crit = 0.0;
  FullPartition partition;
};

/// Exhaustive minimum of crit_of_partition over all partitions of [1, n];
/// ties keep the first partition in enumeration order. Guarded to n <= 9.
ExactMinimum exact_min_crit(const Signal& y, const PenaltySpec& spec);

/// Adaptive upper bound on E||fhat - f*||^2 for the true dimensions
/// (d', d''):
///   4 sigma^2 (7 + 3(d'+1) ln(N/d')
///              + 6(d' ln(d'' e^{13/6}) + d'' ln(d' e^2) + d'' ln(N/d''))).
/// Defined for 1 <= d' <= d'' <= n and for d' = d'' = 0 with the
/// 0 ln 0 = 0 convention (and (d'+1) ln(N/d') -> ln N).
double risk_bound(int dprime, int dpp, int n, double sigma);

/// risk_bound divided by n.
double risk_bound_per_sample(int dprime, int dpp, int n, double sigma);

/// d'' ln N / N; the estimator is consistent when this vanishes.
double consistency_ratio(int dpp, int n);

}  // namespace segclust
