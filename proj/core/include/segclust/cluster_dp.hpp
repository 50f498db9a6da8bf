#pragma once

#include <vector>

#include "segclust/segment_dp.hpp"
#include "segclust/signal.hpp"
#include "segclust/stats.hpp"

namespace segclust {

/// A segmentation together with a cluster label for every segment.
/// Labels are 0-based and contiguous (0..num_clusters-1), every cluster
/// nonempty. Index-adjacent segments may share a label; merge_adjacent()
/// produces the maximal-segment form.
class FullPartition {
 public:
  FullPartition(Segmentation segmentation, std::vector<int> cluster_of);

  const Segmentation& segmentation() const { return segmentation_; }
  const std::vector<int>& cluster_of() const { return cluster_of_; }

  int n() const { return segmentation_.n(); }
  int num_segments() const { return segmentation_.num_segments(); }
  int num_clusters() const { return num_clusters_; }
  int dprime() const { return num_clusters_ - 1; }
  int dpp() const { return num_segments() - 1; }

 private:
  Segmentation segmentation_;
  std::vector<int> cluster_of_;
  int num_clusters_ = 0;
};

/// Second dynamic-programming pass: optimal grouping of the t sorted
/// weighted means into exactly delta contiguous blocks, with backtracking.
class ClusterDpResult {
 public:
  ClusterDpResult(int count, int max_clusters, std::vector<double> cost, std::vector<int> argmin);

  int count() const { return count_; }
  int max_clusters() const { return max_clusters_; }

  double cost(int delta) const { return cost(delta, count_); }  // G_(t,delta) at t = count
  double cost(int delta, int t) const;
  /// Optimal contiguous blocks over sorted positions 1..count for exactly
  /// delta clusters; ties were broken toward the smallest split.
  Segmentation blocks(int delta) const;

 private:
  int count_ = 0;
  int max_clusters_ = 0;
  std::vector<double> cost_;
  std::vector<int> argmin_;
};

/// Sorts the segment means of seg ascending (ties by original segment
/// order) and attaches segment lengths as weights.
WeightedLevels sort_segment_means(const CostTables& tables, const Segmentation& seg);

/// Runs G_(t,1) = Rbar_[1,t], G_(t,delta) = min_i G_(i-1,delta-1) + Rbar_[i,t].
/// Requires 1 <= max_clusters <= w.count().
ClusterDpResult second_pass(const WeightedLevels& w, int max_clusters);

/// Maps contiguous blocks over sorted positions back through the
/// permutation to original segment indices. Cluster labels follow
/// ascending block order, so the result satisfies the clustering property
/// by construction.
FullPartition reconstruct(const Segmentation& seg, const Segmentation& blocks,
                          const std::vector<int>& sorted_to_original);

/// Joins index-adjacent segments that share a cluster; labels are kept.
FullPartition merge_adjacent(const FullPartition& p);

/// Per-cluster mean of y over the union of the cluster's segments.
std::vector<double> cluster_levels(const Signal& y, const FullPartition& p);

/// The projection of y onto signals constant on each cluster: every index
/// gets its cluster's mean.
std::vector<double> fitted_values(const Signal& y, const FullPartition& p);

}  // namespace segclust
