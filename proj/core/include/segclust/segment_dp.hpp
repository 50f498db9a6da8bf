#pragma once

#include <vector>

#include "segclust/signal.hpp"
#include "segclust/stats.hpp"

namespace segclust {

/// Split of [1, n] into contiguous segments, stored as breakpoints
/// 0 = b_0 < b_1 < ... < b_s = n; segment j covers [b_j + 1, b_{j+1}].
/// Interior breakpoints are the change points.
class Segmentation {
 public:
  explicit Segmentation(std::vector<int> breakpoints);

  static Segmentation single(int n) { return Segmentation({0, n}); }

  int n() const { return breakpoints_.back(); }
  int num_segments() const { return static_cast<int>(breakpoints_.size()) - 1; }
  Interval segment(int j) const;  // 0-based j
  std::vector<int> change_points() const;
  const std::vector<int>& breakpoints() const { return breakpoints_; }

  friend bool operator==(const Segmentation&, const Segmentation&) = default;

 private:
  std::vector<int> breakpoints_;
};

/// First dynamic-programming pass: least-squares cost C_d(t) of the best
/// split of y_1..y_t into exactly d segments, with backtracking.
class SegmentDpResult {
 public:
  SegmentDpResult(int n, int max_segments, std::vector<double> cost, std::vector<int> argmin);

  int n() const { return n_; }
  int max_segments() const { return max_segments_; }

  double cost(int d) const { return cost(d, n_); }  // C_d(N)
  double cost(int d, int t) const;                  // C_d(t), d <= t
  /// Optimal segmentation with exactly d segments; ties were broken toward
  /// the smallest split index.
  Segmentation segmentation(int d) const;

 private:
  int n_ = 0;
  int max_segments_ = 0;
  std::vector<double> cost_;   // (max_segments+1) x (n+1)
  std::vector<int> argmin_;    // start index of the last segment
};

/// Runs the recurrence C_1(t) = R_[1,t], C_d(t) = min_i C_{d-1}(i-1) + R_[i,t]
/// for all 1 <= d <= max_segments. Requires 1 <= max_segments <= n.
SegmentDpResult first_pass(const CostTables& tables, int max_segments);
SegmentDpResult first_pass(const Signal& y, int max_segments);

/// Sum of within-segment costs of seg; equals ||y - proj(y)||^2 for the
/// subspace of signals constant on each segment.
double segmentation_cost(const Signal& y, const Segmentation& seg);

}  // namespace segclust
