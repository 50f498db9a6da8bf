#pragma once

#include <vector>

#include "segclust/signal.hpp"

namespace segclust {

/// Prefix sums of a signal enabling O(1) segment mean and within-segment
/// sum-of-squared-errors queries. Read-only after construction.
class CostTables {
 public:
  explicit CostTables(const Signal& y);

  int size() const { return n_; }

  /// Sum of y_k..y_l (1-based inclusive).
  double sum(int k, int l) const;
  /// Mean of y_k..y_l.
  double mean(int k, int l) const;
  /// sum_{i=k..l} (y_i - mean(k,l))^2, clamped at 0 against cancellation.
  double cost(int k, int l) const;

  double prefix_sumsq(int l) const { return cumsq_[static_cast<std::size_t>(l)]; }

 private:
  void check_range(int k, int l) const;

  std::vector<double> cum_;    // cum_[0] = 0
  std::vector<double> cumsq_;  // cumsq_[0] = 0
  int n_ = 0;
};

/// Segment means sorted ascending, each carrying its segment length as
/// weight, plus the permutation back to the original segment order.
/// Ties between equal means keep the original segment order.
class WeightedLevels {
 public:
  WeightedLevels(std::vector<double> sorted_means, std::vector<int> weights,
                 std::vector<int> sorted_to_original);

  /// Number of levels t.
  int count() const { return static_cast<int>(means_.size()); }

  double mean(int pos) const;           // sorted position, 1-based
  int weight(int pos) const;
  int original_index(int pos) const;    // 0-based original segment index

  /// Weighted mean of sorted positions k..l.
  double weighted_mean(int k, int l) const;
  /// sum_{i=k..l} w_i (m_i - weighted_mean(k,l))^2, clamped at 0.
  double cost(int k, int l) const;

 private:
  void check_range(int k, int l) const;

  std::vector<double> means_;
  std::vector<int> weights_;
  std::vector<int> sorted_to_original_;
  std::vector<double> wcum_;    // prefix sums of weights
  std::vector<double> awcum_;   // prefix sums of weight * mean
  std::vector<double> aw2cum_;  // prefix sums of weight * mean^2
};

inline double weighted_cost(const WeightedLevels& w, int k, int l) { return w.cost(k, l); }

}  // namespace segclust
