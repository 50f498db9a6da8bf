#include "segclust/segment_dp.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "dp_kernel.hpp"

namespace segclust {

Segmentation::Segmentation(std::vector<int> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0) {
    throw std::invalid_argument("segmentation must start at breakpoint 0");
  }
  for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
    if (breakpoints_[j] <= breakpoints_[j - 1]) {
      throw std::invalid_argument("segmentation breakpoints must be strictly increasing");
    }
  }
}

Interval Segmentation::segment(int j) const {
  if (j < 0 || j >= num_segments()) throw std::out_of_range("segment index out of range");
  return {breakpoints_[static_cast<std::size_t>(j)] + 1, breakpoints_[static_cast<std::size_t>(j) + 1]};
}

std::vector<int> Segmentation::change_points() const {
  return {breakpoints_.begin() + 1, breakpoints_.end() - 1};
}

SegmentDpResult::SegmentDpResult(int n, int max_segments, std::vector<double> cost,
                                 std::vector<int> argmin)
    : n_(n), max_segments_(max_segments), cost_(std::move(cost)), argmin_(std::move(argmin)) {}

double SegmentDpResult::cost(int d, int t) const {
  if (d < 1 || d > max_segments_ || t < d || t > n_) {
    throw std::out_of_range("C_d(t) undefined for d=" + std::to_string(d) +
                            ", t=" + std::to_string(t));
  }
  return cost_[static_cast<std::size_t>(d) * (static_cast<std::size_t>(n_) + 1) +
               static_cast<std::size_t>(t)];
}

Segmentation SegmentDpResult::segmentation(int d) const {
  cost(d, n_);  // range check
  detail::PartitionDp view{n_, max_segments_, cost_, argmin_};
  return Segmentation(view.backtrack(d, n_));
}

SegmentDpResult first_pass(const CostTables& tables, int max_segments) {
  const int n = tables.size();
  if (max_segments < 1 || max_segments > n) {
    throw std::invalid_argument("max_segments must be in [1, n]");
  }
  auto dp = detail::run_partition_dp(n, max_segments,
                                     [&tables](int k, int l) { return tables.cost(k, l); });
  return {n, max_segments, std::move(dp.cost), std::move(dp.argmin)};
}

SegmentDpResult first_pass(const Signal& y, int max_segments) {
  return first_pass(CostTables(y), max_segments);
}

double segmentation_cost(const Signal& y, const Segmentation& seg) {
  if (seg.n() != y.size()) throw std::invalid_argument("segmentation does not match signal length");
  CostTables tables(y);
  double total = 0.0;
  for (int j = 0; j < seg.num_segments(); ++j) {
    Interval s = seg.segment(j);
    total += tables.cost(s.first, s.last);
  }
  return total;
}

}  // namespace segclust
