#include "segclust/cluster_dp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "dp_kernel.hpp"

namespace segclust {

FullPartition::FullPartition(Segmentation segmentation, std::vector<int> cluster_of)
    : segmentation_(std::move(segmentation)), cluster_of_(std::move(cluster_of)) {
  if (static_cast<int>(cluster_of_.size()) != segmentation_.num_segments()) {
    throw std::invalid_argument("one cluster label per segment required");
  }
  int max_label = -1;
  for (int label : cluster_of_) {
    if (label < 0) throw std::invalid_argument("cluster labels must be >= 0");
    max_label = std::max(max_label, label);
  }
  num_clusters_ = max_label + 1;
  std::vector<bool> used(static_cast<std::size_t>(num_clusters_), false);
  for (int label : cluster_of_) used[static_cast<std::size_t>(label)] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("cluster labels must be contiguous and nonempty");
  }
}

ClusterDpResult::ClusterDpResult(int count, int max_clusters, std::vector<double> cost,
                                 std::vector<int> argmin)
    : count_(count), max_clusters_(max_clusters), cost_(std::move(cost)), argmin_(std::move(argmin)) {}

double ClusterDpResult::cost(int delta, int t) const {
  if (delta < 1 || delta > max_clusters_ || t < delta || t > count_) {
    throw std::out_of_range("G_(t,delta) undefined for delta=" + std::to_string(delta) +
                            ", t=" + std::to_string(t));
  }
  return cost_[static_cast<std::size_t>(delta) * (static_cast<std::size_t>(count_) + 1) +
               static_cast<std::size_t>(t)];
}

Segmentation ClusterDpResult::blocks(int delta) const {
  cost(delta, count_);  // range check
  detail::PartitionDp view{count_, max_clusters_, cost_, argmin_};
  return Segmentation(view.backtrack(delta, count_));
}

WeightedLevels sort_segment_means(const CostTables& tables, const Segmentation& seg) {
  if (seg.n() != tables.size()) {
    throw std::invalid_argument("segmentation does not match cost tables");
  }
  const int s = seg.num_segments();
  std::vector<double> means(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    Interval sp = seg.segment(j);
    means[static_cast<std::size_t>(j)] = tables.mean(sp.first, sp.last);
  }

  std::vector<int> order(static_cast<std::size_t>(s));
  std::iota(order.begin(), order.end(), 0);
  // equal means keep original segment order, so the permutation is unique
  std::sort(order.begin(), order.end(), [&means](int a, int b) {
    double ma = means[static_cast<std::size_t>(a)];
    double mb = means[static_cast<std::size_t>(b)];
    return ma < mb || (ma == mb && a < b);
  });

  std::vector<double> sorted_means(static_cast<std::size_t>(s));
  std::vector<int> weights(static_cast<std::size_t>(s));
  for (int pos = 0; pos < s; ++pos) {
    int j = order[static_cast<std::size_t>(pos)];
    sorted_means[static_cast<std::size_t>(pos)] = means[static_cast<std::size_t>(j)];
    weights[static_cast<std::size_t>(pos)] = seg.segment(j).length();
  }
  return WeightedLevels(std::move(sorted_means), std::move(weights), std::move(order));
}

ClusterDpResult second_pass(const WeightedLevels& w, int max_clusters) {
  const int t = w.count();
  if (max_clusters < 1 || max_clusters > t) {
    throw std::invalid_argument("max_clusters must be in [1, t]");
  }
  auto dp = detail::run_partition_dp(t, max_clusters,
                                     [&w](int k, int l) { return w.cost(k, l); });
  return {t, max_clusters, std::move(dp.cost), std::move(dp.argmin)};
}

FullPartition reconstruct(const Segmentation& seg, const Segmentation& blocks,
                          const std::vector<int>& sorted_to_original) {
  const int s = seg.num_segments();
  if (blocks.n() != s || static_cast<int>(sorted_to_original.size()) != s) {
    throw std::invalid_argument("blocks and permutation must cover all segments");
  }
  std::vector<int> labels(static_cast<std::size_t>(s), -1);
  for (int j = 0; j < blocks.num_segments(); ++j) {
    Interval block = blocks.segment(j);
    for (int pos = block.first; pos <= block.last; ++pos) {
      int original = sorted_to_original[static_cast<std::size_t>(pos) - 1];
      if (original < 0 || original >= s || labels[static_cast<std::size_t>(original)] != -1) {
        throw std::invalid_argument("permutation must be a bijection over segments");
      }
      labels[static_cast<std::size_t>(original)] = j;
    }
  }
  return FullPartition(seg, std::move(labels));
}

FullPartition merge_adjacent(const FullPartition& p) {
  const auto& labels = p.cluster_of();
  std::vector<int> breaks{0};
  std::vector<int> merged_labels;
  for (int j = 0; j < p.num_segments(); ++j) {
    if (j + 1 < p.num_segments() &&
        labels[static_cast<std::size_t>(j)] == labels[static_cast<std::size_t>(j) + 1]) {
      continue;  // run continues
    }
    breaks.push_back(p.segmentation().segment(j).last);
    merged_labels.push_back(labels[static_cast<std::size_t>(j)]);
  }
  return FullPartition(Segmentation(std::move(breaks)), std::move(merged_labels));
}

std::vector<double> cluster_levels(const Signal& y, const FullPartition& p) {
  if (p.n() != y.size()) throw std::invalid_argument("partition does not match signal length");
  std::vector<double> sums(static_cast<std::size_t>(p.num_clusters()), 0.0);
  std::vector<int> counts(static_cast<std::size_t>(p.num_clusters()), 0);
  for (int j = 0; j < p.num_segments(); ++j) {
    Interval s = p.segmentation().segment(j);
    auto c = static_cast<std::size_t>(p.cluster_of()[static_cast<std::size_t>(j)]);
    for (int i = s.first; i <= s.last; ++i) sums[c] += y[i - 1];
    counts[c] += s.length();
  }
  for (std::size_t c = 0; c < sums.size(); ++c) sums[c] /= counts[c];
  return sums;
}

std::vector<double> fitted_values(const Signal& y, const FullPartition& p) {
  std::vector<double> levels = cluster_levels(y, p);
  std::vector<double> fitted(static_cast<std::size_t>(y.size()));
  for (int j = 0; j < p.num_segments(); ++j) {
    Interval s = p.segmentation().segment(j);
    double level = levels[static_cast<std::size_t>(p.cluster_of()[static_cast<std::size_t>(j)])];
    for (int i = s.first; i <= s.last; ++i) fitted[static_cast<std::size_t>(i) - 1] = level;
  }
  return fitted;
}

}  // namespace segclust
