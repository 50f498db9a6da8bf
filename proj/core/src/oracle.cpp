#include "segclust/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "segclust/selector.hpp"

namespace segclust {

namespace {

// Builds a FullPartition from per-index cluster labels (contiguous,
// first-appearance order): segments are the maximal runs of one label.
FullPartition partition_from_labels(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> breaks{0};
  std::vector<int> segment_labels;
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n && labels[static_cast<std::size_t>(i)] == labels[static_cast<std::size_t>(i) + 1]) {
      continue;
    }
    breaks.push_back(i + 1);
    segment_labels.push_back(labels[static_cast<std::size_t>(i)]);
  }
  return FullPartition(Segmentation(std::move(breaks)), std::move(segment_labels));
}

}  // namespace

void for_each_partition(int n, const std::function<void(const FullPartition&)>& fn) {
  if (n < 1) throw std::invalid_argument("partition enumeration requires n >= 1");
  if (n > 12) throw std::invalid_argument("partition enumeration guarded to n <= 12");

  // Restricted-growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(partition_from_labels(a));

    int i = n - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] == prefix_max[static_cast<std::size_t>(i) - 1] + 1) {
      --i;
    }
    if (i == 0) return;
    ++a[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i) - 1], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(j) - 1];
    }
  }
}

std::vector<FullPartition> enumerate_partitions(int n) {
  std::vector<FullPartition> all;
  for_each_partition(n, [&all](const FullPartition& p) { all.push_back(p); });
  return all;
}

ExactMinimum exact_min_crit(const Signal& y, const PenaltySpec& spec) {
  spec.validate();
  const int n = y.size();
  if (n > 9) throw std::invalid_argument("exact criterion minimization guarded to n <= 9");
  if (spec.n != n) throw std::invalid_argument("penalty spec length does not match signal");

  const LogCombinatorics lc(n);
  double best = std::numeric_limits<double>::infinity();
  FullPartition best_partition(Segmentation::single(n),
                               std::vector<int>(1, 0));
  for_each_partition(n, [&](const FullPartition& p) {
    // residual via per-cluster moments
    std::vector<double> sum(static_cast<std::size_t>(p.num_clusters()), 0.0);
    std::vector<double> sumsq(static_cast<std::size_t>(p.num_clusters()), 0.0);
    std::vector<int> count(static_cast<std::size_t>(p.num_clusters()), 0);
    for (int j = 0; j < p.num_segments(); ++j) {
      Interval s = p.segmentation().segment(j);
      auto c = static_cast<std::size_t>(p.cluster_of()[static_cast<std::size_t>(j)]);
      for (int i = s.first; i <= s.last; ++i) {
        sum[c] += y[i - 1];
        sumsq[c] += y[i - 1] * y[i - 1];
      }
      count[c] += s.length();
    }
    double rss = 0.0;
    for (std::size_t c = 0; c < sum.size(); ++c) rss += sumsq[c] - sum[c] * sum[c] / count[c];
    double crit = rss + spec.sigma2 * spec.k * pen(p.dprime(), p.dpp(), spec, lc);
    if (crit < best) {  // ties keep the first partition in enumeration order
      best = crit;
      best_partition = p;
    }
  });
  return {best, std::move(best_partition)};
}

double risk_bound(int dprime, int dpp, int n, double sigma) {
  if (n < 1) throw std::invalid_argument("risk bound requires n >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("risk bound requires sigma > 0");
  if (dprime < 0 || dprime > dpp || dpp > n) {
    throw std::invalid_argument("risk bound requires 0 <= d' <= d'' <= n");
  }
  if (dprime == 0 && dpp > 0) {
    throw std::invalid_argument("d' = 0 admits only d'' = 0");
  }
  const double dn = n;
  double inner;
  if (dprime == 0) {
    inner = 7.0 + 3.0 * std::log(dn);  // 0 ln 0 = 0 convention elsewhere
  } else {
    const double dp = dprime;
    const double ds = dpp;
    inner = 7.0 + 3.0 * (dp + 1.0) * std::log(dn / dp) +
            6.0 * (dp * std::log(ds * std::exp(13.0 / 6.0)) + ds * std::log(dp * std::exp(2.0)) +
                   ds * std::log(dn / ds));
  }
  return 4.0 * sigma * sigma * inner;
}

double risk_bound_per_sample(int dprime, int dpp, int n, double sigma) {
  return risk_bound(dprime, dpp, n, sigma) / n;
}

double consistency_ratio(int dpp, int n) {
  if (n < 1 || dpp < 0) throw std::invalid_argument("consistency ratio requires n >= 1, d'' >= 0");
  return dpp * std::log(static_cast<double>(n)) / n;
}

}  // namespace segclust
