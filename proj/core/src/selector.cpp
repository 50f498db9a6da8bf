#include "segclust/selector.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "segclust/segment_dp.hpp"

namespace segclust {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double SelectionResult::b(int d, int delta) const {
  if (d < 1 || d > max_segments || delta < 1 || delta > d) {
    throw std::out_of_range("B(d,delta) requires 1 <= delta <= d <= D+1");
  }
  return b_table[static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(max_segments) +
                 static_cast<std::size_t>(delta) - 1];
}

double SelectionResult::g(int d, int delta) const {
  if (d < 1 || d > max_segments || delta < 1 || delta > d) {
    throw std::out_of_range("G(d,delta) requires 1 <= delta <= d <= D+1");
  }
  return g_table[static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(max_segments) +
                 static_cast<std::size_t>(delta) - 1];
}

SelectionResult select(const Signal& y, const PenaltySpec& spec) {
  spec.validate();
  const int n = y.size();
  if (n < 2) throw std::invalid_argument("selection requires N >= 2");
  if (spec.n != n) throw std::invalid_argument("penalty spec length does not match signal");

  const int max_segments = spec.max_changes + 1;  // D change points = D+1 segments
  const CostTables tables(y);
  const SegmentDpResult pass1 = first_pass(tables, max_segments);
  const LogCombinatorics lc(max_segments);

  const auto grid = static_cast<std::size_t>(max_segments);
  std::vector<double> b_table(grid * grid, kInf);
  std::vector<double> g_table(grid * grid, kInf);
  std::vector<double> pass1_costs(grid);

  double best = kInf;
  int best_d = 1;
  int best_delta = 1;

  // Kept per d so the winning (d, delta) can be reconstructed without
  // rerunning the pass.
  std::vector<Segmentation> segmentations;
  std::vector<WeightedLevels> levels;
  std::vector<ClusterDpResult> pass2;
  segmentations.reserve(grid);
  levels.reserve(grid);
  pass2.reserve(grid);

  for (int d = 1; d <= max_segments; ++d) {
    pass1_costs[static_cast<std::size_t>(d) - 1] = pass1.cost(d);
    segmentations.push_back(pass1.segmentation(d));
    levels.push_back(sort_segment_means(tables, segmentations.back()));
    pass2.push_back(second_pass(levels.back(), d));

    for (int delta = 1; delta <= d; ++delta) {
      double g = pass2.back().cost(delta);
      double penalty = pen(delta - 1, d - 1, spec, lc);
      double value = pass1.cost(d) + g + spec.sigma2 * spec.k * penalty;
      g_table[static_cast<std::size_t>(d - 1) * grid + static_cast<std::size_t>(delta) - 1] = g;
      b_table[static_cast<std::size_t>(d - 1) * grid + static_cast<std::size_t>(delta) - 1] = value;
      if (value < best) {  // strict: ties keep the smallest (d, delta)
        best = value;
        best_d = d;
        best_delta = delta;
      }
    }
  }

  const auto di = static_cast<std::size_t>(best_d) - 1;
  FullPartition partition = reconstruct(segmentations[di], pass2[di].blocks(best_delta),
                                        [&] {
                                          std::vector<int> phi(static_cast<std::size_t>(best_d));
                                          for (int pos = 1; pos <= best_d; ++pos) {
                                            phi[static_cast<std::size_t>(pos) - 1] =
                                                levels[di].original_index(pos);
                                          }
                                          return phi;
                                        }());

  FullPartition merged = merge_adjacent(partition);

  SelectionResult result{.partition = partition,
                         .fitted = fitted_values(y, partition),
                         .crit_value = best,
                         .chosen_segments = best_d,
                         .chosen_clusters = best_delta,
                         .pass1_costs = std::move(pass1_costs),
                         .g_table = std::move(g_table),
                         .b_table = std::move(b_table),
                         .merged = merged,
                         .reported_changepoints = merged.segmentation().change_points(),
                         .reported_dprime = merged.dprime(),
                         .reported_dpp = merged.dpp(),
                         .max_segments = max_segments};
  return result;
}

double crit_of_partition(const Signal& y, const FullPartition& p, const PenaltySpec& spec) {
  spec.validate();
  if (p.n() != y.size() || spec.n != y.size()) {
    throw std::invalid_argument("partition, signal and spec lengths must agree");
  }
  std::vector<double> fitted = fitted_values(y, p);
  double rss = 0.0;
  for (int i = 0; i < y.size(); ++i) {
    double r = y[i] - fitted[static_cast<std::size_t>(i)];
    rss += r * r;
  }
  return rss + spec.sigma2 * spec.k * pen(p.dprime(), p.dpp(), spec);
}

}  // namespace segclust
