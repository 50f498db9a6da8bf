#pragma once

#include <vector>

#include "segclust/cluster_dp.hpp"
#include "segclust/penalty.hpp"
#include "segclust/signal.hpp"

namespace segclust {

/// Outcome of the two-pass selection.
///
/// The grid value is B(d, delta) = C_d(N) + G_(d,delta)
/// + sigma2 * K * pen(delta-1, d-1) for 1 <= delta <= d <= D+1; cells whose
/// model class is empty hold +infinity. Reported change points and
/// dimensions refer to the merged partition (index-adjacent segments of
/// one cluster joined), while crit_value keeps the pre-merge grid value.
struct SelectionResult {
  FullPartition partition;   // pre-merge: chosen_segments segments
  std::vector<double> fitted;
  double crit_value = 0.0;   // B(chosen_segments, chosen_clusters)
  int chosen_segments = 0;   // dhat
  int chosen_clusters = 0;   // deltahat

  std::vector<double> pass1_costs;  // C_d(N), d = 1..D+1
  std::vector<double> g_table;      // G_(d,delta), flattened like b_table
  std::vector<double> b_table;

  FullPartition merged;
  std::vector<int> reported_changepoints;
  int reported_dprime = 0;
  int reported_dpp = 0;

  double b(int d, int delta) const;
  double g(int d, int delta) const;

  int max_segments = 0;  // D + 1
};

/// Runs both dynamic-programming passes on y, assembles the B grid and
/// returns the minimizer; ties go to the smallest d, then smallest delta.
/// Requires N >= 2 and a valid spec with spec.n == y.size().
SelectionResult select(const Signal& y, const PenaltySpec& spec);

/// ||y - fitted_values(y, p)||^2 + sigma2 * K * pen(d'_p, d''_p) with the
/// partition's own dimensions.
double crit_of_partition(const Signal& y, const FullPartition& p, const PenaltySpec& spec);

}  // namespace segclust
