#pragma once

#include <vector>

namespace segclust {

struct EvalReport {
  double mse_per_sample = 0.0;
  double bound_per_sample = 0.0;
  double cp_accuracy = 0.0;
  int n_detected = 0;
  int n_true = 0;
  std::vector<double> level_errors;
};

/// ||fhat - fstar||^2 / N. Requires equal lengths.
double mse(const std::vector<double>& fhat, const std::vector<double>& fstar);

/// Fraction of detected change points that match a true one: greedy
/// one-to-one matching, nearest pairs first, each true point usable once,
/// a match requiring |est - true| <= tol; returns matched / |est|.
/// Empty est yields 1.0 against empty truth and 0.0 otherwise (the latter
/// is a convention; the ratio is undefined there).
double cp_accuracy(const std::vector<int>& est, const std::vector<int>& truth, int tol);

/// Matches estimated to true levels greedily by nearest value, one-to-one.
/// Returns |est - true| per matched pair plus one +infinity sentinel for
/// every unmatched level on either side.
std::vector<double> level_errors(const std::vector<double>& est_levels,
                                 const std::vector<double>& true_levels);

}  // namespace segclust
