#include "segclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace segclust {

double mse(const std::vector<double>& fhat, const std::vector<double>& fstar) {
  if (fhat.size() != fstar.size() || fhat.empty()) {
    throw std::invalid_argument("mse requires two sequences of equal nonzero length");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < fhat.size(); ++i) {
    double d = fhat[i] - fstar[i];
    total += d * d;
  }
  return total / static_cast<double>(fhat.size());
}

double cp_accuracy(const std::vector<int>& est, const std::vector<int>& truth, int tol) {
  if (tol < 0) throw std::invalid_argument("tolerance must be >= 0");
  if (est.empty()) return truth.empty() ? 1.0 : 0.0;

  // candidate pairs sorted by distance (then indices, for determinism)
  std::vector<std::tuple<int, int, int>> pairs;
  for (std::size_t e = 0; e < est.size(); ++e) {
    for (std::size_t t = 0; t < truth.size(); ++t) {
      int dist = std::abs(est[e] - truth[t]);
      if (dist <= tol) pairs.emplace_back(dist, est[e], truth[t]);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<int> est_left = est;
  std::vector<int> truth_left = truth;
  int matched = 0;
  for (const auto& [dist, e, t] : pairs) {
    auto ei = std::find(est_left.begin(), est_left.end(), e);
    auto ti = std::find(truth_left.begin(), truth_left.end(), t);
    if (ei != est_left.end() && ti != truth_left.end()) {
      est_left.erase(ei);
      truth_left.erase(ti);
      ++matched;
    }
  }
  return static_cast<double>(matched) / static_cast<double>(est.size());
}

std::vector<double> level_errors(const std::vector<double>& est_levels,
                                 const std::vector<double>& true_levels) {
  if (est_levels.empty() || true_levels.empty()) {
    throw std::invalid_argument("level matching requires at least one level on each side");
  }
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  for (std::size_t e = 0; e < est_levels.size(); ++e) {
    for (std::size_t t = 0; t < true_levels.size(); ++t) {
      pairs.emplace_back(std::abs(est_levels[e] - true_levels[t]), e, t);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<bool> est_used(est_levels.size(), false);
  std::vector<bool> true_used(true_levels.size(), false);
  std::vector<double> errors;
  for (const auto& [dist, e, t] : pairs) {
    if (!est_used[e] && !true_used[t]) {
      est_used[e] = true;
      true_used[t] = true;
      errors.push_back(dist);
    }
  }
  std::size_t unmatched = (est_levels.size() - errors.size()) + (true_levels.size() - errors.size());
  errors.insert(errors.end(), unmatched, std::numeric_limits<double>::infinity());
  return errors;
}

}  // namespace segclust
