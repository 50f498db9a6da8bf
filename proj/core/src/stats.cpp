#include "segclust/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace segclust {

CostTables::CostTables(const Signal& y) : n_(y.size()) {
  cum_.resize(static_cast<std::size_t>(n_) + 1, 0.0);
  cumsq_.resize(static_cast<std::size_t>(n_) + 1, 0.0);
  for (int i = 1; i <= n_; ++i) {
    double v = y[i - 1];
    cum_[static_cast<std::size_t>(i)] = cum_[static_cast<std::size_t>(i) - 1] + v;
    cumsq_[static_cast<std::size_t>(i)] = cumsq_[static_cast<std::size_t>(i) - 1] + v * v;
  }
}

void CostTables::check_range(int k, int l) const {
  if (k < 1 || l > n_ || k > l) {
    throw std::out_of_range("segment [" + std::to_string(k) + "," + std::to_string(l) +
                            "] out of range for n=" + std::to_string(n_));
  }
}

double CostTables::sum(int k, int l) const {
  check_range(k, l);
  return cum_[static_cast<std::size_t>(l)] - cum_[static_cast<std::size_t>(k) - 1];
}

double CostTables::mean(int k, int l) const { return sum(k, l) / (l - k + 1); }

double CostTables::cost(int k, int l) const {
  check_range(k, l);
  double s = cum_[static_cast<std::size_t>(l)] - cum_[static_cast<std::size_t>(k) - 1];
  double sq = cumsq_[static_cast<std::size_t>(l)] - cumsq_[static_cast<std::size_t>(k) - 1];
  double c = sq - s * s / (l - k + 1);
  return c > 0.0 ? c : 0.0;  // mathematically >= 0; negatives are cancellation
}

WeightedLevels::WeightedLevels(std::vector<double> sorted_means, std::vector<int> weights,
                               std::vector<int> sorted_to_original)
    : means_(std::move(sorted_means)),
      weights_(std::move(weights)),
      sorted_to_original_(std::move(sorted_to_original)) {
  const std::size_t t = means_.size();
  if (t == 0) throw std::invalid_argument("weighted levels must be nonempty");
  if (weights_.size() != t || sorted_to_original_.size() != t) {
    throw std::invalid_argument("weighted levels: size mismatch");
  }
  std::vector<bool> seen(t, false);
  for (std::size_t i = 0; i < t; ++i) {
    if (i > 0 && means_[i] < means_[i - 1]) {
      throw std::invalid_argument("weighted levels: means must be nondecreasing");
    }
    if (weights_[i] < 1) throw std::invalid_argument("weighted levels: weights must be >= 1");
    int o = sorted_to_original_[i];
    if (o < 0 || o >= static_cast<int>(t) || seen[static_cast<std::size_t>(o)]) {
      throw std::invalid_argument("weighted levels: permutation must be a bijection");
    }
    seen[static_cast<std::size_t>(o)] = true;
  }

  wcum_.resize(t + 1, 0.0);
  awcum_.resize(t + 1, 0.0);
  aw2cum_.resize(t + 1, 0.0);
  for (std::size_t i = 0; i < t; ++i) {
    double w = weights_[i];
    wcum_[i + 1] = wcum_[i] + w;
    awcum_[i + 1] = awcum_[i] + w * means_[i];
    aw2cum_[i + 1] = aw2cum_[i] + w * means_[i] * means_[i];
  }
}

void WeightedLevels::check_range(int k, int l) const {
  if (k < 1 || l > count() || k > l) {
    throw std::out_of_range("sorted positions [" + std::to_string(k) + "," + std::to_string(l) +
                            "] out of range for t=" + std::to_string(count()));
  }
}

double WeightedLevels::mean(int pos) const {
  check_range(pos, pos);
  return means_[static_cast<std::size_t>(pos) - 1];
}

int WeightedLevels::weight(int pos) const {
  check_range(pos, pos);
  return weights_[static_cast<std::size_t>(pos) - 1];
}

int WeightedLevels::original_index(int pos) const {
  check_range(pos, pos);
  return sorted_to_original_[static_cast<std::size_t>(pos) - 1];
}

double WeightedLevels::weighted_mean(int k, int l) const {
  check_range(k, l);
  double w = wcum_[static_cast<std::size_t>(l)] - wcum_[static_cast<std::size_t>(k) - 1];
  double a = awcum_[static_cast<std::size_t>(l)] - awcum_[static_cast<std::size_t>(k) - 1];
  return a / w;
}

double WeightedLevels::cost(int k, int l) const {
  check_range(k, l);
  double w = wcum_[static_cast<std::size_t>(l)] - wcum_[static_cast<std::size_t>(k) - 1];
  double a = awcum_[static_cast<std::size_t>(l)] - awcum_[static_cast<std::size_t>(k) - 1];
  double q = aw2cum_[static_cast<std::size_t>(l)] - aw2cum_[static_cast<std::size_t>(k) - 1];
  double c = q - a * a / w;
  return c > 0.0 ? c : 0.0;
}

}  // namespace segclust
