#pragma once

// Independent brute-force references used by the test suites only. These
// deliberately avoid the library's prefix-sum and DP code paths.

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace testsupport {

inline double naive_cost(const std::vector<double>& v, int first, int last) {
  double mean = 0.0;
  for (int i = first; i <= last; ++i) mean += v[static_cast<std::size_t>(i)];
  mean /= (last - first + 1);
  double sse = 0.0;
  for (int i = first; i <= last; ++i) {
    double d = v[static_cast<std::size_t>(i)] - mean;
    sse += d * d;
  }
  return sse;
}

inline double naive_weighted_cost(const std::vector<double>& means, const std::vector<int>& weights,
                                  int first, int last) {
  double wsum = 0.0;
  double mean = 0.0;
  for (int i = first; i <= last; ++i) {
    wsum += weights[static_cast<std::size_t>(i)];
    mean += weights[static_cast<std::size_t>(i)] * means[static_cast<std::size_t>(i)];
  }
  mean /= wsum;
  double sse = 0.0;
  for (int i = first; i <= last; ++i) {
    double d = means[static_cast<std::size_t>(i)] - mean;
    sse += weights[static_cast<std::size_t>(i)] * d * d;
  }
  return sse;
}

// Minimum SSE over all splits of v into exactly parts contiguous pieces.
inline double exhaustive_segmentation_min(const std::vector<double>& v, int parts, int start = 0) {
  const int n = static_cast<int>(v.size());
  if (parts == 1) return naive_cost(v, start, n - 1);
  double best = std::numeric_limits<double>::infinity();
  for (int end = start; end <= n - parts; ++end) {
    double value = naive_cost(v, start, end) + exhaustive_segmentation_min(v, parts - 1, end + 1);
    if (value < best) best = value;
  }
  return best;
}

inline double exhaustive_weighted_min(const std::vector<double>& means,
                                      const std::vector<int>& weights, int parts, int start = 0) {
  const int n = static_cast<int>(means.size());
  if (parts == 1) return naive_weighted_cost(means, weights, start, n - 1);
  double best = std::numeric_limits<double>::infinity();
  for (int end = start; end <= n - parts; ++end) {
    double value = naive_weighted_cost(means, weights, start, end) +
                   exhaustive_weighted_min(means, weights, parts - 1, end + 1);
    if (value < best) best = value;
  }
  return best;
}

// Pascal triangle, exact. Safe well past n = 60 for the ranges used here.
inline std::vector<std::vector<unsigned long long>> pascal_triangle(int nmax) {
  std::vector<std::vector<unsigned long long>> c(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    c[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) {
      c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          c[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1] +
          c[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)];
    }
  }
  return c;
}

// Exact Stirling numbers of the second kind; fits 64 bits through n = 25.
inline std::vector<std::vector<unsigned long long>> stirling_triangle(int nmax) {
  if (nmax > 25) throw std::invalid_argument("exact Stirling oracle capped at n = 25");
  std::vector<std::vector<unsigned long long>> s(static_cast<std::size_t>(nmax) + 1);
  s[0] = {1};
  for (int n = 1; n <= nmax; ++n) {
    s[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
      unsigned long long up = s[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k) - 1];
      unsigned long long same = k < n ? s[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(k)] : 0;
      s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          up + static_cast<unsigned long long>(k) * same;
    }
  }
  return s;
}

// Bell numbers via the Bell triangle; fits 64 bits far beyond n = 12.
inline std::vector<unsigned long long> bell_numbers(int nmax) {
  std::vector<unsigned long long> bell{1};
  std::vector<unsigned long long> row{1};
  for (int n = 1; n <= nmax; ++n) {
    std::vector<unsigned long long> next{row.back()};
    for (unsigned long long v : row) next.push_back(next.back() + v);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

// Number of partitions of an n-set into exactly k nonempty classes, counted
// by direct recursive assignment (independent of any recurrence identity).
inline unsigned long long count_partitions_with_classes(int n, int k) {
  struct Counter {
    int n, k;
    unsigned long long count = 0;
    void place(int element, int classes_used, std::vector<int>& label) {
      if (element == n) {
        if (classes_used == k) ++count;
        return;
      }
      for (int c = 0; c < classes_used; ++c) {
        label[static_cast<std::size_t>(element)] = c;
        place(element + 1, classes_used, label);
      }
      label[static_cast<std::size_t>(element)] = classes_used;
      place(element + 1, classes_used + 1, label);
    }
  } counter{n, k};
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  counter.place(0, 0, label);
  return counter.count;
}

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * ((static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53);
  }
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double normal() {
    double u1 = uniform(0.0, 1.0);
    double u2 = uniform(0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  std::vector<double> normal_vector(int n, double scale = 1.0) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = scale * normal();
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testsupport
