#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace segclust {

/// Closed index interval [first, last], 1-based inclusive.
struct Interval {
  int first = 0;
  int last = 0;

  int length() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Observed real-valued sequence y_1, ..., y_N (N >= 1, all values finite).
class Signal {
 public:
  explicit Signal(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }  // 0-based
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// One signal level shared by a set of disjoint segments.
struct Cluster {
  double level = 0.0;
  std::vector<Interval> segments;
};

/// Ground-truth piecewise-constant model over [1, n].
///
/// Valid specs satisfy: segments are pairwise disjoint and cover [1, n]
/// exactly, index-adjacent segments never belong to the same cluster
/// (each segment is maximal), and cluster levels are pairwise distinct.
class PiecewiseSpec {
 public:
  struct PlacedSegment {
    Interval span;
    int cluster = 0;  // 0-based index into clusters()
  };

  PiecewiseSpec(std::vector<Cluster> clusters, int n);

  int n() const { return n_; }
  int num_clusters() const { return static_cast<int>(clusters_.size()); }
  int num_segments() const { return static_cast<int>(order_.size()); }
  int dprime() const { return num_clusters() - 1; }
  int dpp() const { return num_segments() - 1; }

  const std::vector<Cluster>& clusters() const { return clusters_; }
  /// Segments in positional order with their owning cluster.
  const std::vector<PlacedSegment>& segments_in_order() const { return order_; }

  /// The noiseless signal f*: level of the owning cluster at every index.
  std::vector<double> ground_truth() const;
  /// Last index of every segment except the final one, ascending.
  std::vector<int> change_points() const;
  /// Smallest |level difference| over positionally adjacent segment pairs.
  /// Requires at least two clusters.
  double min_adjacent_jump() const;

 private:
  std::vector<Cluster> clusters_;
  std::vector<PlacedSegment> order_;
  int n_ = 0;
};

/// Deterministic standard-normal stream: mt19937_64 driving a Box-Muller
/// transform. Fixed here so simulations are reproducible from a seed alone.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Samples y_i = f*_i + eps_i with eps_i iid N(0, sigma^2); deterministic
/// given (spec, sigma, seed). Requires sigma > 0.
Signal generate(const PiecewiseSpec& spec, double sigma, std::uint64_t seed);

/// Default levels for the built-in 2000-point example geometry: equally
/// spaced with minimum gap 1, assigned to clusters in listing order.
inline constexpr std::array<double, 5> kExample1DefaultLevels{0.0, 1.0, 2.0, 3.0, 4.0};

/// The built-in 5-cluster / 13-segment partition of [1, 2000] (d' = 4,
/// d'' = 12). Requires exactly 5 pairwise distinct levels, assigned to
/// clusters [1]..[5] in order.
///
/// The published boundary listing assigns index 926 to two segments; we
/// resolve the overlap by keeping 926 in the earlier-listed segment
/// ([821, 926] of cluster [1]) and starting the later one at 927.
PiecewiseSpec example1_spec(const std::vector<double>& levels);

/// Proportionally rescales all segment boundaries to a support of size n.
/// Fails if any segment would collapse.
PiecewiseSpec rescale(const PiecewiseSpec& spec, int n);

/// sigma such that S/N = (smallest adjacent jump of f*) / sigma^2 equals
/// snr. Note the ratio divides by the noise *variance*.
double snr_to_sigma(const PiecewiseSpec& spec, double snr);

}  // namespace segclust
