#include "segclust/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace segclust {

Signal::Signal(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("signal must contain at least one value");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("signal values must be finite");
  }
}

PiecewiseSpec::PiecewiseSpec(std::vector<Cluster> clusters, int n)
    : clusters_(std::move(clusters)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("spec length must be >= 1");
  if (clusters_.empty()) throw std::invalid_argument("spec needs at least one cluster");

  for (std::size_t c = 0; c < clusters_.size(); ++c) {
    if (!std::isfinite(clusters_[c].level)) {
      throw std::invalid_argument("cluster level must be finite");
    }
    if (clusters_[c].segments.empty()) {
      throw std::invalid_argument("every cluster needs at least one segment");
    }
    for (const Interval& s : clusters_[c].segments) {
      if (s.first < 1 || s.last > n_ || s.first > s.last) {
        throw std::invalid_argument("segment [" + std::to_string(s.first) + "," +
                                    std::to_string(s.last) + "] out of range");
      }
      order_.push_back({s, static_cast<int>(c)});
    }
  }
  for (std::size_t a = 0; a < clusters_.size(); ++a) {
    for (std::size_t b = a + 1; b < clusters_.size(); ++b) {
      if (clusters_[a].level == clusters_[b].level) {
        throw std::invalid_argument("cluster levels must be pairwise distinct");
      }
    }
  }

  std::sort(order_.begin(), order_.end(),
            [](const PlacedSegment& a, const PlacedSegment& b) { return a.span.first < b.span.first; });
  int expected = 1;
  for (std::size_t j = 0; j < order_.size(); ++j) {
    if (order_[j].span.first != expected) {
      throw std::invalid_argument("segments must cover [1,n] without gaps or overlaps near index " +
                                  std::to_string(expected));
    }
    if (j > 0 && order_[j].cluster == order_[j - 1].cluster) {
      // maximality: index-adjacent segments never share a cluster
      throw std::invalid_argument("adjacent segments in one cluster must be merged");
    }
    expected = order_[j].span.last + 1;
  }
  if (expected != n_ + 1) throw std::invalid_argument("segments must end exactly at n");
}

std::vector<double> PiecewiseSpec::ground_truth() const {
  std::vector<double> f(static_cast<std::size_t>(n_));
  for (const PlacedSegment& s : order_) {
    for (int i = s.span.first; i <= s.span.last; ++i) {
      f[static_cast<std::size_t>(i - 1)] = clusters_[static_cast<std::size_t>(s.cluster)].level;
    }
  }
  return f;
}

std::vector<int> PiecewiseSpec::change_points() const {
  std::vector<int> cps;
  for (std::size_t j = 0; j + 1 < order_.size(); ++j) cps.push_back(order_[j].span.last);
  return cps;
}

double PiecewiseSpec::min_adjacent_jump() const {
  if (num_clusters() < 2) throw std::invalid_argument("spec has a single cluster: no jump");
  double smallest = 0.0;
  bool seen = false;
  for (std::size_t j = 0; j + 1 < order_.size(); ++j) {
    double jump = std::abs(clusters_[static_cast<std::size_t>(order_[j].cluster)].level -
                           clusters_[static_cast<std::size_t>(order_[j + 1].cluster)].level);
    if (!seen || jump < smallest) smallest = jump, seen = true;
  }
  return smallest;
}

double GaussianSampler::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Uniforms from the top 53 bits, offset half an ulp so u in (0, 1).
  auto uniform = [this] {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
  };
  double u1 = uniform();
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * 3.14159265358979323846 * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Signal generate(const PiecewiseSpec& spec, double sigma, std::uint64_t seed) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  std::vector<double> y = spec.ground_truth();
  GaussianSampler gauss(seed);
  for (double& v : y) v += sigma * gauss.next();
  return Signal(std::move(y));
}

PiecewiseSpec example1_spec(const std::vector<double>& levels) {
  if (levels.size() != 5) throw std::invalid_argument("example1 needs exactly 5 levels");

  // Listing order of the published geometry; cluster ids are 1-based.
  // Index 926 appears twice in the source listing; the earlier-listed
  // segment [821, 926] keeps it and [926, 1018] becomes [927, 1018].
  struct Row {
    int cluster;
    Interval span;
  };
  static constexpr Row kRows[] = {
      {1, {615, 678}},   {1, {821, 926}},   {1, {1019, 1211}}, {1, {1753, 2000}},
      {2, {1, 100}},     {2, {679, 820}},   {2, {1212, 1280}},
      {3, {101, 214}},   {3, {505, 614}},   {3, {927, 1018}},  {3, {1281, 1600}},
      {4, {215, 504}},
      {5, {1601, 1752}},
  };

  std::vector<Cluster> clusters(5);
  for (int c = 0; c < 5; ++c) clusters[static_cast<std::size_t>(c)].level = levels[static_cast<std::size_t>(c)];
  for (const Row& row : kRows) {
    clusters[static_cast<std::size_t>(row.cluster - 1)].segments.push_back(row.span);
  }
  return PiecewiseSpec(std::move(clusters), 2000);
}

PiecewiseSpec rescale(const PiecewiseSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("rescale target length must be >= 1");
  const auto& order = spec.segments_in_order();
  const double factor = static_cast<double>(n) / spec.n();

  std::vector<Cluster> clusters(static_cast<std::size_t>(spec.num_clusters()));
  for (int c = 0; c < spec.num_clusters(); ++c) {
    clusters[static_cast<std::size_t>(c)].level = spec.clusters()[static_cast<std::size_t>(c)].level;
  }
  int prev_end = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    int end = (j + 1 == order.size())
                  ? n
                  : static_cast<int>(std::llround(order[j].span.last * factor));
    if (end <= prev_end) {
      throw std::invalid_argument("rescale collapses a segment; target length too small");
    }
    clusters[static_cast<std::size_t>(order[j].cluster)].segments.push_back({prev_end + 1, end});
    prev_end = end;
  }
  return PiecewiseSpec(std::move(clusters), n);
}

double snr_to_sigma(const PiecewiseSpec& spec, double snr) {
  if (!(snr > 0.0)) throw std::invalid_argument("snr must be > 0");
  // S/N divides the smallest jump by the variance, so sigma = sqrt(J/snr).
  return std::sqrt(spec.min_adjacent_jump() / snr);
}

}  // namespace segclust
