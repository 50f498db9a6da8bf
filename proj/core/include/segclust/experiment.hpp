#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segclust/signal.hpp"

namespace segclust {

/// Replicated simulation protocol: draw reps noisy copies of the spec's
/// signal, fit each one, and score against the truth. Exactly one of snr
/// and sigma must be set.
struct ExperimentConfig {
  PiecewiseSpec spec;
  std::optional<double> snr;
  std::optional<double> sigma;
  int reps = 1;
  std::uint64_t seed = 0;
  int max_changes = 20;
  double penalty_k = 6.0;
  int tol = 5;

  void validate() const;
};

struct RepRow {
  std::uint64_t seed = 0;
  double mse = 0.0;          // per-sample
  double bound = 0.0;        // per-sample risk bound at the true dimensions
  double cp_accuracy = 0.0;
  int dprime = 0;            // reported (post-merge) dimensions
  int dpp = 0;
};

struct ExperimentResult {
  double sigma = 0.0;
  std::vector<RepRow> rows;
  double mean_cp_accuracy = 0.0;
  double frac_mse_below_bound = 0.0;
  double mean_mse = 0.0;
};

/// Per-rep seed: splitmix64 of master + (rep+1) * golden-ratio increment.
std::uint64_t rep_seed(std::uint64_t master, int rep);

/// Runs all replications (concurrently; results are indexed by rep, so
/// the outcome does not depend on scheduling) and aggregates.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV renderings, header included, rows ordered by rep index.
std::string reps_csv(const ExperimentResult& result);
std::string summary_csv(const ExperimentResult& result);

}  // namespace segclust
