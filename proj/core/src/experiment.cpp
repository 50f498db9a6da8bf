#include "segclust/experiment.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "segclust/io.hpp"
#include "segclust/metrics.hpp"
#include "segclust/oracle.hpp"
#include "segclust/selector.hpp"

namespace segclust {

void ExperimentConfig::validate() const {
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  if (snr.has_value() == sigma.has_value()) {
    throw std::invalid_argument("exactly one of snr and sigma must be given");
  }
  if (sigma && !(*sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  if (snr && !(*snr > 0.0)) throw std::invalid_argument("snr must be > 0");
  if (tol < 0) throw std::invalid_argument("tol must be >= 0");
  if (max_changes < 1 || max_changes > spec.n() - 1) {
    throw std::invalid_argument("max-changes must be in [1, n-1]");
  }
  if (!(penalty_k > 0.0)) throw std::invalid_argument("penalty K must be > 0");
}

std::uint64_t rep_seed(std::uint64_t master, int rep) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(rep) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const double sigma = config.sigma ? *config.sigma : snr_to_sigma(config.spec, *config.snr);
  const int n = config.spec.n();
  const PenaltySpec penalty{.n = n,
                            .k = config.penalty_k,
                            .sigma2 = sigma * sigma,
                            .max_changes = config.max_changes};
  penalty.validate();

  const std::vector<double> truth = config.spec.ground_truth();
  const std::vector<int> true_cps = config.spec.change_points();
  const double bound =
      risk_bound_per_sample(config.spec.dprime(), config.spec.dpp(), n, sigma);

  ExperimentResult result;
  result.sigma = sigma;
  result.rows.resize(static_cast<std::size_t>(config.reps));

  auto run_one = [&](int rep) {
    const std::uint64_t seed = rep_seed(config.seed, rep);
    Signal y = generate(config.spec, sigma, seed);
    SelectionResult fit = select(y, penalty);
    RepRow row;
    row.seed = seed;
    row.mse = mse(fit.fitted, truth);
    row.bound = bound;
    row.cp_accuracy = cp_accuracy(fit.reported_changepoints, true_cps, config.tol);
    row.dprime = fit.reported_dprime;
    row.dpp = fit.reported_dpp;
    result.rows[static_cast<std::size_t>(rep)] = row;
  };

  unsigned workers = std::min<unsigned>(static_cast<unsigned>(config.reps),
                                        std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (int rep = 0; rep < config.reps; ++rep) run_one(rep);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int rep = next.fetch_add(1); rep < config.reps; rep = next.fetch_add(1)) {
          run_one(rep);
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
  }

  double acc = 0.0;
  double below = 0.0;
  double total_mse = 0.0;
  for (const RepRow& row : result.rows) {
    acc += row.cp_accuracy;
    total_mse += row.mse;
    if (row.mse < row.bound) below += 1.0;
  }
  result.mean_cp_accuracy = acc / config.reps;
  result.frac_mse_below_bound = below / config.reps;
  result.mean_mse = total_mse / config.reps;
  return result;
}

std::string reps_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "seed,mse,bound,cp_accuracy,dprime,dpp\n";
  for (const RepRow& row : result.rows) {
    out << row.seed << ',' << format_real(row.mse) << ',' << format_real(row.bound) << ','
        << format_real(row.cp_accuracy) << ',' << row.dprime << ',' << row.dpp << '\n';
  }
  return out.str();
}

std::string summary_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "reps,sigma,mean_cp_accuracy,frac_mse_below_bound,mean_mse,bound_per_sample\n";
  out << result.rows.size() << ',' << format_real(result.sigma) << ','
      << format_real(result.mean_cp_accuracy) << ',' << format_real(result.frac_mse_below_bound)
      << ',' << format_real(result.mean_mse) << ','
      << format_real(result.rows.empty() ? 0.0 : result.rows.front().bound) << '\n';
  return out.str();
}

}  // namespace segclust
