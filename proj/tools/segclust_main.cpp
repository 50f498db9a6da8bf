// Command-line front end: simulate signals, fit signals from files, run
// replicated experiments and evaluate the adaptive risk bound.
//
// Exit codes: 0 success, 2 validation error, 3 I/O error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segclust/experiment.hpp"
#include "segclust/io.hpp"
#include "segclust/oracle.hpp"
#include "segclust/selector.hpp"
#include "segclust/signal.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct SpecOptions {
  std::string spec_file;
  std::string levels = "0,1,2,3,4";
  int n = 0;  // 0: keep the source length
};

std::vector<double> parse_levels(const std::string& text) {
  std::vector<double> levels;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      levels.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad level value '" + item + "'");
    }
  }
  return levels;
}

segclust::PiecewiseSpec load_spec(const SpecOptions& options) {
  segclust::PiecewiseSpec spec = options.spec_file.empty()
                                     ? segclust::example1_spec(parse_levels(options.levels))
                                     : segclust::read_spec_table(options.spec_file);
  if (options.n > 0 && options.n != spec.n()) spec = segclust::rescale(spec, options.n);
  return spec;
}

void add_spec_options(CLI::App* cmd, SpecOptions* options) {
  cmd->add_option("--spec", options->spec_file,
                  "ground-truth table (cluster_index,level,seg_start,seg_end); "
                  "default: built-in 2000-point example");
  cmd->add_option("--levels", options->levels,
                  "comma-separated cluster levels for the built-in example");
  cmd->add_option("--n", options->n, "rescale the spec to this length");
}

double resolve_sigma(const segclust::PiecewiseSpec& spec, const std::optional<double>& snr,
                     const std::optional<double>& sigma) {
  if (snr.has_value() == sigma.has_value()) {
    throw std::invalid_argument("exactly one of --snr and --sigma is required");
  }
  return sigma ? *sigma : segclust::snr_to_sigma(spec, *snr);
}

std::filesystem::path prepare_out_dir(const std::string& out) {
  std::filesystem::path dir(out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw segclust::IoError("cannot create output directory " + dir.string());
  return dir;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw segclust::IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw segclust::IoError("failed writing " + path.string());
}

// Convenience only; the selection criterion itself requires a known sigma.
double mad_sigma_estimate(const segclust::Signal& y) {
  if (y.size() < 2) throw std::invalid_argument("sigma estimate needs at least 2 samples");
  std::vector<double> diffs(static_cast<std::size_t>(y.size()) - 1);
  for (int i = 0; i + 1 < y.size(); ++i) diffs[static_cast<std::size_t>(i)] = y[i + 1] - y[i];
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
  };
  double center = median(diffs);
  for (double& d : diffs) d = std::abs(d - center);
  double sigma = 1.4826 * median(std::move(diffs)) / std::sqrt(2.0);
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("sigma estimate degenerate; pass --sigma explicitly");
  }
  return sigma;
}

int run_simulate(const SpecOptions& spec_options, std::optional<double> snr,
                 std::optional<double> sigma, std::uint64_t seed, int reps,
                 const std::string& out) {
  if (reps != 1) throw std::invalid_argument("simulate is single-shot; --reps must be 1");
  segclust::PiecewiseSpec spec = load_spec(spec_options);
  double noise = resolve_sigma(spec, snr, sigma);
  segclust::Signal y = segclust::generate(spec, noise, seed);

  std::filesystem::path dir = prepare_out_dir(out);
  segclust::write_signal(dir / "signal.txt", y);
  segclust::write_spec_table(dir / "truth.csv", spec);
  std::cout << "sigma " << segclust::format_real(noise) << "\n";
  return 0;
}

int run_fit(const std::string& signal_file, std::optional<double> sigma, bool estimate_sigma,
            int max_changes, double penalty_k, const std::string& out) {
  segclust::Signal y = segclust::read_signal(signal_file);
  if (sigma.has_value() == estimate_sigma) {
    throw std::invalid_argument("pass exactly one of --sigma and --estimate-sigma");
  }
  double noise = sigma ? *sigma : mad_sigma_estimate(y);
  if (!(noise > 0.0)) throw std::invalid_argument("sigma must be > 0");

  segclust::PenaltySpec penalty{
      .n = y.size(), .k = penalty_k, .sigma2 = noise * noise, .max_changes = max_changes};

  auto start = std::chrono::steady_clock::now();
  segclust::SelectionResult fit = segclust::select(y, penalty);
  double runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::filesystem::path dir = prepare_out_dir(out);

  std::ostringstream result;
  result << "dprime,dpp,crit,runtime_ms\n"
         << fit.reported_dprime << ',' << fit.reported_dpp << ','
         << segclust::format_real(fit.crit_value) << ',' << segclust::format_real(runtime_ms)
         << '\n';
  write_text(dir / "result.csv", result.str());

  std::ostringstream changepoints;
  changepoints << "index\n";
  for (int cp : fit.reported_changepoints) changepoints << cp << '\n';
  write_text(dir / "changepoints.csv", changepoints.str());

  std::vector<double> levels = segclust::cluster_levels(y, fit.merged);
  std::ostringstream clusters;
  clusters << "seg_start,seg_end,cluster_id,level\n";
  for (int j = 0; j < fit.merged.num_segments(); ++j) {
    segclust::Interval span = fit.merged.segmentation().segment(j);
    int cluster = fit.merged.cluster_of()[static_cast<std::size_t>(j)];
    clusters << span.first << ',' << span.last << ',' << cluster + 1 << ','
             << segclust::format_real(levels[static_cast<std::size_t>(cluster)]) << '\n';
  }
  write_text(dir / "clusters.csv", clusters.str());

  // fitted.csv uses the signal file format so it can be re-fit directly
  segclust::write_signal(dir / "fitted.csv", segclust::Signal(fit.fitted));

  std::cout << "selected dprime " << fit.reported_dprime << " dpp " << fit.reported_dpp
            << " crit " << segclust::format_real(fit.crit_value) << "\n";
  return 0;
}

int run_experiment(const SpecOptions& spec_options, std::optional<double> snr,
                   std::optional<double> sigma, int reps, std::uint64_t seed, int max_changes,
                   double penalty_k, int tol, const std::string& out) {
  segclust::ExperimentConfig config{.spec = load_spec(spec_options),
                                    .snr = snr,
                                    .sigma = sigma,
                                    .reps = reps,
                                    .seed = seed,
                                    .max_changes = max_changes,
                                    .penalty_k = penalty_k,
                                    .tol = tol};
  segclust::ExperimentResult result = segclust::run_experiment(config);

  std::filesystem::path dir = prepare_out_dir(out);
  write_text(dir / "reps.csv", segclust::reps_csv(result));
  write_text(dir / "summary.csv", segclust::summary_csv(result));

  std::cout << "reps " << reps << " sigma " << segclust::format_real(result.sigma)
            << " mean_cp_accuracy " << segclust::format_real(result.mean_cp_accuracy)
            << " frac_mse_below_bound " << segclust::format_real(result.frac_mse_below_bound)
            << "\n";
  return 0;
}

int run_bound(int dprime, int dpp, int n, double sigma) {
  double total = segclust::risk_bound(dprime, dpp, n, sigma);
  std::cout << "bound " << segclust::format_real(total) << "\n"
            << "bound_per_sample " << segclust::format_real(total / n) << "\n"
            << "consistency_ratio " << segclust::format_real(segclust::consistency_ratio(dpp, n))
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Change-point detection and level clustering by two-pass dynamic programming"};
  app.require_subcommand(1);

  SpecOptions sim_spec;
  std::optional<double> sim_snr, sim_sigma;
  std::uint64_t sim_seed = 0;
  int sim_reps = 1;
  std::string sim_out;
  CLI::App* simulate = app.add_subcommand("simulate", "draw one noisy signal from a ground truth");
  add_spec_options(simulate, &sim_spec);
  simulate->add_option("--snr", sim_snr, "smallest jump divided by noise variance");
  simulate->add_option("--sigma", sim_sigma, "noise standard deviation");
  simulate->add_option("--seed", sim_seed, "PRNG seed");
  simulate->add_option("--reps", sim_reps, "must stay 1 for simulate");
  simulate->add_option("--out", sim_out, "output directory")->required();

  std::string fit_signal;
  std::optional<double> fit_sigma;
  bool fit_estimate = false;
  int fit_max_changes = 20;
  double fit_k = 6.0;
  std::string fit_out;
  CLI::App* fit = app.add_subcommand("fit", "select change points and clusters for a signal file");
  fit->add_option("--signal", fit_signal, "signal file, one value per line")->required();
  fit->add_option("--sigma", fit_sigma, "known noise standard deviation");
  fit->add_flag("--estimate-sigma", fit_estimate,
                "estimate sigma from first differences (MAD heuristic, convenience only)");
  fit->add_option("--max-changes", fit_max_changes, "maximum number of change points D");
  fit->add_option("--penalty-k", fit_k, "penalty multiplier K");
  fit->add_option("--out", fit_out, "output directory")->required();

  SpecOptions exp_spec;
  std::optional<double> exp_snr, exp_sigma;
  int exp_reps = 50;
  std::uint64_t exp_seed = 0;
  int exp_max_changes = 20;
  double exp_k = 6.0;
  int exp_tol = 5;
  std::string exp_out;
  CLI::App* experiment = app.add_subcommand("experiment", "replicated simulate-and-fit protocol");
  add_spec_options(experiment, &exp_spec);
  experiment->add_option("--snr", exp_snr, "smallest jump divided by noise variance");
  experiment->add_option("--sigma", exp_sigma, "noise standard deviation");
  experiment->add_option("--reps", exp_reps, "number of replications");
  experiment->add_option("--seed", exp_seed, "master seed; per-rep seeds are derived");
  experiment->add_option("--max-changes", exp_max_changes, "maximum number of change points D");
  experiment->add_option("--penalty-k", exp_k, "penalty multiplier K");
  experiment->add_option("--tol", exp_tol, "change-point matching tolerance in samples");
  experiment->add_option("--out", exp_out, "output directory")->required();

  int bound_dprime = 0;
  int bound_dpp = 0;
  int bound_n = 0;
  double bound_sigma = 1.0;
  CLI::App* bound = app.add_subcommand("bound", "evaluate the adaptive risk bound");
  bound->add_option("--dprime", bound_dprime, "clustering dimension d'")->required();
  bound->add_option("--dpp", bound_dpp, "change-point dimension d''")->required();
  bound->add_option("--n", bound_n, "sequence length")->required();
  bound->add_option("--sigma", bound_sigma, "noise standard deviation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (simulate->parsed()) {
      return run_simulate(sim_spec, sim_snr, sim_sigma, sim_seed, sim_reps, sim_out);
    }
    if (fit->parsed()) {
      return run_fit(fit_signal, fit_sigma, fit_estimate, fit_max_changes, fit_k, fit_out);
    }
    if (experiment->parsed()) {
      return run_experiment(exp_spec, exp_snr, exp_sigma, exp_reps, exp_seed, exp_max_changes,
                            exp_k, exp_tol, exp_out);
    }
    if (bound->parsed()) {
      return run_bound(bound_dprime, bound_dpp, bound_n, bound_sigma);
    }
  } catch (const segclust::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
