#include "segclust/penalty.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace segclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double logaddexp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  double hi = a > b ? a : b;
  double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

void PenaltySpec::validate() const {
  if (n < 1) throw std::invalid_argument("penalty spec: n must be >= 1");
  if (!(k > 0.0)) throw std::invalid_argument("penalty spec: K must be > 0");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("penalty spec: sigma2 must be > 0");
  if (max_changes < 1 || max_changes > n - 1) {
    throw std::invalid_argument("penalty spec: D must be in [1, n-1]");
  }
}

double log_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("binomial requires 0 <= k <= n");
  }
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_b_n(int n) {
  if (n < 1) throw std::invalid_argument("B_n requires n >= 1");
  const double e = std::exp(1.0);
  const double log_limit = 3.0 - 2.0 * std::log(e - 1.0) - std::log(e + 1.0);
  const double dn = n;
  const double correction = -std::exp(-2.0 * dn) - std::exp(-dn - 1.0) + std::exp(-2.0 * dn - 1.0) -
                            std::exp(-dn - 2.0) + std::exp(-2.0 * dn - 2.0);
  return log_limit + std::log1p(correction);
}

LogCombinatorics::LogCombinatorics(int cap) : cap_(cap) {
  if (cap < 1) throw std::invalid_argument("combinatorics cap must be >= 1");
  table_.assign(static_cast<std::size_t>(cap + 1) * (static_cast<std::size_t>(cap) + 2) / 2, -kInf);
  auto at = [this](int n, int k) -> double& {
    return table_[static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2 +
                  static_cast<std::size_t>(k)];
  };
  at(0, 0) = 0.0;  // S(0,0) = 1
  for (int n = 1; n <= cap; ++n) {
    for (int k = 1; k <= n; ++k) {
      at(n, k) = logaddexp(at(n - 1, k - 1),
                           k < n ? std::log(static_cast<double>(k)) + at(n - 1, k) : -kInf);
    }
  }
}

double LogCombinatorics::log_stirling2nd(int n, int k) const {
  if (k < 1 || k > n || n > cap_) {
    throw std::invalid_argument("S(n,k) requires 1 <= k <= n <= cap, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  return table(n, k);
}

double LogCombinatorics::log_stirling_restricted(int n, int k) const {
  if (n == 1 && k == 1) return 0.0;
  if (k < 2 || n < 2 || k > n || n > cap_ + 1) {
    throw std::invalid_argument("S^2(n,k) requires 2 <= k <= n (or n = k = 1), got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
  return table(n - 1, k - 1);
}

double log_inv_prior(int dprime, int dpp, const PenaltySpec& spec, const LogCombinatorics& lc) {
  if (dprime < 0 || dprime > dpp) {
    throw std::invalid_argument("prior requires 0 <= d' <= d''");
  }
  if (dpp > spec.n - 1) throw std::invalid_argument("prior requires d'' <= N-1");
  if (dprime == 0 && dpp > 0) return kInf;  // empty model class, zero prior mass
  return log_b_n(spec.n) + lc.log_stirling_restricted(dpp + 1, dprime + 1) +
         log_binomial(spec.n, dpp) + dprime + dpp;
}

double log_inv_prior(int dprime, int dpp, const PenaltySpec& spec) {
  LogCombinatorics lc(dpp > 0 ? dpp : 1);
  return log_inv_prior(dprime, dpp, spec, lc);
}

double pen(int dprime, int dpp, const PenaltySpec& spec, const LogCombinatorics& lc) {
  double lip = log_inv_prior(dprime, dpp, spec, lc);
  if (dprime == 0) {
    if (!spec.zero_dprime_ln_n) {
      throw std::domain_error("pen undefined at d' = 0 without the ln N convention");
    }
    return 2.0 * lip + std::log(static_cast<double>(spec.n));
  }
  return 2.0 * lip + (dprime + 1) * std::log(static_cast<double>(spec.n) / dprime);
}

double pen(int dprime, int dpp, const PenaltySpec& spec) {
  LogCombinatorics lc(dpp > 0 ? dpp : 1);
  return pen(dprime, dpp, spec, lc);
}

}  // namespace segclust
