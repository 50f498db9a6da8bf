#pragma once

#include <vector>

namespace segclust {

/// Parameters of the selection criterion
///   Crit(m) = ||y - fhat_m||^2 + sigma2 * k * pen(d', d'').
struct PenaltySpec {
  int n = 0;                     // sequence length N
  double k = 6.0;                // penalty multiplier K > 0
  double sigma2 = 1.0;           // known noise variance > 0
  int max_changes = 1;           // D, 1 <= D <= N-1
  bool zero_dprime_ln_n = true;  // see pen() below

  void validate() const;
};

/// ln C(n, k) via log-Gamma. Requires 0 <= k <= n.
double log_binomial(int n, int k);

/// ln of the prior normalizer
///   B_n = e^3/((e-1)^2(e+1)) * (1 - e^{-2n} - e^{-n-1} + e^{-2n-1}
///                                 - e^{-n-2} + e^{-2n-2}).
double log_b_n(int n);

/// Log-domain Stirling numbers of the second kind, tabulated once up to a
/// cap with the recurrence S(n,k) = S(n-1,k-1) + k S(n-1,k) evaluated by
/// stable log-sums. S(2001, k) overflows any fixed-width integer, hence
/// the log domain.
class LogCombinatorics {
 public:
  explicit LogCombinatorics(int cap);

  int cap() const { return cap_; }

  /// ln S(n, k). Requires 1 <= k <= n <= cap.
  double log_stirling2nd(int n, int k) const;

  /// ln S^2(n, k), the number of k-class partitions of [1, n] with
  /// within-class spacing >= 2; equals S(n-1, k-1). Defined for
  /// 2 <= k <= n <= cap, plus S^2(1, 1) = 1 as the empty-constraint case.
  double log_stirling_restricted(int n, int k) const;

  double log_binomial(int n, int k) const { return segclust::log_binomial(n, k); }

 private:
  double table(int n, int k) const {
    return table_[static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) + 1) / 2 +
                  static_cast<std::size_t>(k)];
  }

  int cap_ = 0;
  std::vector<double> table_;  // triangular, ln S(n, k) for 0 <= k <= n <= cap
};

/// ln(1/p_m) for a model with dimensions (d', d''):
///   ln B_N + ln S^2(d''+1, d'+1) + ln C(N, d'') + d' + d''.
/// Requires 0 <= d' <= d'' <= N-1. For d' = 0 < d'' the model class is
/// empty (a single cluster cannot hold several maximal segments): the
/// prior mass is zero and +infinity is returned, which excludes such
/// cells from selection.
double log_inv_prior(int dprime, int dpp, const PenaltySpec& spec, const LogCombinatorics& lc);
double log_inv_prior(int dprime, int dpp, const PenaltySpec& spec);

/// pen(d', d'') = 2 ln(1/p_m) + (d'+1) ln(N/d').
///
/// The last term is undefined at d' = 0; with spec.zero_dprime_ln_n set
/// (the default) it is replaced by ln N, otherwise d' = 0 is rejected and
/// the penalty is only defined on the verbatim domain d' >= 1.
double pen(int dprime, int dpp, const PenaltySpec& spec, const LogCombinatorics& lc);
double pen(int dprime, int dpp, const PenaltySpec& spec);

}  // namespace segclust
