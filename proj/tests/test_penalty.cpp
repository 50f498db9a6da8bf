#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "segclust/penalty.hpp"
#include "support/oracles.hpp"

using namespace segclust;

namespace {

// Exact big-integer binomial for ranges past 64 bits (C(2000,12) ~ 8e30).
long double log_binomial_exact(int n, int k) {
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  }
  return std::log(static_cast<long double>(c));
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("log binomial") {
  CHECK(log_binomial(7, 0) == doctest::Approx(0.0));
  CHECK(log_binomial(5, 2) == doctest::Approx(std::log(10.0)));  // Pascal oracle below
  auto pascal = testsupport::pascal_triangle(30);
  for (int n = 1; n <= 30; ++n) {
    for (int k = 0; k <= n; ++k) {
      double exact = std::log(static_cast<double>(pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
      CHECK(log_binomial(n, k) == doctest::Approx(exact).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(log_binomial(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(log_binomial(3, -1), std::invalid_argument);
}

TEST_CASE("binomial sandwich bounds") {
  for (int n : {4, 10, 25, 40, 60}) {
    for (int k = 1; k <= n - 1; ++k) {
      double value = log_binomial(n, k);
      double lower = k * std::log(static_cast<double>(n) / k);
      double upper = k * std::log(n * std::exp(1.0) / k);
      CHECK(value >= lower - 1e-9);
      CHECK(value <= upper + 1e-9);
    }
  }
}

TEST_CASE("log stirling second kind") {
  LogCombinatorics lc(25);
  CHECK(lc.log_stirling2nd(6, 6) == doctest::Approx(0.0));
  CHECK(lc.log_stirling2nd(6, 1) == doctest::Approx(0.0));
  CHECK(lc.log_stirling2nd(4, 2) == doctest::Approx(std::log(7.0)));
  CHECK(testsupport::count_partitions_with_classes(4, 2) == 7);  // enumeration oracle

  auto exact = testsupport::stirling_triangle(25);
  for (int n = 1; n <= 25; ++n) {
    for (int k = 1; k <= n; ++k) {
      double reference = std::log(static_cast<double>(exact[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
      CHECK(lc.log_stirling2nd(n, k) == doctest::Approx(reference).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(lc.log_stirling2nd(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(lc.log_stirling2nd(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(lc.log_stirling2nd(26, 3), std::invalid_argument);
}

TEST_CASE("stirling sandwich bounds up to n = 60") {
  LogCombinatorics lc(60);
  for (int n : {4, 10, 20, 35, 50, 60}) {
    for (int k = 1; k <= n - 1; ++k) {
      double value = lc.log_stirling2nd(n, k);
      double lower = (n - k) * std::log(static_cast<double>(k));
      double upper = std::log(0.5) + k * std::log(n * std::exp(1.0)) + (n - 2 * k) * std::log(static_cast<double>(k));
      CHECK(value >= lower - 1e-9);
      CHECK(value <= upper + 1e-9);
    }
  }
}

TEST_CASE("restricted stirling") {
  LogCombinatorics lc(10);
  CHECK(lc.log_stirling_restricted(1, 1) == 0.0);            // empty-constraint case
  CHECK(lc.log_stirling_restricted(4, 2) == doctest::Approx(0.0));  // S(3,1) = 1
  CHECK(lc.log_stirling_restricted(5, 3) == doctest::Approx(std::log(7.0)));  // S(4,2)
  CHECK_THROWS_AS(lc.log_stirling_restricted(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(lc.log_stirling_restricted(2, 3), std::invalid_argument);
}

TEST_CASE("prior normalizer B_n") {
  const double e = std::exp(1.0);
  const double limit = e * e * e / ((e - 1) * (e - 1) * (e + 1));
  for (int n = 1; n <= 100; ++n) {
    double bn = std::exp(log_b_n(n));
    CHECK(bn <= limit * (1 + 1e-12));
    CHECK(bn >= limit * (1 - 3 * std::exp(-(n + 1.0))) - 1e-12);
  }
  CHECK(std::exp(log_b_n(2000)) == doctest::Approx(limit).epsilon(1e-12));
  CHECK_THROWS_AS(log_b_n(0), std::invalid_argument);
}

TEST_CASE("log inverse prior") {
  PenaltySpec spec5{.n = 5, .k = 6.0, .sigma2 = 1.0, .max_changes = 4};
  CHECK(log_inv_prior(0, 0, spec5) == doctest::Approx(log_b_n(5)));
  CHECK(log_inv_prior(1, 1, spec5) == doctest::Approx(log_b_n(5) + std::log(5.0) + 2.0));

  CHECK(log_inv_prior(0, 3, spec5) == kInf);  // empty model class
  CHECK_THROWS_AS(log_inv_prior(2, 1, spec5), std::invalid_argument);
  CHECK_THROWS_AS(log_inv_prior(1, 5, spec5), std::invalid_argument);
}

TEST_CASE("inverse prior sandwich (d' >= 1)") {
  for (int n : {4, 12, 30, 60}) {
    PenaltySpec spec{.n = n, .k = 6.0, .sigma2 = 1.0, .max_changes = n - 1};
    LogCombinatorics lc(n);
    for (int dpp = 1; dpp <= n - 1; ++dpp) {
      for (int dprime = 1; dprime <= dpp; ++dprime) {
        double value = log_inv_prior(dprime, dpp, spec, lc);
        double lower = dpp * std::log(dpp * std::exp(1.0)) -
                       dprime * std::log(dpp / std::exp(1.0)) +
                       dpp * std::log(static_cast<double>(n) / dpp);
        double upper = dprime * std::log(dpp * std::exp(2.0)) +
                       dpp * std::log(dprime * std::exp(2.0)) +
                       dpp * std::log(static_cast<double>(n) / dpp);
        CHECK(value >= lower - 1e-9);
        CHECK(value <= upper + 1e-9);
      }
    }
  }
}

TEST_CASE("pen values and conventions") {
  PenaltySpec spec{.n = 2000, .k = 6.0, .sigma2 = 1.0, .max_changes = 20};
  CHECK(pen(0, 0, spec) == doctest::Approx(2.0 * log_b_n(2000) + std::log(2000.0)));

  // (4, 12) against exact big-integer combinatorics: S^2(13,5) = S(12,4)
  auto stirling = testsupport::stirling_triangle(12);
  long double expected = 2.0L * (static_cast<long double>(log_b_n(2000)) +
                                 std::log(static_cast<long double>(stirling[12][4])) +
                                 log_binomial_exact(2000, 12) + 16.0L) +
                         5.0L * std::log(500.0L);
  CHECK(pen(4, 12, spec) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-9));
  CHECK(pen(4, 12, spec) == doctest::Approx(2.0 * log_inv_prior(4, 12, spec) + 5.0 * std::log(500.0)));

  PenaltySpec strict = spec;
  strict.zero_dprime_ln_n = false;
  CHECK_THROWS_AS(pen(0, 0, strict), std::domain_error);
}

TEST_CASE("pen grows with the change-point dimension") {
  PenaltySpec spec{.n = 100, .k = 6.0, .sigma2 = 1.0, .max_changes = 99};
  LogCombinatorics lc(60);
  for (int dprime = 1; dprime <= 5; ++dprime) {
    for (int dpp = dprime; dpp < 50; ++dpp) {
      CHECK(pen(dprime, dpp + 1, spec, lc) > pen(dprime, dpp, spec, lc));
    }
  }
}

TEST_CASE("prior normalizes to one (counting identity)") {
  // Lemma-range sum: d' in [0, N-1], d'' in [d', N], class sizes
  // S^2(d''+1, d'+1) C(N, d''); empty classes contribute e^{-d'-d''}/B_N.
  for (int n = 3; n <= 10; ++n) {
    LogCombinatorics lc(n + 1);
    PenaltySpec spec{.n = n, .k = 6.0, .sigma2 = 1.0, .max_changes = n - 1};
    double total = 0.0;
    for (int dprime = 0; dprime <= n - 1; ++dprime) {
      for (int dpp = dprime; dpp <= n; ++dpp) {
        if (dprime == 0 && dpp > 0) {
          total += std::exp(-static_cast<double>(dprime + dpp) - log_b_n(n));
          continue;
        }
        double log_class_size =
            lc.log_stirling_restricted(dpp + 1, dprime + 1) + log_binomial(n, dpp);
        double log_inv_p = log_b_n(n) + lc.log_stirling_restricted(dpp + 1, dprime + 1) +
                           log_binomial(n, dpp) + dprime + dpp;
        total += std::exp(log_class_size - log_inv_p);
        if (dpp <= n - 1) {
          CHECK(log_inv_prior(dprime, dpp, spec, lc) == doctest::Approx(log_inv_p));
        }
      }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("penalty spec validation") {
  PenaltySpec bad{.n = 10, .k = 0.0, .sigma2 = 1.0, .max_changes = 3};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {.n = 10, .k = 1.0, .sigma2 = -1.0, .max_changes = 3};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {.n = 10, .k = 1.0, .sigma2 = 1.0, .max_changes = 10};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {.n = 10, .k = 1.0, .sigma2 = 1.0, .max_changes = 0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
