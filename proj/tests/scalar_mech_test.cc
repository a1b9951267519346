//
// Copyright 2026 The hetldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "hetldp/scalar_mech.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "hetldp/budgets.hpp"
#include "hetldp/random.hpp"

namespace hetldp {
namespace {

TEST(LaplacePrivatizeTest, RejectsOutOfRangeInputs) {
  RngStream rng(1, 0);
  EXPECT_THROW(laplace_privatize(1.5, 1.0, rng), std::invalid_argument);
  EXPECT_THROW(laplace_privatize(-1.0001, 1.0, rng), std::invalid_argument);
  EXPECT_THROW(laplace_privatize(std::nan(""), 1.0, rng), std::invalid_argument);
  EXPECT_THROW(laplace_privatize(0.5, 0.0, rng), std::invalid_argument);
  EXPECT_THROW(laplace_privatize(0.5, -1.0, rng), std::invalid_argument);
}

TEST(LaplacePrivatizeTest, HugeEpsilonAddsVanishingNoise) {
  RngStream rng(2, 0);
  for (int i = 0; i < 1000; ++i) {
    ScalarReport rep = laplace_privatize(0.25, 1e9, rng);
    EXPECT_NEAR(rep.value, 0.25, 1e-6);
  }
}

TEST(LaplacePrivatizeTest, ConditionallyUnbiased) {
  RngStream rng(3, 0);
  const int n = 100000;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += laplace_privatize(0.3, 1.0, rng).value;
  // Noise std is sqrt(2)*scale with scale = 2.
  double se = 2.0 * std::sqrt(2.0) / std::sqrt(static_cast<double>(n));
  EXPECT_NEAR(sum / n, 0.3, 3.0 * se);
}

TEST(LaplacePrivatizeTest, ReplaysBitExactly) {
  RngStream a(7, 42), b(7, 42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(laplace_privatize(0.1, 0.5, a).value, laplace_privatize(0.1, 0.5, b).value);
  }
}

std::vector<ScalarReport> make_reports(const std::vector<double>& values,
                                       const std::vector<double>& eps,
                                       ScalarMechanism mech) {
  std::vector<ScalarReport> reports;
  for (std::size_t i = 0; i < values.size(); ++i) {
    reports.push_back(ScalarReport{values[i], eps[i], mech});
  }
  return reports;
}

TEST(LaplaceEstimateTest, AllZeroReportsGiveZero) {
  PrivacyBudgets budgets({1.0, 0.5, 0.2});
  auto reports = make_reports({0, 0, 0}, budgets.epsilons(), ScalarMechanism::kLaplace);
  EXPECT_DOUBLE_EQ(laplace_estimate(reports, budgets).theta_hat, 0.0);
}

TEST(LaplaceEstimateTest, FrozenTwoUserExample) {
  PrivacyBudgets budgets({1.0, 0.5});
  auto reports = make_reports({1.0, -1.0}, budgets.epsilons(), ScalarMechanism::kLaplace);
  // Weights (5/7, 2/7), so the estimate is 3/7.
  ScalarEstimate est = laplace_estimate(reports, budgets);
  EXPECT_NEAR(est.theta_hat, 3.0 / 7.0, 1e-14);
  EXPECT_FALSE(est.clamped);
  EXPECT_EQ(est.scheme, WeightScheme::kLaplaceInverse);
}

TEST(LaplaceEstimateTest, HomogeneousBudgetsReduceToSampleMean) {
  PrivacyBudgets budgets(std::vector<double>(4, 0.8));
  auto reports =
      make_reports({0.5, -0.25, 0.75, 0.1}, budgets.epsilons(), ScalarMechanism::kLaplace);
  EXPECT_NEAR(laplace_estimate(reports, budgets).theta_hat, (0.5 - 0.25 + 0.75 + 0.1) / 4.0,
              1e-14);
}

TEST(LaplaceEstimateTest, ClampRetainsRawValue) {
  PrivacyBudgets budgets({1.0, 1.0});
  auto reports = make_reports({10.0, 10.0}, budgets.epsilons(), ScalarMechanism::kLaplace);
  ScalarEstimate est = laplace_estimate(reports, budgets);
  EXPECT_DOUBLE_EQ(est.theta_hat, 1.0);
  EXPECT_TRUE(est.clamped);
  EXPECT_NEAR(est.theta_raw, 10.0, 1e-12);

  ScalarEstimateOptions no_clamp;
  no_clamp.clamp = false;
  ScalarEstimate raw = laplace_estimate(reports, budgets, no_clamp);
  EXPECT_FALSE(raw.clamped);
  EXPECT_DOUBLE_EQ(raw.theta_hat, raw.theta_raw);
}

TEST(LaplaceEstimateTest, ZeroFallbackTriggersWhenShapeSaturates) {
  // A single weak user: log(1/beta)/eps^2 >= 1 comfortably.
  PrivacyBudgets budgets({0.1});
  auto reports = make_reports({0.7}, budgets.epsilons(), ScalarMechanism::kLaplace);
  ScalarEstimateOptions opts;
  opts.zero_fallback_beta = 0.1;
  ScalarEstimate est = laplace_estimate(reports, budgets, opts);
  EXPECT_TRUE(est.zero_fallback);
  EXPECT_DOUBLE_EQ(est.theta_hat, 0.0);
  EXPECT_DOUBLE_EQ(est.theta_raw, 0.7);

  // A strong population: fallback must not trigger.
  PrivacyBudgets strong(std::vector<double>(100, 1.0));
  auto reports2 = make_reports(std::vector<double>(100, 0.25), strong.epsilons(),
                               ScalarMechanism::kLaplace);
  ScalarEstimate est2 = laplace_estimate(reports2, strong, opts);
  EXPECT_FALSE(est2.zero_fallback);
  EXPECT_NEAR(est2.theta_hat, 0.25, 1e-12);
}

TEST(LaplaceEstimateTest, RejectsMismatches) {
  PrivacyBudgets budgets({1.0, 0.5});
  auto reports = make_reports({0.1, 0.2}, budgets.epsilons(), ScalarMechanism::kRr);
  EXPECT_THROW(laplace_estimate(reports, budgets), std::invalid_argument);

  auto short_reports =
      make_reports({0.1}, {budgets.epsilons()[0]}, ScalarMechanism::kLaplace);
  EXPECT_THROW(laplace_estimate(short_reports, budgets), std::invalid_argument);

  auto wrong_eps = make_reports({0.1, 0.2}, {1.0, 0.7}, ScalarMechanism::kLaplace);
  EXPECT_THROW(laplace_estimate(wrong_eps, budgets), std::invalid_argument);
}

TEST(RrPrivatizeTest, RejectsNonBinaryInputs) {
  RngStream rng(1, 0);
  EXPECT_THROW(rr_privatize(0.5, 1.0, rng), std::invalid_argument);
  EXPECT_THROW(rr_privatize(0.0, 1.0, rng), std::invalid_argument);
  EXPECT_THROW(rr_privatize(-2.0, 1.0, rng), std::invalid_argument);
}

TEST(RrKeepProbabilityTest, ClosedForms) {
  EXPECT_NEAR(rr_keep_probability(std::log(3.0)), 0.75, 1e-15);
  EXPECT_NEAR(rr_keep_probability(1e-12), 0.5, 1e-12);
  EXPECT_NEAR(rr_keep_probability(1.0), 0.73105857863000487, 1e-15);
}

TEST(RrPrivatizeTest, KeepRateMatchesBinomialInterval) {
  RngStream rng(5, 0);
  const int n = 1000000;
  int kept = 0;
  for (int i = 0; i < n; ++i) {
    if (rr_privatize(1.0, 1.0, rng).value == 1.0) ++kept;
  }
  EXPECT_NEAR(static_cast<double>(kept) / n, 0.73105857863000487, 0.0015);
}

TEST(RrPrivatizeTest, OutputsAreExactlyPlusMinusOne) {
  RngStream rng(6, 0);
  for (int i = 0; i < 1000; ++i) {
    double y = rr_privatize(i % 2 ? 1.0 : -1.0, 0.3, rng).value;
    EXPECT_TRUE(y == 1.0 || y == -1.0);
  }
}

TEST(RrEstimateTest, HomogeneousAllOnesGivesDebiasConstant) {
  PrivacyBudgets budgets(std::vector<double>(5, 1.0));
  auto reports =
      make_reports(std::vector<double>(5, 1.0), budgets.epsilons(), ScalarMechanism::kRr);
  ScalarEstimate est = rr_estimate(reports, budgets);
  EXPECT_NEAR(est.theta_raw, 2.163953413738652849, 1e-13);
  EXPECT_DOUBLE_EQ(est.theta_hat, 1.0);
  EXPECT_TRUE(est.clamped);
}

TEST(RrEstimateTest, AlternatingSignsCancel) {
  PrivacyBudgets budgets(std::vector<double>(6, 0.4));
  auto reports =
      make_reports({1, -1, 1, -1, 1, -1}, budgets.epsilons(), ScalarMechanism::kRr);
  EXPECT_NEAR(rr_estimate(reports, budgets).theta_hat, 0.0, 1e-14);
}

TEST(RrEstimateTest, FrozenHeterogeneousExample) {
  PrivacyBudgets budgets({1.0, 0.5});
  auto reports = make_reports({1.0, 1.0}, budgets.epsilons(), ScalarMechanism::kRr);
  ScalarEstimateOptions opts;
  opts.clamp = false;
  // 30-digit oracle: w1 c1 + w2 c2 = 2.58478647727521095.
  EXPECT_NEAR(rr_estimate(reports, budgets, opts).theta_hat, 2.584786477275210947, 1e-12);
}

TEST(RrEstimateTest, RejectsMismatchesAndNonBinaryValues) {
  PrivacyBudgets budgets({1.0, 0.5});
  auto laplace_reports =
      make_reports({1.0, 1.0}, budgets.epsilons(), ScalarMechanism::kLaplace);
  EXPECT_THROW(rr_estimate(laplace_reports, budgets), std::invalid_argument);

  auto bad_value = make_reports({1.0, 0.5}, budgets.epsilons(), ScalarMechanism::kRr);
  EXPECT_THROW(rr_estimate(bad_value, budgets), std::invalid_argument);
}

TEST(RrDebiasTest, AnalyticIdentityAcrossGrid) {
  // c * (keep - flip) == 1 for every epsilon: the debiased report is exactly
  // conditionally unbiased. keep - flip = (e^eps - 1)/(e^eps + 1), evaluated
  // through expm1 so tiny budgets keep full precision.
  for (int k = 0; k < 1000; ++k) {
    double eps = std::pow(10.0, -6.0 + 7.0 * k / 999.0);
    double keep_minus_flip = std::expm1(eps) / (std::exp(eps) + 1.0);
    double identity = rr_scale(eps).c * keep_minus_flip;
    EXPECT_NEAR(identity, 1.0, 1e-10) << "eps=" << eps;
  }
}

// Monte Carlo unbiasedness of the full privatize + estimate pipelines with a
// mixed-budget population.
TEST(ScalarPipelineTest, EstimatorsAreUnbiasedAtMonteCarloScale) {
  const int trials = 20000;
  const std::size_t n = 500;
  const double theta = 0.3;
  std::vector<double> eps(n);
  for (std::size_t i = 0; i < n; ++i) eps[i] = (i % 2 == 0) ? 0.2 : 1.0;
  PrivacyBudgets budgets(eps);

  ScalarEstimateOptions opts;
  opts.clamp = false;

  for (auto mech : {ScalarMechanism::kLaplace, ScalarMechanism::kRr}) {
    double sum = 0, sumsq = 0;
    for (int t = 0; t < trials; ++t) {
      RngStream data(901 + t, 0);
      std::vector<ScalarReport> reports;
      reports.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        double x = data.bernoulli(0.5 * (1 + theta)) ? 1.0 : -1.0;
        RngStream user(9000 + t, i);
        reports.push_back(mech == ScalarMechanism::kLaplace
                              ? laplace_privatize(x, eps[i], user)
                              : rr_privatize(x, eps[i], user));
      }
      double est = mech == ScalarMechanism::kLaplace
                       ? laplace_estimate(reports, budgets, opts).theta_hat
                       : rr_estimate(reports, budgets, opts).theta_hat;
      sum += est;
      sumsq += est * est;
    }
    double mean = sum / trials;
    double sd = std::sqrt(sumsq / trials - mean * mean);
    EXPECT_NEAR(mean, theta, 4.0 * sd / std::sqrt(static_cast<double>(trials)))
        << "mechanism " << static_cast<int>(mech);
  }
}

}  // namespace
}  // namespace hetldp
