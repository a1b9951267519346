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

#include "hetldp/multidim_mech.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "hetldp/budgets.hpp"
#include "hetldp/random.hpp"

namespace hetldp {
namespace {

// Independent oracle for sqrt(pi) * Gamma((d+1)/2) / Gamma(d/2) via the
// recurrence R(d+1) = (d/2) / R(d), R(1) = 1/sqrt(pi); avoids lgamma entirely.
long double gamma_ratio_oracle(std::size_t d) {
  long double r = 1.0L / std::sqrt(std::numbers::pi_v<long double>);
  for (std::size_t k = 1; k < d; ++k) {
    r = (static_cast<long double>(k) / 2.0L) / r;
  }
  return std::sqrt(std::numbers::pi_v<long double>) * r;
}

TEST(DuchiRadiusTest, ClosedFormsInLowDimensions) {
  const double c1 = rr_scale(1.0).c;
  // d=1: B = c r;  d=2: B = (pi/2) c r;  d=3: B = 2 c r. These are the radii
  // that make the randomizer's output mean equal its input.
  EXPECT_NEAR(duchi_radius(1, 2.0, 1.0), c1 * 2.0, 1e-12);
  EXPECT_NEAR(duchi_radius(2, 2.0, 1.0), std::numbers::pi / 2.0 * c1 * 2.0, 1e-12);
  EXPECT_NEAR(duchi_radius(3, 2.0, 1.0), 2.0 * c1 * 2.0, 1e-12);
}

TEST(DuchiRadiusTest, MatchesRecurrenceOracleAcrossDimensions) {
  const double c = rr_scale(0.5).c;
  for (std::size_t d = 1; d <= 400; ++d) {
    double expected = c * 1.5 * static_cast<double>(gamma_ratio_oracle(d));
    EXPECT_NEAR(duchi_radius(d, 1.5, 0.5) / expected, 1.0, 1e-12) << "d=" << d;
  }
}

TEST(DuchiRadiusTest, NoOverflowAtExtremeDimension) {
  double b = duchi_radius(1000000, 1.0, 0.5);
  EXPECT_TRUE(std::isfinite(b));
  // Asymptotically B ~ c r sqrt(pi d / 2).
  double asymptotic = rr_scale(0.5).c * std::sqrt(std::numbers::pi * 1000000.0 / 2.0);
  EXPECT_NEAR(b / asymptotic, 1.0, 1e-3);
}

TEST(DuchiRadiusTest, RejectsInvalidArguments) {
  EXPECT_THROW(duchi_radius(0, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(duchi_radius(3, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(duchi_radius(3, 1.0, 0.0), std::invalid_argument);
}

TEST(HemisphereMassTest, ClosedForms) {
  EXPECT_NEAR(duchi_hemisphere_mass(std::log(3.0), 1.0), 0.75, 1e-15);
  EXPECT_DOUBLE_EQ(duchi_hemisphere_mass(0.7, 0.0), 0.5);
  EXPECT_NEAR(duchi_hemisphere_mass(0.5, 0.5), 0.561229665600927282, 1e-15);
  EXPECT_THROW(duchi_hemisphere_mass(1.0, -0.1), std::invalid_argument);
  EXPECT_THROW(duchi_hemisphere_mass(1.0, 1.1), std::invalid_argument);
}

TEST(DuchiPrivatizeTest, OutputNormIsExactlyTheRadius) {
  RngStream rng(41, 0);
  const double b = duchi_radius(4, 2.0, 0.7);
  BallPoint x{{0.3, -0.2, 0.1, 0.4}, 2.0};
  for (int i = 0; i < 10000; ++i) {
    DuchiReport rep = duchi_privatize(x, 0.7, rng);
    EXPECT_DOUBLE_EQ(rep.point.radius, b);
    EXPECT_NEAR(l2_norm(rep.point.coords) / b, 1.0, 1e-9);
  }
}

TEST(DuchiPrivatizeTest, ZeroInputIsCenteredComponentwise) {
  RngStream rng(42, 0);
  const std::size_t d = 3;
  const int n = 100000;
  BallPoint x{{0.0, 0.0, 0.0}, 1.0};
  std::vector<double> sum(d, 0.0);
  double b = duchi_radius(d, 1.0, 0.6);
  for (int i = 0; i < n; ++i) {
    DuchiReport rep = duchi_privatize(x, 0.6, rng);
    for (std::size_t j = 0; j < d; ++j) sum[j] += rep.point.coords[j];
  }
  double se = b / std::sqrt(static_cast<double>(d) * n);
  for (std::size_t j = 0; j < d; ++j) EXPECT_NEAR(sum[j] / n, 0.0, 4.0 * se);
}

// The unbiasedness identity E[Y] = x at Monte Carlo scale.
TEST(DuchiPrivatizeTest, OutputMeanMatchesInput) {
  RngStream rng(43, 0);
  const std::size_t d = 5;
  const int n = 200000;
  BallPoint x{{0.5, 0.0, 0.0, 0.0, 0.0}, 1.0};  // ||x|| = r/2
  std::vector<double> sum(d, 0.0), sumsq(d, 0.0);
  for (int i = 0; i < n; ++i) {
    DuchiReport rep = duchi_privatize(x, 0.5, rng);
    for (std::size_t j = 0; j < d; ++j) {
      sum[j] += rep.point.coords[j];
      sumsq[j] += rep.point.coords[j] * rep.point.coords[j];
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    double mean = sum[j] / n;
    double sd = std::sqrt(sumsq[j] / n - mean * mean);
    EXPECT_NEAR(mean, x.coords[j], 4.0 * sd / std::sqrt(static_cast<double>(n)))
        << "coordinate " << j;
  }
}

TEST(DuchiPrivatizeTest, HemisphereMassMatchesClosedForm) {
  RngStream rng(44, 0);
  const int n = 100000;
  const double eps = 0.8, norm_fraction = 0.6;
  BallPoint x{{norm_fraction, 0.0, 0.0}, 1.0};
  std::vector<double> direction{1.0, 0.0, 0.0};
  int agree = 0;
  for (int i = 0; i < n; ++i) {
    if (dot(duchi_privatize(x, eps, rng).point.coords, direction) > 0) ++agree;
  }
  double p = duchi_hemisphere_mass(eps, norm_fraction);
  double ci = 2.5758 * std::sqrt(p * (1 - p) / n);  // 99% binomial interval
  EXPECT_NEAR(static_cast<double>(agree) / n, p, ci);
}

// In one dimension the randomizer is exactly randomized response on the sign,
// scaled onto {±c r}: compare the two-point distributions analytically.
TEST(DuchiPrivatizeTest, DimensionOneEqualsScaledRandomizedResponse) {
  const double r = 1.0, eps = 0.9;
  const double c = rr_scale(eps).c;
  EXPECT_NEAR(duchi_radius(1, r, eps), c * r, 1e-12);
  const double keep = rr_keep_probability(eps);

  for (double x : {-1.0, -0.5, -0.25, 0.25, 0.75, 1.0}) {
    // Direct route: hemisphere mass toward +1.
    double p_direct = 0.5 + (x / (2.0 * r)) * std::tanh(eps / 2.0);
    // Composite route: randomized rounding of x to ±r, then sign-RR.
    double p_round = 0.5 + x / (2.0 * r);
    double p_composite = p_round * keep + (1.0 - p_round) * (1.0 - keep);
    EXPECT_NEAR(p_direct, p_composite, 1e-12) << "x=" << x;
  }

  // Empirical check at x = +r: support {±c r}, mean r.
  RngStream rng(45, 0);
  const int n = 200000;
  BallPoint x{{r}, r};
  int plus = 0;
  for (int i = 0; i < n; ++i) {
    double y = duchi_privatize(x, eps, rng).point.coords[0];
    ASSERT_TRUE(y == c * r || y == -c * r);
    if (y > 0) ++plus;
  }
  double freq = static_cast<double>(plus) / n;
  EXPECT_NEAR(freq, keep, 2.5758 * std::sqrt(keep * (1 - keep) / n));
  double mean = c * r * (2.0 * freq - 1.0);
  EXPECT_NEAR(mean, r, 4.0 * c * r / std::sqrt(static_cast<double>(n)));
}

TEST(DuchiPrivatizeTest, ReplaysBitExactly) {
  BallPoint x{{0.1, 0.2}, 1.0};
  RngStream a(77, 3), b(77, 3);
  for (int i = 0; i < 50; ++i) {
    DuchiReport ra = duchi_privatize(x, 0.4, a);
    DuchiReport rb = duchi_privatize(x, 0.4, b);
    EXPECT_EQ(ra.point.coords, rb.point.coords);
  }
}

TEST(DuchiPrivatizeTest, AcceptsInputsOnTheNormToleranceBoundary) {
  // ||x|| marginally above r but inside the 1e-9 acceptance band must not
  // trip the direction coin.
  RngStream rng(46, 0);
  double r = 1.0;
  BallPoint x{{r * (1.0 + 0.5e-9), 0.0}, r};
  for (int i = 0; i < 100; ++i) {
    DuchiReport rep = duchi_privatize(x, 0.5, rng);
    EXPECT_NEAR(l2_norm(rep.point.coords), duchi_radius(2, r, 0.5), 1e-6);
  }
}

TEST(DuchiPrivatizeTest, RejectsInvalidInputs) {
  RngStream rng(1, 0);
  EXPECT_THROW(duchi_privatize(BallPoint{{1.5, 0.0}, 1.0}, 1.0, rng),
               std::invalid_argument);
  EXPECT_THROW(duchi_privatize(BallPoint{{0.5}, 0.0}, 1.0, rng), std::invalid_argument);
  EXPECT_THROW(duchi_privatize(BallPoint{{}, 1.0}, 1.0, rng), std::invalid_argument);
  EXPECT_THROW(duchi_privatize(BallPoint{{0.5}, 1.0}, 0.0, rng), std::invalid_argument);
}

DuchiReport fixed_report(std::vector<double> coords, double eps, double r) {
  double norm = l2_norm(coords);
  return DuchiReport{SpherePoint{std::move(coords), norm}, eps, r};
}

TEST(MultidimEstimateTest, IdenticalReportsPassThrough) {
  PrivacyBudgets budgets({0.5, 1.0, 0.7});
  std::vector<DuchiReport> reports;
  for (double e : budgets.epsilons()) reports.push_back(fixed_report({0.3, -0.4}, e, 1.0));
  VectorEstimate est = multidim_estimate(reports, budgets);
  EXPECT_NEAR(est.theta_hat[0], 0.3, 1e-14);
  EXPECT_NEAR(est.theta_hat[1], -0.4, 1e-14);
}

TEST(MultidimEstimateTest, TwoUserWeightsAreEpsilonSquared) {
  PrivacyBudgets budgets({1.0, 0.5});
  std::vector<DuchiReport> reports{fixed_report({1.0, 0.0}, 1.0, 2.0),
                                   fixed_report({0.0, 1.0}, 0.5, 2.0)};
  VectorEstimate est = multidim_estimate(reports, budgets);
  EXPECT_NEAR(est.theta_hat[0], 0.8, 1e-14);
  EXPECT_NEAR(est.theta_hat[1], 0.2, 1e-14);
}

TEST(MultidimEstimateTest, SingleUserPassesThrough) {
  PrivacyBudgets budgets({0.4});
  std::vector<DuchiReport> reports{fixed_report({0.1, 0.2, -0.3}, 0.4, 1.0)};
  VectorEstimate est = multidim_estimate(reports, budgets);
  EXPECT_EQ(est.theta_hat, reports[0].point.coords);
}

TEST(MultidimEstimateTest, NormCapProjectsOntoBall) {
  PrivacyBudgets budgets({1.0, 1.0});
  std::vector<DuchiReport> reports{fixed_report({5.0, 0.0}, 1.0, 1.0),
                                   fixed_report({5.0, 0.0}, 1.0, 1.0)};
  VectorEstimate est = multidim_estimate(reports, budgets);
  EXPECT_TRUE(est.norm_capped);
  EXPECT_NEAR(l2_norm(est.theta_hat), 1.0, 1e-12);
  EXPECT_NEAR(est.theta_raw[0], 5.0, 1e-12);

  VectorEstimateOptions opts;
  opts.norm_cap = false;
  VectorEstimate raw = multidim_estimate(reports, budgets, opts);
  EXPECT_FALSE(raw.norm_capped);
  EXPECT_NEAR(raw.theta_hat[0], 5.0, 1e-12);
}

TEST(MultidimEstimateTest, RejectsMixedGeometry) {
  PrivacyBudgets budgets({1.0, 1.0});
  std::vector<DuchiReport> dim_mismatch{fixed_report({1.0, 0.0}, 1.0, 1.0),
                                        fixed_report({1.0, 0.0, 0.0}, 1.0, 1.0)};
  EXPECT_THROW(multidim_estimate(dim_mismatch, budgets), std::invalid_argument);

  std::vector<DuchiReport> radius_mismatch{fixed_report({1.0, 0.0}, 1.0, 1.0),
                                           fixed_report({1.0, 0.0}, 1.0, 2.0)};
  EXPECT_THROW(multidim_estimate(radius_mismatch, budgets), std::invalid_argument);

  std::vector<DuchiReport> too_few{fixed_report({1.0, 0.0}, 1.0, 1.0)};
  EXPECT_THROW(multidim_estimate(too_few, budgets), std::invalid_argument);
}

TEST(MultidimBoundShapeTest, FrozenExamples) {
  // Saturation: d + log(1/beta) >= sum eps^2 caps at r^2.
  PrivacyBudgets weak({0.5});
  EXPECT_DOUBLE_EQ(multidim_bound_shape(weak, 0.1, 8, 2.0), 4.0);

  PrivacyBudgets hundred(std::vector<double>(100, 1.0));
  EXPECT_NEAR(multidim_bound_shape(hundred, std::exp(-1.0), 9, 1.0), 0.1, 1e-12);
  // Doubling r quadruples the shape.
  EXPECT_NEAR(multidim_bound_shape(hundred, std::exp(-1.0), 9, 2.0), 0.4, 1e-12);
}

TEST(MultidimBoundShapeTest, RejectsBadBeta) {
  PrivacyBudgets budgets({1.0});
  EXPECT_THROW(multidim_bound_shape(budgets, 0.0, 3, 1.0), std::invalid_argument);
  EXPECT_THROW(multidim_bound_shape(budgets, 1.2, 3, 1.0), std::invalid_argument);
}

}  // namespace
}  // namespace hetldp
